import math
import subprocess
import sys

import pytest

import trimq
from trimq import backend
from trimq import _kernels_py


def _run(env_value, code):
    import os

    env = dict(os.environ)
    env["TRIMQ_BACKEND"] = env_value
    return subprocess.run([sys.executable, "-c", code], capture_output=True,
                          text=True, env=env)


def test_backend_is_reported():
    assert trimq.BACKEND in ("c", "python")
    assert backend.kernels is not None


def test_forced_pure_backend_gives_same_numbers():
    code = ("import trimq\n"
            "print(trimq.BACKEND)\n"
            "print(repr(trimq.thd_quantile([3.0, 1.0, 2.0, 5.0, 4.0], 0.5)))\n")
    proc = _run("python", code)
    assert proc.returncode == 0, proc.stderr
    lines = proc.stdout.splitlines()
    assert lines[0] == "python"
    here = trimq.thd_quantile([3.0, 1.0, 2.0, 5.0, 4.0], 0.5)
    assert lines[1] == repr(here)


def test_unrecognized_backend_value_fails_fast():
    proc = _run("fortran", "import trimq")
    assert proc.returncode != 0
    assert "TRIMQ_BACKEND" in proc.stderr


def test_explicit_c_request_honored_or_errors():
    proc = _run("c", "import trimq; print(trimq.BACKEND)")
    if backend._c_kernels is not None:
        assert proc.returncode == 0 and proc.stdout.strip() == "c"
    else:
        assert proc.returncode != 0


@pytest.mark.skipif(backend._c_kernels is None,
                    reason="compiled backend not built")
def test_backends_agree_bit_for_bit():
    c = backend._c_kernels
    py = _kernels_py

    for x in [0.5, 1.0, 2.725, 9.99, 10.0, 123.456, 8.5e5]:
        assert c.log_gamma(x) == py.log_gamma(x), x

    shapes = [(0.5, 0.5), (1.0, 3.0), (5.5, 5.5), (2.2, 17.0), (300.0, 41.5)]
    for a, b in shapes:
        for i in range(101):
            x = i / 100.0
            assert c.beta_pdf(x, a, b) == py.beta_pdf(x, a, b), (x, a, b)
            assert c.reg_inc_beta(x, a, b) == py.reg_inc_beta(x, a, b), (x, a, b)

    for a, b, w in [(5.5, 5.5, 0.3162278), (3.0, 7.0, 0.3), (41.0, 2.5, 0.1)]:
        assert c.hdi_middle_lower(a, b, w) == py.hdi_middle_lower(a, b, w)

    for i in range(1, 1000):
        p = i / 1000.0
        assert c.norm_quantile(p) == py.norm_quantile(p), p

    for seed, sid, count, start in [(0, 0, 257, 0), (123, 9, 64, 1000),
                                    (2 ** 64 - 1, 7, 31, 5)]:
        assert (c.fill_uniforms(seed, sid, count, start)
                == py.fill_uniforms(seed, sid, count, start))


def test_kernel_module_docs_name_their_role():
    # the pure module must remain importable on its own (no compiled parts)
    assert math.isfinite(_kernels_py.log_gamma(4.2))
