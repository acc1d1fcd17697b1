"""Compare the compiled and pure-Python kernel backends.

Runs fixed workloads against both implementations, checks that every
result agrees bit for bit, and prints a timing table.  Usage:

    python3 benchmarks/bench_kernels.py
"""

import time

from trimq import _kernels_py as pure

try:
    from trimq import _kernels as compiled
except ImportError:
    compiled = None


def _grid():
    shapes = [0.55, 1.0, 2.0, 5.5, 17.0, 120.0, 5000.0]
    xs = [0.001, 0.05, 0.2, 0.31830989, 0.5, 0.7, 0.93, 0.999]
    return [(x, a, b) for a in shapes for b in shapes for x in xs]


def workload_reg_inc_beta(mod):
    return [mod.reg_inc_beta(x, a, b) for _ in range(40)
            for (x, a, b) in _grid()]


def workload_beta_pdf(mod):
    return [mod.beta_pdf(x, a, b) for _ in range(200)
            for (x, a, b) in _grid()]


def workload_log_gamma(mod):
    return [mod.log_gamma(0.5 + 0.37 * k) for _ in range(200)
            for k in range(500)]


def workload_hdi(mod):
    shapes = [(2.2, 3.3), (5.5, 5.5), (40.0, 17.0), (300.0, 280.0),
              (5000.0, 5500.0)]
    widths = [0.05, 0.1, 0.31622777, 0.6]
    return [mod.hdi_middle_lower(a, b, w) for _ in range(40)
            for (a, b) in shapes for w in widths]


def workload_norm_quantile(mod):
    return [mod.norm_quantile((k + 0.5) / 200000.0) for k in range(200000)]


def workload_uniforms(mod):
    out = []
    for stream in range(50):
        out.extend(mod.fill_uniforms(12345, stream, 0, 20000))
    return out


WORKLOADS = [
    ("reg_inc_beta", workload_reg_inc_beta),
    ("beta_pdf", workload_beta_pdf),
    ("log_gamma", workload_log_gamma),
    ("hdi_middle_lower", workload_hdi),
    ("norm_quantile", workload_norm_quantile),
    ("fill_uniforms", workload_uniforms),
]


def run(mod, fn):
    started = time.perf_counter()
    result = fn(mod)
    return time.perf_counter() - started, result


def main():
    if compiled is None:
        print("compiled backend not available; timing pure Python only")
    print("%-18s %10s %10s %9s  %s" % ("workload", "pure [s]", "compiled",
                                       "speedup", "parity"))
    for name, fn in WORKLOADS:
        t_pure, r_pure = run(pure, fn)
        if compiled is None:
            print("%-18s %10.3f %10s %9s  %s" % (name, t_pure, "-", "-", "-"))
            continue
        t_c, r_c = run(compiled, fn)
        mismatches = sum(1 for a, b in zip(r_pure, r_c)
                         if a != b and not (a != a and b != b))
        parity = "bit-exact" if mismatches == 0 else "%d MISMATCHES" % mismatches
        print("%-18s %10.3f %10.3f %8.1fx  %s"
              % (name, t_pure, t_c, t_pure / t_c, parity))


if __name__ == "__main__":
    main()
