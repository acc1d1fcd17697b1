"""Quantile estimators over sorted samples.

Three estimators share this module:

* ``hf7_quantile``: the familiar linear-interpolation sample quantile
  (Hyndman-Fan type 7, the default in R and NumPy).
* ``hd_quantile``: Harrell-Davis: an average of all order statistics
  weighted by a Beta((n+1)p, (n+1)(1-p)) distribution sliced at i/n.
* ``thd_quantile``: trimmed Harrell-Davis: the same construction with the
  beta weight distribution truncated to its highest-density interval, so
  only the order statistics near the target quantile carry weight.  The
  default interval width 1/sqrt(n) keeps the weighted window at O(sqrt(n))
  order statistics.

Weight vectors are exposed separately (``hd_weights`` / ``thd_weights``)
for callers that reuse them across samples of the same size.
"""

import math
from dataclasses import dataclass

from .backend import kernels as _k
from .hdi import HdiCase, beta_hdi
from .special import BetaParams

__all__ = [
    "Sample",
    "WeightVector",
    "hf7_quantile",
    "hd_weights",
    "hd_quantile",
    "thd_weights",
    "thd_quantile",
]


class Sample:
    """Sorted, finite, non-empty observations.

    Values are sorted at construction.  Pass presorted=True to skip the
    sort when order is already guaranteed; the guarantee is still verified
    (a linear scan, against a quadratic surprise later).
    """

    __slots__ = ("values",)

    def __init__(self, values, presorted=False):
        vals = [float(v) for v in values]
        if not vals:
            raise ValueError("sample must contain at least one value")
        prev = -math.inf
        ascending = True
        for i, v in enumerate(vals):
            if not math.isfinite(v):
                raise ValueError(
                    "sample values must be finite, got %r at position %d"
                    % (v, i))
            if v < prev:
                ascending = False
                if presorted:
                    raise ValueError(
                        "presorted sample is out of order at position %d" % i)
            prev = v
        if not ascending:
            vals.sort()
        self.values = tuple(vals)

    @property
    def n(self):
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return "Sample(n=%d, min=%g, max=%g)" % (
            self.n, self.values[0], self.values[-1])


def _as_sample(sample):
    return sample if isinstance(sample, Sample) else Sample(sample)


def _check_p(p):
    p = float(p)
    if not (0.0 <= p <= 1.0):  # also rejects NaN
        raise ValueError("p must lie in [0, 1], got %r" % (p,))
    return p


@dataclass(frozen=True)
class WeightVector:
    """Per-order-statistic weights summing to 1.

    support_lo/support_hi are the 1-based indices of the first and last
    strictly positive weight; everything outside is exactly 0.
    """

    weights: tuple
    support_lo: int
    support_hi: int

    @property
    def n(self):
        return len(self.weights)


def _make_weight_vector(weights):
    lo = 0
    hi = -1
    for i, w in enumerate(weights):
        if w > 0.0:
            if hi < 0:
                lo = i
            hi = i
    if hi < 0:
        raise ArithmeticError("weight vector vanished entirely")
    return WeightVector(tuple(weights), lo + 1, hi + 1)


def hf7_quantile(sample, p):
    """Linear-interpolation quantile at h = (n-1)p + 1 (1-based)."""
    sample = _as_sample(sample)
    p = _check_p(p)
    x = sample.values
    n = len(x)
    h = (n - 1) * p + 1.0
    j = int(math.floor(h))
    if j >= n:
        return x[n - 1]
    return x[j - 1] + (h - j) * (x[j] - x[j - 1])


def _shape_params(n, p):
    return BetaParams((n + 1) * p, (n + 1) * (1.0 - p))


def _check_np(n, p):
    n = int(n)
    if n < 1:
        raise ValueError("n must be a positive integer, got %r" % (n,))
    p = _check_p(p)
    if p == 0.0 or p == 1.0:
        # Beta((n+1)p, (n+1)(1-p)) degenerates at the boundary; quantile
        # callers short-circuit to the sample min/max instead.
        raise ValueError(
            "p=%g puts all weight on a sample extreme; use the sample "
            "minimum/maximum directly" % p)
    return n, p


def hd_weights(n, p):
    """Weights W_i = I_{i/n}(a, b) - I_{(i-1)/n}(a, b) over i = 1..n,
    with (a, b) = ((n+1)p, (n+1)(1-p))."""
    n, p = _check_np(n, p)
    params = _shape_params(n, p)
    a, b = params.alpha, params.beta
    weights = [0.0] * n
    prev = 0.0
    for i in range(1, n + 1):
        cur = 1.0 if i == n else _k.reg_inc_beta(i / n, a, b)
        w = cur - prev
        weights[i - 1] = w if w > 0.0 else 0.0
        prev = cur
    return _make_weight_vector(weights)


def hd_quantile(sample, p):
    """Harrell-Davis quantile estimate: the hd_weights dot product."""
    sample = _as_sample(sample)
    p = _check_p(p)
    x = sample.values
    if p == 0.0:
        return x[0]
    if p == 1.0:
        return x[-1]
    wv = hd_weights(len(x), p)
    return math.fsum(w * v for w, v in zip(wv.weights, x))


def thd_weights(n, p, width):
    """Trimmed weights: the beta weight distribution is truncated to its
    highest-density interval [L, R] of the given width and renormalized.

    Index support follows floor/ceil of the interval endpoints scaled by n:
    nonzero weights live only at positions floor(L*n)+1 .. ceil(R*n).
    """
    n, p = _check_np(n, p)
    params = _shape_params(n, p)
    hdi = beta_hdi(params, width)
    if hdi.case is HdiCase.DEGENERATE:
        # both shapes <= 1 is only reachable at n=1, where the single
        # observation takes all the mass regardless of trimming
        if n != 1:
            raise AssertionError(
                "degenerate HDI for n=%d, p=%g; expected only at n=1" % (n, p))
        return WeightVector((1.0,), 1, 1)
    a, b = params.alpha, params.beta
    lower, upper = hdi.lower, hdi.upper
    cdf_lower = _k.reg_inc_beta(lower, a, b)
    denom = _k.reg_inc_beta(upper, a, b) - cdf_lower
    if not denom > 0.0:
        raise ArithmeticError(
            "no probability mass inside the HDI for alpha=%g beta=%g "
            "width=%g" % (a, b, hdi.width))
    i_lo = max(int(math.floor(lower * n)), 0)
    i_hi = min(int(math.ceil(upper * n)), n)

    def trunc_cdf(x):
        if x <= lower:
            return 0.0
        if x >= upper:
            return 1.0
        f = (_k.reg_inc_beta(x, a, b) - cdf_lower) / denom
        return min(max(f, 0.0), 1.0)

    weights = [0.0] * n
    prev = trunc_cdf(i_lo / n)
    for i in range(i_lo + 1, i_hi + 1):
        cur = trunc_cdf(i / n)
        w = cur - prev
        weights[i - 1] = w if w > 0.0 else 0.0
        prev = cur
    return _make_weight_vector(weights)


def thd_quantile(sample, p, width=None):
    """Trimmed Harrell-Davis quantile estimate.

    width=None applies the 1/sqrt(n) default, confining the weighted sum
    to a window of roughly sqrt(n) order statistics.
    """
    sample = _as_sample(sample)
    p = _check_p(p)
    x = sample.values
    if p == 0.0:
        return x[0]
    if p == 1.0:
        return x[-1]
    n = len(x)
    if width is None:
        width = 1.0 / math.sqrt(n)
    wv = thd_weights(n, p, width)
    lo = wv.support_lo - 1
    hi = wv.support_hi
    return math.fsum(wv.weights[i] * x[i] for i in range(lo, hi))
