# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels.

Twin of trimq._kernels_py: same expressions in the same order, compiled with
-ffp-contract=off, so both backends produce bit-identical doubles.  Keep the
two files in sync.
"""

from libc.math cimport exp, log, log1p, sqrt

cdef double _HALF_LN_TWO_PI = 0.9189385332046727

cdef double _S1 = 1.0 / 12.0
cdef double _S2 = -1.0 / 360.0
cdef double _S3 = 1.0 / 1260.0
cdef double _S4 = -1.0 / 1680.0
cdef double _S5 = 1.0 / 1188.0
cdef double _S6 = -691.0 / 360360.0
cdef double _S7 = 1.0 / 156.0
cdef double _S8 = -3617.0 / 122400.0

cdef int _MAX_ITER = 300
cdef double _CF_TOL = 1e-14
cdef double _FPMIN = 1e-300


cdef double _INF = float("inf")


cdef double _log_gamma(double x):
    cdef double prod = 1.0
    cdef double y = x
    cdef double r, r2, s, out
    while y < 10.0:
        prod *= y
        y += 1.0
    r = 1.0 / y
    r2 = r * r
    s = _S8
    s = s * r2 + _S7
    s = s * r2 + _S6
    s = s * r2 + _S5
    s = s * r2 + _S4
    s = s * r2 + _S3
    s = s * r2 + _S2
    s = s * r2 + _S1
    s = s * r
    out = (y - 0.5) * log(y) - y + _HALF_LN_TWO_PI + s
    if prod != 1.0:
        out -= log(prod)
    return out


cdef double _log_beta(double a, double b):
    return _log_gamma(a) + _log_gamma(b) - _log_gamma(a + b)


cdef double _beta_pdf(double x, double a, double b) except? -1.0:
    if x == 0.0:
        if a > 1.0:
            return 0.0
        if a == 1.0:
            return exp(-_log_beta(a, b))
        return _INF
    if x == 1.0:
        if b > 1.0:
            return 0.0
        if b == 1.0:
            return exp(-_log_beta(a, b))
        return _INF
    return exp((a - 1.0) * log(x) + (b - 1.0) * log1p(-x) - _log_beta(a, b))


cdef double _beta_cont_frac(double a, double b, double x) except? -1.0:
    cdef double qab = a + b
    cdef double qap = a + 1.0
    cdef double qam = a - 1.0
    cdef double c = 1.0
    cdef double d = 1.0 - qab * x / qap
    cdef double h, aa, delta
    cdef int m, m2
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_TOL:
            return h
    raise ArithmeticError(
        "incomplete beta continued fraction did not converge "
        "(a=%g, b=%g, x=%g)" % (a, b, x))


cdef double _reg_inc_beta(double x, double a, double b) except? -1.0:
    cdef double front
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    front = (_log_gamma(a + b) - _log_gamma(a) - _log_gamma(b)
             + a * log(x) + b * log1p(-x))
    if x < (a + 1.0) / (a + b + 2.0):
        return exp(front) * _beta_cont_frac(a, b, x) / a
    return 1.0 - exp(front) * _beta_cont_frac(b, a, 1.0 - x) / b


def log_gamma(double x):
    """ln Gamma(x) for x > 0; see the pure-Python twin for notes."""
    return _log_gamma(x)


def beta_pdf(double x, double a, double b):
    """Beta density at x in [0, 1], evaluated in log space."""
    return _beta_pdf(x, a, b)


def reg_inc_beta(double x, double a, double b):
    """Regularized incomplete beta I_x(a, b) for x in [0, 1]."""
    return _reg_inc_beta(x, a, b)


def hdi_middle_lower(double a, double b, double width):
    """Lower endpoint of the middle-case HDI (bisection; see the twin)."""
    cdef double mode = (a - 1.0) / (a + b - 2.0)
    cdef double lo = mode - width
    cdef double hi
    cdef double mid
    cdef int i
    if lo < 0.0:
        lo = 0.0
    hi = 1.0 - width
    if mode < hi:
        hi = mode
    cdef double best, gap, g, cand
    cdef int j
    for i in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _beta_pdf(mid, a, b) - _beta_pdf(mid + width, a, b) <= 0.0:
            lo = mid
        else:
            hi = mid
    # the true root can fall between adjacent doubles; of the surviving
    # bracket, return the point whose endpoint densities agree best
    best = 0.5 * (lo + hi)
    gap = abs(_beta_pdf(best, a, b) - _beta_pdf(best + width, a, b))
    for j in range(2):
        cand = lo if j == 0 else hi
        g = abs(_beta_pdf(cand, a, b) - _beta_pdf(cand + width, a, b))
        if g < gap:
            gap = g
            best = cand
    return best


def norm_quantile(double p):
    """Standard normal quantile for p in (0, 1) (Wichura's PPND16)."""
    cdef double q = p - 0.5
    cdef double r, num, den, val
    if abs(q) <= 0.425:
        r = 0.180625 - q * q
        num = (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r
                    + 6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r
                  + 1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r
                + 1.3314166789178437745e2) * r + 3.3871328727963666080e0)
        den = (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r
                    + 3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r
                  + 5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r
                + 4.2313330701600911252e1) * r + 1.0)
        return q * num / den
    r = p if q < 0.0 else 1.0 - p
    r = sqrt(-log(r))
    if r <= 5.0:
        r -= 1.6
        num = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r
                    + 2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r
                  + 3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r
                + 4.63033784615654529590e0) * r + 1.42343711074968357734e0)
        den = (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r
                    + 1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r
                  + 6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r
                + 2.05319162663775882187e0) * r + 1.0)
    else:
        r -= 5.0
        num = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r
                    + 1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r
                  + 2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r
                + 5.46378491116411436990e0) * r + 6.65790464350110377720e0)
        den = (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r
                    + 1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r
                  + 1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r
                + 5.99832206555887937690e-1) * r + 1.0)
    val = num / den
    return -val if q < 0.0 else val


cdef unsigned long long _GOLDEN = 0x9E3779B97F4A7C15U


cdef unsigned long long _mix64(unsigned long long z):
    z ^= z >> 33
    z = z * 0xFF51AFD7ED558CCDU
    z ^= z >> 33
    z = z * 0xC4CEB9FE1A85EC53U
    z ^= z >> 33
    return z


def fill_uniforms(unsigned long long seed, unsigned long long stream_id,
                  unsigned long long start, Py_ssize_t count):
    """Counter-based SplitMix64 uniforms in (0, 1); see the twin for notes."""
    cdef unsigned long long s0 = _mix64(seed) ^ _mix64(stream_id ^ _GOLDEN)
    cdef unsigned long long state = s0 + start * _GOLDEN
    cdef unsigned long long z
    cdef Py_ssize_t i
    cdef list out = [0.0] * count
    for i in range(count):
        state = state + _GOLDEN
        z = state
        z ^= z >> 30
        z = z * 0xBF58476D1CE4E5B9U
        z ^= z >> 27
        z = z * 0x94D049BB133111EBU
        z ^= z >> 31
        out[i] = ((z >> 11) + 0.5) * 1.1102230246251565e-16
    return out
