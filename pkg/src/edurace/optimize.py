"""Derivative-free 1-d maximization used for numeric cross-checks."""

import math

__all__ = ["golden_section_max", "grid_then_golden_max"]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_max(f, a, b, tol=1e-12, max_iter=500):
    """Maximize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    h = b - a
    c = a + _INV_PHI2 * h
    d = a + _INV_PHI * h
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if h <= tol * max(1.0, abs(a) + abs(b)):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            h *= _INV_PHI
            c = a + _INV_PHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h *= _INV_PHI
            d = a + _INV_PHI * h
            fd = f(d)
    x = c if fc > fd else d
    return x, max(fc, fd)


def grid_then_golden_max(f, a, b, n=201, tol=1e-12):
    """Coarse grid scan to bracket the global max, then golden-section polish.

    Good for functions that are unimodal only locally around the maximum.
    """
    step = (b - a) / (n - 1)
    xs = [a + k * step for k in range(n)]
    vals = [f(x) for x in xs]
    k = max(range(n), key=vals.__getitem__)
    lo, hi = xs[max(k - 1, 0)], xs[min(k + 1, n - 1)]
    return golden_section_max(f, lo, hi, tol=tol)
