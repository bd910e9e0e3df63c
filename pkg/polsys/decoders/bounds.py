"""Evaluation point counts and failure probability bounds."""

import math

from polsys.errors import UsageError


def _check(n=1, **values):
    if n < 1:
        raise UsageError('n must be at least 1', {'n': n})
    negative = {key: value for key, value in values.items() if value < 0}
    if negative:
        raise UsageError('degree and error bounds must be non negative', negative)


def l_glz(n, df, dg, e):
    """Points needed by the probabilistic decoder, ``ceil((n(df+e+1+dg)+e)/n)``."""
    _check(n, df=df, dg=dg, e=e)
    return -(-(n * (df + e + 1 + dg) + e) // n)


def l_bk(df, dg, e, t=0):
    """Points needed by the deterministic decoder, ``df+dg+2e+t+1``."""
    _check(df=df, dg=dg, e=e, t=t)
    return df + dg + 2 * e + t + 1


def l_star(n, df, dg, e):
    """Smallest count with nL >= unknowns - 1, ``ceil((n(df+e+1)+dg+e)/n)``."""
    _check(n, df=df, dg=dg, e=e)
    return -(-(n * (df + e + 1) + dg + e) // n)


def p_glz(q, dg, e):
    """Failure probability bound of the probabilistic decoder, ``(dg+e)/q``."""
    return (dg + e) / q


def p_spr(q, e):
    return e / q


def p_bms(q, r):
    """Interleaved RS collaborative decoding failure bound ``exp(1/q^(r-2))/(q-1)``."""
    return math.exp(1 / q ** (r - 2)) / (q - 1)


def e_max_collab(n_c, k, r):
    return r * (n_c - k) // (r + 1)
