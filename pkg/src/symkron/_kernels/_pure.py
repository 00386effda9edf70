"""Pure-Python reference kernels.

Self-contained on purpose: the compiled backend mirrors exactly these
contracts, and the test suite cross-checks the two term by term.
"""

from fractions import Fraction
from math import factorial

_ZERO = Fraction(0)


def zstat(parts) -> int:
    """Product of v**mult * mult! over the distinct part values v."""
    result = 1
    prev = None
    run = 0
    for p in parts:
        if p == prev:
            run += 1
        else:
            if prev is not None:
                result *= prev ** run * factorial(run)
            prev, run = p, 1
    if prev is not None:
        result *= prev ** run * factorial(run)
    return result


def mul_terms(a: dict, b: dict, limit: int) -> dict:
    """Distributive product; keys merge by sorting parts, weights add."""
    if not a or not b:
        return {}
    flat = [(k, sum(k), c) for k, c in b.items()]
    acc: dict = {}
    for ka, ca in a.items():
        wa = sum(ka)
        for kb, wb, cb in flat:
            if wa + wb > limit:
                continue
            key = tuple(sorted(ka + kb, reverse=True))
            prev = acc.get(key)
            acc[key] = ca * cb if prev is None else prev + ca * cb
    return {k: c for k, c in acc.items() if c}


def kron_terms(a: dict, b: dict) -> dict:
    """Shared keys only: a[k] * b[k] * z(k)."""
    if len(b) < len(a):
        a, b = b, a
    out = {}
    for k, ca in a.items():
        cb = b.get(k)
        if cb is not None:
            out[k] = ca * cb * zstat(k)
    return out


def scalar_terms(a: dict, b: dict) -> Fraction:
    """Sum over shared keys of a[k] * b[k] * z(k)."""
    if len(b) < len(a):
        a, b = b, a
    total = _ZERO
    for k, ca in a.items():
        cb = b.get(k)
        if cb is not None:
            total += ca * cb * zstat(k)
    return total
