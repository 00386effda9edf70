"""The ten named generating series and their per-variable factorizations.

Every series here is exp of an exponent that splits as a sum over n >= 1 of
a univariate polynomial in p_n.  That split is what makes the product-form
Kronecker reduction applicable: F = prod f_n(p_n) and G = prod g_n(p_n)
give F (x) G = prod (f_n (x) g_n).

Per variable n, writing x for p_n, the defining exponents are

    H      x/n                                   (sum of all h_k)
    E      (-1)^(n+1) x/n                        (sum of all e_k)
    S      x^2/(2n) + [n odd] x/n                (sum of all Schur functions)
    SHinv  x^2/(2n) - [n even] x/n               (S over H; Schur sum on
                                                  conjugate-all-even supports)
    SEinv  x^2/(2n) + [n even] x/n               (S over E; Schur sum on
                                                  all-parts-even supports)
    Modd   [n odd]  sum_{k>=1} x^k/n             (x/(n(1-x)) expanded)
    Meven  [n even] sum_{k>=1} x^k/n
    N      sum_{k>=1} x^(2k)/(2n)                (x^2/(2n(1-x^2)) expanded)
    P      [n even] sum_{k>=1} (-1)^k x^k/n      (-x/(n(1+x)) expanded)
    G      sum_{k>=1} x^(2k)/(2k)                (exp gives (1-x^2)^(-1/2))

Geometric denominators are expanded to explicit finite sums at construction
time (degree of x^k is n*k, cut at the requested truncation), keeping the
series layer free of rational-function arithmetic.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from symkron.series import SymFunc, exp_series
from symkron.products import UnivariateFactor, kron_factor, poly_exp

_ZERO = Fraction(0)


class NamedSeries(enum.Enum):
    """Tags for the ten built-in series; values are the CLI names."""

    H = "H"
    E = "E"
    S = "S"
    SHINV = "SHinv"
    SEINV = "SEinv"
    MODD = "Modd"
    MEVEN = "Meven"
    N = "N"
    P = "P"
    G = "G"

    @classmethod
    def from_tag(cls, tag) -> "NamedSeries":
        if isinstance(tag, cls):
            return tag
        for member in cls:
            if member.value == tag:
                return member
        raise ValueError(f"unknown series tag {tag!r}; expected one of {TAGS}")


TAGS = tuple(member.value for member in NamedSeries)


def _factor_exponent(tag: NamedSeries, n: int, order: int) -> list:
    """Exponent polynomial in x = p_n through x**order (index = power)."""
    c = [_ZERO] * (order + 1)
    if tag is NamedSeries.H:
        if order >= 1:
            c[1] = Fraction(1, n)
    elif tag is NamedSeries.E:
        if order >= 1:
            c[1] = Fraction(1 if n % 2 else -1, n)
    elif tag is NamedSeries.S:
        if order >= 2:
            c[2] = Fraction(1, 2 * n)
        if n % 2 and order >= 1:
            c[1] = Fraction(1, n)
    elif tag is NamedSeries.SHINV:
        if order >= 2:
            c[2] = Fraction(1, 2 * n)
        if n % 2 == 0 and order >= 1:
            c[1] = Fraction(-1, n)
    elif tag is NamedSeries.SEINV:
        if order >= 2:
            c[2] = Fraction(1, 2 * n)
        if n % 2 == 0 and order >= 1:
            c[1] = Fraction(1, n)
    elif tag is NamedSeries.MODD:
        if n % 2:
            for k in range(1, order + 1):
                c[k] = Fraction(1, n)
    elif tag is NamedSeries.MEVEN:
        if n % 2 == 0:
            for k in range(1, order + 1):
                c[k] = Fraction(1, n)
    elif tag is NamedSeries.N:
        for k in range(2, order + 1, 2):
            c[k] = Fraction(1, 2 * n)
    elif tag is NamedSeries.P:
        if n % 2 == 0:
            for k in range(1, order + 1):
                c[k] = Fraction((-1) ** k, n)
    elif tag is NamedSeries.G:
        for k in range(2, order + 1, 2):
            c[k] = Fraction(1, k)
    else:  # pragma: no cover
        raise ValueError(f"unknown tag {tag!r}")
    return c


def exponent(tag, degree: int) -> SymFunc:
    """The p-basis exponent polynomial of the series, truncated at degree."""
    tag = NamedSeries.from_tag(tag)
    terms = {}
    for n in range(1, degree + 1):
        for k, c in enumerate(_factor_exponent(tag, n, degree // n)):
            if c:
                terms[(n,) * k] = c
    return SymFunc("p", terms, degree)


@lru_cache(maxsize=None)
def _expand_cached(tag: NamedSeries, degree: int) -> SymFunc:
    return exp_series(exponent(tag, degree))


def expand(tag, degree: int) -> SymFunc:
    """The series itself as a p-basis SymFunc truncated at degree.

    Results are cached per (tag, degree); SymFunc values are immutable, so
    sharing is safe.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return _expand_cached(NamedSeries.from_tag(tag), degree)


class FactorizedSeries:
    """A series as a product over n of univariate factors in p_n.

    ``factors`` maps the variable index n to its UnivariateFactor; an
    absent index means the factor is the constant 1.  Re-expanding the
    product and truncating reproduces expand(tag, degree) exactly.
    """

    __slots__ = ("degree", "factors")

    def __init__(self, degree: int, factors: dict):
        self.degree = degree
        self.factors = dict(factors)

    def __eq__(self, other):
        if not isinstance(other, FactorizedSeries):
            return NotImplemented
        return self.degree == other.degree and self.factors == other.factors

    __hash__ = None

    def __repr__(self):
        return f"FactorizedSeries(degree={self.degree}, variables={sorted(self.factors)})"

    def expand(self) -> SymFunc:
        """Multiply the embedded factors back out, truncated at degree."""
        result = SymFunc.one("p", self.degree)
        for n in sorted(self.factors):
            result = result * self.factors[n].to_symfunc(degree=self.degree)
        return result


def factor(tag, n: int, order: int) -> UnivariateFactor:
    """The single variable-n factor of the series, to the given k-order:
    exp of the univariate exponent listed in the module docstring."""
    tag = NamedSeries.from_tag(tag)
    if n < 1:
        raise ValueError("variable index must be a positive integer")
    return UnivariateFactor(n, poly_exp(_factor_exponent(tag, n, order), order))


def factorize(tag, degree: int) -> FactorizedSeries:
    """Per-variable factorization: factor at n is exp of the univariate
    exponent, truncated in k at degree // n.  Trivial factors are omitted."""
    tag = NamedSeries.from_tag(tag)
    factors = {}
    for n in range(1, degree + 1):
        order = degree // n
        if any(_factor_exponent(tag, n, order)):
            factors[n] = factor(tag, n, order)
    return FactorizedSeries(degree, factors)


def kronecker_product_form(a, b, degree: int) -> SymFunc:
    """Kronecker product computed through the per-variable factorization:
    factor both series, Kronecker the factors variable by variable, and
    re-expand.  Must agree exactly with the direct p-basis product."""
    fa = factorize(a, degree)
    fb = factorize(b, degree)
    result = SymFunc.one("p", degree)
    for n in sorted(set(fa.factors) & set(fb.factors)):
        g = kron_factor(fa.factors[n], fb.factors[n])
        result = result * g.to_symfunc(degree=degree)
    return result
