"""The bilinear products: scalar product, Kronecker product, plethysm, and
the single-variable Kronecker factor used by the product-form reduction.

Everything is evaluated in power-sum coordinates, where the two products
are diagonal:

    <p_lam, p_mu> = z_lam * delta(lam, mu)
    p_lam (x) p_mu = z_lam * delta(lam, mu) * p_lam
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from symkron import _kernels as kernels
from symkron import bases
from symkron.partitions import Partition, partitions_of, z
from symkron.series import BasisError, SymFunc

_ZERO = Fraction(0)
_ONE = Fraction(1)


def scalar_product(f: SymFunc, g: SymFunc) -> Fraction:
    """<f, g>: sum over shared partitions of f_lam * g_lam * z_lam.

    Inputs are converted to p coordinates internally.  All stored terms
    participate; when the truncation degrees differ, bookkeeping about the
    unshared range is the caller's concern (the verifier compares equal
    degrees only).
    """
    return kernels.scalar_terms(bases.to_p(f).terms, bases.to_p(g).terms)


def kronecker(f: SymFunc, g: SymFunc) -> SymFunc:
    """Kronecker (internal) product, returned in the p basis.

    Cross-degree terms vanish on their own, so inhomogeneous inputs are
    fine; the result is truncated at the minimum input degree.
    """
    fp = bases.to_p(f)
    gp = bases.to_p(g)
    degree = min(fp.degree, gp.degree)
    out = kernels.kron_terms(fp.terms, gp.terms)
    if fp.degree != gp.degree:
        out = {k: c for k, c in out.items() if sum(k) <= degree}
    return SymFunc("p", out, degree)


def kronecker_nary(fs) -> SymFunc:
    """Left fold of the Kronecker product (associative, so order is moot)."""
    fs = list(fs)
    if not fs:
        raise ValueError("kronecker_nary needs at least one series")
    result = bases.to_p(fs[0])
    for g in fs[1:]:
        result = kronecker(result, g)
    return result


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """f[g]: substitution defined on power sums by index dilation.

    Each p-monomial c * p_{l1} ... p_{lk} of f becomes c times the product
    of copies of g with every index multiplied by l_i.  g must be a
    constant-free p-basis series.  The result is truncated at
    min(f.degree, g.degree): substitution cannot recover terms that either
    truncation has already discarded.
    """
    if g.basis != "p":
        raise BasisError("plethysm expects g in the p basis")
    if g.constant_term:
        raise ValueError("plethysm needs a constant-free g")
    fp = bases.to_p(f)
    degree = min(fp.degree, g.degree)

    dilated: dict[int, dict] = {}

    def dilate(m: int) -> dict:
        cached = dilated.get(m)
        if cached is None:
            cached = {
                tuple(m * p for p in key): c
                for key, c in g.terms.items()
                if m * sum(key) <= degree
            }
            dilated[m] = cached
        return cached

    out: dict[tuple, Fraction] = {}
    for lam, c in fp.terms.items():
        if lam.weight > degree:
            continue  # every part of g has degree >= 1
        acc = {(): _ONE}
        for m in lam:
            acc = kernels.mul_terms(acc, dilate(m), degree)
            if not acc:
                break
        for key, v in acc.items():
            s = out.get(key, _ZERO) + c * v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return SymFunc("p", out, degree)


# ----------------------------------------------------- univariate factors

@dataclass(frozen=True)
class UnivariateFactor:
    """A truncated polynomial in the single power-sum variable p_n.

    coeffs[k] multiplies p_n**k, so the term of index k has series degree
    n*k; the truncation order is in k (len(coeffs) - 1), not in degree.
    """

    n: int
    coeffs: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("variable index must be a positive integer")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs:
            coeffs = (_ZERO,)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else _ZERO

    def to_symfunc(self, degree: int | None = None) -> SymFunc:
        """Embed into the ambient ring; degree defaults to n * order."""
        if degree is None:
            degree = self.n * self.order
        terms = {
            (self.n,) * k: c
            for k, c in enumerate(self.coeffs)
            if self.n * k <= degree
        }
        return SymFunc("p", terms, degree)


def kron_factor(a: UnivariateFactor, b: UnivariateFactor) -> UnivariateFactor:
    """Kronecker product of two factors in the same variable p_n.

    Diagonal in k with weight z([n^k]) = n**k * k!, i.e. a coefficientwise
    (Hadamard-type) product; order is the minimum of the input orders.
    """
    if a.n != b.n:
        raise ValueError(f"factors live in different variables: p_{a.n} vs p_{b.n}")
    order = min(a.order, b.order)
    coeffs = tuple(
        a.coeffs[k] * b.coeffs[k] * a.n ** k * factorial(k)
        for k in range(order + 1)
    )
    return UnivariateFactor(a.n, coeffs)


def poly_mul(a, b, order: int) -> list:
    """Product of coefficient lists, truncated at the given order."""
    out = [_ZERO] * (order + 1)
    for i, ca in enumerate(a):
        if i > order or not ca:
            continue
        for j, cb in enumerate(b):
            if i + j > order:
                break
            out[i + j] += ca * cb
    return out


def poly_exp(a, order: int) -> list:
    """exp of a coefficient list with a[0] == 0, truncated at the order."""
    if a and a[0]:
        raise ValueError("poly_exp needs a zero constant term")
    result = [_ONE] + [_ZERO] * order
    for k in range(order, 0, -1):
        result = poly_mul(a, result, order)
        result = [c / k for c in result]
        result[0] += _ONE
    return result


# ------------------------------------------------- Kronecker coefficients

def kronecker_coefficient(lam, mu, rho, oracle: bool = False) -> int:
    """Multiplicity of s_rho in s_lam (x) s_mu; a non-negative integer.

    The default route exercises the full pipeline: expand both Schur
    functions over p, multiply with ``kronecker``, convert back to the s
    basis and read off the coefficient.  With oracle=True the value is the
    independent character sum

        sum over nu of chi^lam(nu) chi^mu(nu) chi^rho(nu) / z_nu,

    which never touches the series machinery.
    """
    lam = Partition(lam)
    mu = Partition(mu)
    rho = Partition(rho)
    if not (lam.weight == mu.weight == rho.weight):
        raise ValueError("kronecker_coefficient needs |lam| == |mu| == |rho|")
    n = lam.weight
    if oracle:
        val = sum(
            (Fraction(bases.character(lam, nu)
                      * bases.character(mu, nu)
                      * bases.character(rho, nu), z(nu))
             for nu in partitions_of(n)),
            _ZERO,
        )
    else:
        product = kronecker(SymFunc.single("s", lam, n), SymFunc.single("s", mu, n))
        val = bases.from_p(product, "s").coefficient(rho)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral Kronecker coefficient {val} at {lam}, {mu}, {rho}")
    return int(val)
