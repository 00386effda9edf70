"""The identity suite: Kronecker multiplication table of the five series,
the S (x) S product identity, the Schur-support checks for SHinv and SEinv,
and the closed forms of the per-variable Kronecker factors of S.

Reports are deterministic in everything except wall time: identical inputs
produce the same status and the same first discrepancy, ordered by
(weight, lexicographic partition order).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from symkron import named
from symkron.bases import from_p
from symkron.named import NamedSeries
from symkron.partitions import Partition, partitions_of
from symkron.products import kron_factor, kronecker, poly_exp, poly_mul
from symkron.series import SymFunc

_ZERO = Fraction(0)

_H = NamedSeries.H
_E = NamedSeries.E
_S = NamedSeries.S
_SH = NamedSeries.SHINV
_SE = NamedSeries.SEINV
_MODD = NamedSeries.MODD
_MEVEN = NamedSeries.MEVEN
_N = NamedSeries.N
_P = NamedSeries.P
_G = NamedSeries.G

#: Expected right-hand sides for the 15 unordered pairs from {H,E,S,SHinv,SEinv},
#: as products of named series.
TABLE = {
    (_H, _H): (_H,),
    (_H, _E): (_E,),
    (_H, _S): (_S,),
    (_H, _SH): (_SH,),
    (_H, _SE): (_SE,),
    (_E, _E): (_H,),
    (_E, _S): (_S,),
    (_E, _SH): (_SE,),
    (_E, _SE): (_SH,),
    (_S, _S): (_G, _MODD),
    (_S, _SH): (_G, _N),
    (_S, _SE): (_G, _N),
    (_SH, _SH): (_G, _MEVEN),
    (_SH, _SE): (_G, _P),
    (_SE, _SE): (_G, _MEVEN),
}


def table_pairs() -> list[tuple[NamedSeries, NamedSeries]]:
    """The 15 table entries in canonical order."""
    return list(TABLE)


def expected_product(a, b) -> tuple[NamedSeries, ...]:
    """Right-hand side tags for the pair (a, b); order-insensitive lookup."""
    a = NamedSeries.from_tag(a)
    b = NamedSeries.from_tag(b)
    rhs = TABLE.get((a, b)) or TABLE.get((b, a))
    if rhs is None:
        raise ValueError(f"({a.value}, {b.value}) is not a table pair")
    return rhs


@dataclass(frozen=True)
class Discrepancy:
    """First differing coefficient of a failed comparison."""

    partition: Partition
    lhs: Fraction
    rhs: Fraction

    def to_json_dict(self) -> dict:
        return {"partition": list(self.partition),
                "lhs": str(self.lhs),
                "rhs": str(self.rhs)}


@dataclass
class VerificationReport:
    identity: str
    degree: int
    status: str  # "pass" or "fail"
    first_discrepancy: Optional[Discrepancy]
    millis: int

    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "degree": self.degree,
            "status": self.status,
            "first_discrepancy": (None if self.first_discrepancy is None
                                  else self.first_discrepancy.to_json_dict()),
            "millis": self.millis,
        }


def first_difference(lhs: SymFunc, rhs: SymFunc) -> Optional[Discrepancy]:
    """First coefficient where the two series differ, scanning partitions in
    (weight, lexicographic) order; None when every coefficient matches."""
    keys = set(lhs.terms) | set(rhs.terms)
    for key in sorted(keys, key=lambda k: (sum(k), tuple(k))):
        a = lhs.coefficient(key)
        b = rhs.coefficient(key)
        if a != b:
            return Discrepancy(Partition(key), a, b)
    return None


def _report(identity: str, degree: int, started: float,
            disc: Optional[Discrepancy]) -> VerificationReport:
    millis = int(round((time.perf_counter() - started) * 1000))
    status = "pass" if disc is None else "fail"
    return VerificationReport(identity, degree, status, disc, millis)


def verify_table_entry(a, b, degree: int) -> VerificationReport:
    """Check one table entry: kronecker(expand(a), expand(b)) against the
    product of the expected named series, exactly, degree by degree."""
    a = NamedSeries.from_tag(a)
    b = NamedSeries.from_tag(b)
    rhs_tags = expected_product(a, b)
    identity = f"{a.value}⊗{b.value}={'·'.join(t.value for t in rhs_tags)}"
    started = time.perf_counter()
    lhs = kronecker(named.expand(a, degree), named.expand(b, degree))
    rhs = named.expand(rhs_tags[0], degree)
    for tag in rhs_tags[1:]:
        rhs = rhs * named.expand(tag, degree)
    return _report(identity, degree, started, first_difference(lhs, rhs))


def verify_intro_identity(degree: int) -> VerificationReport:
    """S (x) S against Modd * G.

    The same statement as the (S, S) table entry, kept as a separate report
    because it is stated independently; the redundancy is cheap and guards
    against table transcription slips.
    """
    started = time.perf_counter()
    lhs = kronecker(named.expand(_S, degree), named.expand(_S, degree))
    rhs = named.expand(_MODD, degree) * named.expand(_G, degree)
    return _report("intro:S⊗S=Modd·G", degree, started, first_difference(lhs, rhs))


def _parity_support(degree: int, conjugated: bool) -> SymFunc:
    terms = {}
    for n in range(degree + 1):
        for lam in partitions_of(n):
            probe = lam.conjugate() if conjugated else lam
            if all(p % 2 == 0 for p in probe):
                terms[lam] = 1
    return SymFunc("s", terms, degree)


def verify_support_claims(degree: int) -> VerificationReport:
    """Schur-basis support of SEinv and SHinv.

    SEinv must be the 0/1 sum of s_lam over lam with all parts even, and
    SHinv the 0/1 sum over lam whose conjugate has all parts even.  (The
    even condition on SEinv is forced by the table itself: the degree-n
    slice of E (x) SHinv is e_n (x) -, a conjugation twist.)
    """
    started = time.perf_counter()
    disc = first_difference(from_p(named.expand(_SE, degree), "s"),
                            _parity_support(degree, conjugated=False))
    if disc is None:
        disc = first_difference(from_p(named.expand(_SH, degree), "s"),
                                _parity_support(degree, conjugated=True))
    return _report("support:SEinv,SHinv", degree, started, disc)


def _central_binomial_coeffs(order: int) -> list:
    """Coefficients of (1 - x^2)^(-1/2): x^(2m) carries C(2m, m) / 4^m."""
    out = [_ZERO] * (order + 1)
    for m in range(0, order // 2 + 1):
        out[2 * m] = Fraction(comb(2 * m, m), 4 ** m)
    return out


def verify_factor_closed_forms(n: int, order: int) -> VerificationReport:
    """Closed form of g_n = f_n (x) f_n for the factors f_n of S.

    Even n: g_n must equal (1 - x^2)^(-1/2) coefficientwise and satisfy
    (1 - x^2) g' = x g.  Odd n: g_n must equal
    exp(x / (n (1 - x))) * (1 - x^2)^(-1/2).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    identity = f"factors:n={n}"
    started = time.perf_counter()
    f = named.factor(_S, n, order)
    g = kron_factor(f, f)

    binom = _central_binomial_coeffs(order)
    if n % 2 == 0:
        expected = binom
    else:
        geom = [_ZERO] + [Fraction(1, n)] * order  # x/(n(1-x)) expanded
        expected = poly_mul(poly_exp(geom, order), binom, order)

    disc = None
    for k in range(order + 1):
        if g.coefficient(k) != expected[k]:
            disc = Discrepancy(Partition((n,) * k), g.coefficient(k), expected[k])
            break

    if disc is None and n % 2 == 0:
        # (1 - x^2) g' - x g = 0 (the equation (1 - x^2)^(-1/2) satisfies):
        # coefficient of x^k is (k+1) g_{k+1} - k g_{k-1}, checkable for
        # every k < order.
        for k in range(order):
            residual = (k + 1) * g.coefficient(k + 1)
            if k >= 1:
                residual -= k * g.coefficient(k - 1)
            if residual:
                disc = Discrepancy(Partition((n,) * k), residual, _ZERO)
                break

    return _report(identity, n * order, started, disc)


def run_suite(degree: int, parallel: bool = False) -> list[VerificationReport]:
    """All 15 table entries, the S (x) S identity, the support claims, and
    the factor closed forms for n <= 4, in canonical order."""
    jobs = [("table", a, b) for a, b in table_pairs()]
    jobs.append(("intro",))
    jobs.append(("support",))
    jobs.extend(("factors", n) for n in range(1, 5))
    if parallel:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            return list(pool.map(_run_job, jobs, [degree] * len(jobs)))
    return [_run_job(job, degree) for job in jobs]


def _run_job(job: tuple, degree: int) -> VerificationReport:
    kind = job[0]
    if kind == "table":
        return verify_table_entry(job[1], job[2], degree)
    if kind == "intro":
        return verify_intro_identity(degree)
    if kind == "support":
        return verify_support_claims(degree)
    if kind == "factors":
        return verify_factor_closed_forms(job[1], max(1, degree))
    raise ValueError(f"unknown job {job!r}")


def suite_exit_status(reports) -> int:
    """0 iff every report passed, else 1."""
    return 0 if all(r.passed() for r in reports) else 1
