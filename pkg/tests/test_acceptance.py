"""Acceptance suite: every criterion at its stated degree, all exact.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.
"""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb

from conftest import random_symfunc
from symkron.bases import from_p, schur_by_gram_schmidt, to_p
from symkron.named import NamedSeries, expand, factor, kronecker_product_form
from symkron.partitions import partitions_of
from symkron.products import (
    kron_factor,
    kronecker,
    kronecker_coefficient,
    plethysm,
    scalar_product,
)
from symkron.series import BASES, SymFunc
from symkron.verify import run_suite, suite_exit_status, table_pairs, verify_table_entry

F = Fraction

FIVE = (NamedSeries.H, NamedSeries.E, NamedSeries.S,
        NamedSeries.SHINV, NamedSeries.SEINV)


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} FAIL  {description}")
        raise
    print(f"ACCEPTANCE {number} PASS  {description}")


def test_criterion_1_table_at_degree_ten():
    with criterion(1, "all 15 Kronecker table entries exact at degree 10"):
        started = time.perf_counter()
        reports = [verify_table_entry(a, b, 10) for a, b in table_pairs()]
        elapsed = time.perf_counter() - started
        assert len(reports) == 15
        for report in reports:
            assert report.passed(), f"{report.identity}: {report.first_discrepancy}"
        assert elapsed < 300, f"table took {elapsed:.1f}s"


def test_criterion_2_intro_identity_at_degree_twelve():
    with criterion(2, "S(x)S = Modd*G exact at degree 12"):
        lhs = kronecker(expand("S", 12), expand("S", 12))
        rhs = expand("Modd", 12) * expand("G", 12)
        assert lhs == rhs


def test_criterion_3_s_is_plethysm_of_h_at_degree_ten():
    with criterion(3, "expand(S,10) equals H[p1 + p1^2/2 - p2/2] exactly"):
        u = SymFunc("p", {(1,): 1, (1, 1): F(1, 2), (2,): F(-1, 2)}, 10)
        assert expand("S", 10) == plethysm(expand("H", 10), u)


def test_criterion_4_product_form_equivalence_at_degree_eight():
    with criterion(4, "factorized Kronecker equals direct product for all 15 pairs at degree 8"):
        for a, b in itertools.combinations_with_replacement(FIVE, 2):
            direct = kronecker(expand(a, 8), expand(b, 8))
            assert kronecker_product_form(a, b, 8) == direct, (a, b)


def test_criterion_5_factor_closed_forms():
    with criterion(5, "g2 = f2(x)f2 has central-binomial coefficients and solves the factor ODE to order 20"):
        order = 20
        f2 = factor("S", 2, order)
        g2 = kron_factor(f2, f2)
        for m in range(11):
            assert g2.coefficient(2 * m) == F(comb(2 * m, m), 4 ** m)
            assert g2.coefficient(2 * m + 1) == 0
        # (1 - x^2) g' = x g, the equation satisfied by (1 - x^2)^(-1/2)
        for k in range(order):
            residual = (k + 1) * g2.coefficient(k + 1) - k * g2.coefficient(k - 1)
            assert residual == 0, k


def test_criterion_6_kronecker_coefficients_up_to_six():
    with criterion(6, "gamma: pipeline equals character oracle, integral, S3-symmetric, n <= 6"):
        for n in range(7):
            lams = partitions_of(n)
            gamma = {}
            for lam in lams:
                for mu in lams:
                    expansion = from_p(
                        kronecker(SymFunc.single("s", lam, n),
                                  SymFunc.single("s", mu, n)), "s")
                    for rho in lams:
                        direct = expansion.coefficient(rho)
                        assert direct.denominator == 1 and direct >= 0
                        oracle = kronecker_coefficient(lam, mu, rho, oracle=True)
                        assert int(direct) == oracle, (lam, mu, rho)
                        gamma[(lam, mu, rho)] = oracle
            for (lam, mu, rho), value in gamma.items():
                for perm in itertools.permutations((lam, mu, rho)):
                    assert gamma[perm] == value
            ones = tuple([1] * n)
            for mu in lams:
                for rho in lams:
                    assert gamma.get(((n,) if n else (), mu, rho)) == \
                        (1 if mu == rho else 0)
                    assert gamma.get((ones, mu, rho)) == \
                        (1 if rho == mu.conjugate() else 0)


def test_criterion_7_basis_layer():
    with criterion(7, "basis round-trips (weight <= 8), Schur orthonormality (n <= 7), Gram-Schmidt route (n <= 6)"):
        rng = random.Random(2718)
        for basis in BASES:
            for _ in range(10):
                f = random_symfunc(rng, basis, 8)
                assert from_p(to_p(f), basis) == f
        for n in range(1, 8):
            lams = partitions_of(n)
            for lam in lams:
                for mu in lams:
                    got = scalar_product(SymFunc.single("s", lam, n),
                                         SymFunc.single("s", mu, n))
                    assert got == (1 if lam == mu else 0)
        for n in range(1, 7):
            vectors = schur_by_gram_schmidt(n)
            for lam in partitions_of(n):
                assert vectors[lam] == from_p(to_p(SymFunc.single("s", lam, n)), "m")


def test_criterion_8_support_claims_at_degree_ten():
    with criterion(8, "SEinv/SHinv Schur supports are 0/1 on the parity-characterized partitions at degree 10"):
        degree = 10
        se = from_p(expand("SEinv", degree), "s")
        sh = from_p(expand("SHinv", degree), "s")
        for n in range(degree + 1):
            for lam in partitions_of(n):
                expected_se = 1 if all(part % 2 == 0 for part in lam) else 0
                expected_sh = 1 if all(part % 2 == 0 for part in lam.conjugate()) else 0
                assert se.coefficient(lam) == expected_se, lam
                assert sh.coefficient(lam) == expected_sh, lam


def test_whole_suite_is_green_at_default_degree():
    # the CLI-level contract: `symkron verify all --degree 8` exits 0
    reports = run_suite(8)
    assert suite_exit_status(reports) == 0
