import random
from fractions import Fraction
from math import comb, factorial

import pytest

from conftest import random_symfunc
from symkron.bases import (
    CharacterTable,
    character,
    character_table,
    from_p,
    schur_by_gram_schmidt,
    to_p,
)
from symkron.partitions import Partition, partitions_of, z
from symkron.products import scalar_product
from symkron.series import BASES, BasisError, SymFunc

F = Fraction


def h_in_p_oracle(n):
    """h_n = sum over lam of p_lam / z_lam (independent of the Newton route)."""
    return {tuple(lam): F(1, z(lam)) for lam in partitions_of(n)}


def e_in_p_oracle(n):
    """e_n = sum over lam of (-1)^(n - len(lam)) p_lam / z_lam."""
    return {tuple(lam): F((-1) ** (n - len(lam)), z(lam)) for lam in partitions_of(n)}


def hook_dimension(lam):
    """Number of standard Young tableaux, by the hook length formula."""
    lam = Partition(lam)
    conj = lam.conjugate()
    dim = factorial(lam.weight)
    for i, row in enumerate(lam):
        for j in range(row):
            dim //= row - j + conj[j] - i - 1
    return dim


# ------------------------------------------------------------ characters

def test_trivial_representation():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert character((n,), mu) == 1


def test_sign_representation_value():
    assert character((1, 1), (2,)) == -1


def test_standard_representation_dimension():
    assert character((2, 1), (1, 1, 1)) == 2


def test_character_weight_mismatch():
    with pytest.raises(ValueError):
        character((2, 1), (2, 2))


S3_CLASSES = [(1, 1, 1), (2, 1), (3,)]
S3_TABLE = {
    (3,): [1, 1, 1],
    (2, 1): [2, 0, -1],
    (1, 1, 1): [1, -1, 1],
}

S4_CLASSES = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
S4_TABLE = {
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [3, 1, -1, 0, -1],
    (2, 2): [2, 0, 2, -1, 0],
    (2, 1, 1): [3, -1, -1, 0, 1],
    (1, 1, 1, 1): [1, -1, 1, 1, -1],
}


def test_frozen_small_tables():
    for lam, row in S3_TABLE.items():
        assert [character(lam, mu) for mu in S3_CLASSES] == row
    for lam, row in S4_TABLE.items():
        assert [character(lam, mu) for mu in S4_CLASSES] == row


def test_dimension_matches_hook_length_formula():
    for n in range(1, 8):
        ones = (1,) * n
        for lam in partitions_of(n):
            assert character(lam, ones) == hook_dimension(lam)


def test_row_orthogonality():
    for n in range(1, 9):
        lams = partitions_of(n)
        for lam in lams:
            for nu in lams:
                total = sum(
                    F(character(lam, mu) * character(nu, mu), z(mu)) for mu in lams)
                assert total == (1 if lam == nu else 0)


def test_column_orthogonality():
    for n in range(1, 8):
        lams = partitions_of(n)
        for mu in lams:
            for nu in lams:
                total = sum(character(lam, mu) * character(lam, nu) for lam in lams)
                assert total == (z(mu) if mu == nu else 0)


def test_character_table_object():
    table = character_table(4)
    assert isinstance(table, CharacterTable)
    assert table.n == 4
    assert table[(2, 2), (3, 1)] == -1
    for lam in partitions_of(4):
        assert table[lam, (1, 1, 1, 1)] > 0


# ------------------------------------------------------------ conversions

def test_h2_and_e2_over_p():
    assert to_p(SymFunc.single("h", (2,), 2)).terms == \
        {(1, 1): F(1, 2), (2,): F(1, 2)}
    assert to_p(SymFunc.single("e", (2,), 2)).terms == \
        {(1, 1): F(1, 2), (2,): F(-1, 2)}


def test_schur_11_equals_e2():
    assert to_p(SymFunc.single("s", (1, 1), 2)) == to_p(SymFunc.single("e", (2,), 2))


def test_hn_en_match_z_formula_oracle():
    for n in range(7):
        assert to_p(SymFunc.single("h", (n,) if n else (), n)).terms == h_in_p_oracle(n)
        assert to_p(SymFunc.single("e", (n,) if n else (), n)).terms == e_in_p_oracle(n)


def test_from_p_examples():
    p1_squared = SymFunc.single("p", (1, 1), 2)
    assert from_p(p1_squared, "h") == SymFunc.single("h", (1, 1), 2)
    assert from_p(p1_squared, "m").terms == {(1, 1): F(2), (2,): F(1)}

    h2 = SymFunc("p", {(1, 1): F(1, 2), (2,): F(1, 2)}, 2)
    assert from_p(h2, "s") == SymFunc.single("s", (2,), 2)


def test_from_p_requires_p_input():
    with pytest.raises(BasisError):
        from_p(SymFunc.single("h", (1,), 1), "m")
    with pytest.raises(BasisError):
        from_p(SymFunc.single("p", (1,), 1), "q")


def test_round_trips_all_bases():
    rng = random.Random(42)
    for basis in BASES:
        for _ in range(6):
            f = random_symfunc(rng, basis, 8)
            assert from_p(to_p(f), basis) == f


def test_round_trips_from_p_side():
    rng = random.Random(43)
    for basis in BASES:
        for _ in range(6):
            f = random_symfunc(rng, "p", 8)
            assert to_p(from_p(f, basis)) == f


def test_weight_zero_passes_through():
    c = SymFunc("p", {(): F(5, 3)}, 0)
    for basis in BASES:
        assert from_p(c, basis).terms == {(): F(5, 3)}
        assert to_p(SymFunc(basis, {(): F(5, 3)}, 0)).terms == {(): F(5, 3)}


def test_classical_identities_in_m():
    # h_n = sum of all m_lam; e_n = m_(1^n); p_n = m_(n)
    for n in range(1, 9):
        h_m = from_p(to_p(SymFunc.single("h", (n,), n)), "m")
        assert h_m.terms == {tuple(lam): F(1) for lam in partitions_of(n)}
        e_m = from_p(to_p(SymFunc.single("e", (n,), n)), "m")
        assert e_m.terms == {(1,) * n: F(1)}
        p_m = from_p(SymFunc.single("p", (n,), n), "m")
        assert p_m.terms == {(n,): F(1)}


def count_monomials(lam, k):
    """m_lam evaluated at x_1 = ... = x_k = 1: distinct monomial count."""
    lam = Partition(lam)
    if len(lam) > k:
        return 0
    count = factorial(k) // factorial(k - len(lam))
    for mult in lam.multiplicities().values():
        count //= factorial(mult)
    return count


def test_m_conversion_against_evaluation_oracle():
    # evaluating p_n -> k must agree with the monomial-count specialization
    rng = random.Random(99)
    for _ in range(8):
        f = random_symfunc(rng, "p", 7)
        m = from_p(f, "m")
        for k in (1, 2, 3, 5):
            direct = sum(c * k ** len(lam) for lam, c in f.terms.items())
            via_m = sum(c * count_monomials(lam, k) for lam, c in m.terms.items())
            assert direct == via_m


def test_h_evaluation_oracle():
    # h_n(1^k) = C(n + k - 1, n)
    for n in range(1, 8):
        hp = to_p(SymFunc.single("h", (n,), n))
        for k in (1, 2, 4):
            assert sum(c * k ** len(lam) for lam, c in hp.terms.items()) == \
                comb(n + k - 1, n)


# ----------------------------------------------------------- Schur layer

def test_schur_orthonormality():
    for n in range(1, 8):
        lams = partitions_of(n)
        schurs = {lam: SymFunc.single("s", lam, n) for lam in lams}
        for lam in lams:
            for mu in lams:
                assert scalar_product(schurs[lam], schurs[mu]) == \
                    (1 if lam == mu else 0)


def test_gram_schmidt_weight_one():
    assert schur_by_gram_schmidt(1) == {
        Partition((1,)): SymFunc.single("m", (1,), 1)}


def test_gram_schmidt_weight_two():
    got = schur_by_gram_schmidt(2)
    assert got[Partition((1, 1))] == SymFunc.single("m", (1, 1), 2)
    assert got[Partition((2,))] == SymFunc("m", {(2,): 1, (1, 1): 1}, 2)


def test_gram_schmidt_weight_three_kostka():
    got = schur_by_gram_schmidt(3)
    assert got[Partition((2, 1))] == SymFunc("m", {(2, 1): 1, (1, 1, 1): 2}, 3)
    assert got[Partition((3,))] == \
        SymFunc("m", {(3,): 1, (2, 1): 1, (1, 1, 1): 1}, 3)


def test_gram_schmidt_matches_character_route():
    for n in range(1, 7):
        got = schur_by_gram_schmidt(n)
        for lam in partitions_of(n):
            by_characters = from_p(to_p(SymFunc.single("s", lam, n)), "m")
            assert got[lam] == by_characters


def test_gram_schmidt_vectors_have_unit_norm():
    for n in range(1, 7):
        for vec in schur_by_gram_schmidt(n).values():
            assert scalar_product(vec, vec) == 1


def test_gram_schmidt_rejects_weight_zero():
    with pytest.raises(ValueError):
        schur_by_gram_schmidt(0)
