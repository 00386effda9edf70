import random
from fractions import Fraction

from symkron.partitions import partitions_of
from symkron.series import SymFunc


def random_symfunc(rng: random.Random, basis: str, degree: int,
                   max_terms: int = 8, constant_free: bool = False) -> SymFunc:
    """Random sparse series; coefficients may collide or cancel, which is
    exactly what the constructors must cope with."""
    terms = {}
    lowest = 1 if constant_free else 0
    if lowest <= degree:
        for _ in range(rng.randint(0, max_terms)):
            weight = rng.randint(lowest, degree)
            lam = rng.choice(partitions_of(weight))
            terms[lam] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return SymFunc(basis, terms, degree)
