"""Seeded random ideals shared by the property and acceptance suites.

Corpus parameters: n in {2, 3}, up to 3 generators per ideal, generator
degree <= 4, nonzero integer coefficients in [-5, 5].  Terms have total
degree at least 2, the singular-germ regime (generators with linear parts
describe germs with a smooth factor and are covered by the worked
fixtures).  Everything is a pure function of the seed.
"""

from germlab import IdealPresentation, Poly
from germlab.seeding import make_rng

CORPUS_SEED = "corpus"


def random_poly(rng, n, max_degree=4, max_terms=4, min_terms=2, min_term_degree=2):
    while True:
        terms = {}
        for _ in range(rng.randint(min_terms, max_terms)):
            while True:
                exp = tuple(rng.randint(0, max_degree) for _ in range(n))
                if min_term_degree <= sum(exp) <= max_degree:
                    break
            c = rng.choice([c for c in range(-5, 6) if c])
            terms[exp] = terms.get(exp, 0) + c
        p = Poly(n, terms)
        if not p.is_zero:
            return p


def random_ideal(n, seed):
    rng = make_rng(CORPUS_SEED, n, seed)
    gens = []
    for _ in range(rng.randint(1, 3)):
        p = random_poly(rng, n)
        if not p.is_zero:
            gens.append(p)
    if not gens:
        gens = [Poly.variable(n, 0)]
    return IdealPresentation(n, gens)


def corpus(n2=60, n3=45):
    """The acceptance corpus: n2 ideals on 2 variables, n3 on 3."""
    return [random_ideal(2, s) for s in range(n2)] + [
        random_ideal(3, s) for s in range(n3)
    ]
