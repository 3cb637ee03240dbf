"""Shared fixtures and naive reference implementations.

The naive_* helpers are deliberately independent of the package internals:
plain itertools enumeration and inline divisibility, used to freeze
expected values and to cross-check the optimized paths.
"""

from itertools import combinations_with_replacement, product

import pytest

from borelreg import MonomialIdeal, Monomial, RingContext, minimalize


def mk(n, *rows) -> MonomialIdeal:
    ring = RingContext(n)
    return minimalize(ring, [Monomial(ring, tuple(r)) for r in rows])


def mono(ideal_or_ring, *exps) -> Monomial:
    ring = ideal_or_ring if isinstance(ideal_or_ring, RingContext) else ideal_or_ring.ring
    return Monomial(ring, tuple(exps))


# ---------------------------------------------------------------------------
# naive oracles


def naive_monomials_of_degree(n, d):
    """Exponent tuples of total degree d via combinations with repetition."""
    out = set()
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.add(tuple(exps))
    return sorted(out)


def naive_divides(u, v):
    return all(a <= b for a, b in zip(u, v))


def naive_member(gens, u):
    return any(naive_divides(g, u) for g in gens)


def naive_minimalize(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    kept = []
    for g in gens:
        if not any(naive_divides(k, g) for k in kept):
            kept.append(g)
    return kept


def naive_hilbert(gens, n, d):
    return sum(1 for u in naive_monomials_of_degree(n, d) if not naive_member(gens, u))


def naive_truncate(gens, n, e):
    """Literal construction: keep high-degree gens, pad low ones to degree e."""
    out = [g for g in gens if sum(g) >= e]
    for g in gens:
        gap = e - sum(g)
        if gap > 0:
            for w in naive_monomials_of_degree(n, gap):
                out.append(tuple(a + b for a, b in zip(g, w)))
    return naive_minimalize(out)


def naive_stable_all_monomials(gens, n, up_to):
    """Monomial-level stability of the ideal generated by gens, checked for
    every member of degree <= up_to."""
    for d in range(up_to + 1):
        for u in naive_monomials_of_degree(n, d):
            if not naive_member(gens, u):
                continue
            m = max((i for i, e in enumerate(u) if e > 0), default=-1)
            for i in range(m):
                moved = list(u)
                moved[m] -= 1
                moved[i] += 1
                if not naive_member(gens, tuple(moved)):
                    return False
    return True


def exponents(I: MonomialIdeal):
    return [g.exponents for g in I.gens]


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the jit kernels once so timed tests measure algorithms only."""
    from borelreg import kernels

    for name in kernels.available_backends():
        backend = kernels.get_backend(name)
        import numpy as np

        backend.degree_vectors(3, 4)
        gens = np.array([[2, 0, 0], [1, 1, 0]], dtype=np.int64)
        backend.divisible_mask(gens, backend.degree_vectors(3, 3))
        backend.first_unstable(gens, gens.sum(axis=1))
