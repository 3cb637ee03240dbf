"""Irreducible decomposition, associated primes, and prefix renumbering.

For a monomial ideal the associated primes of S/I are the supports of an
irredundant irreducible decomposition, each read as the prime generated by
those variables.  When the primes form a chain under inclusion, renumbering
the variables so every prime becomes a prefix (x_1,...,x_r) turns the ideal
into one of Borel type, which unlocks the chain and truncation regularity
methods for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .errors import InternalCheckError, UsageError
from .ideal import MonomialIdeal, minimalize
from .ring import Monomial


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure variable powers, plus its support."""

    ideal: MonomialIdeal
    support: frozenset[int]


@dataclass(frozen=True)
class AssociatedPrimes:
    """Supports of the irredundant components, with chain-order data."""

    primes: tuple[frozenset[int], ...]  # sorted by (size, elements)
    totally_ordered: bool
    renumbering: tuple[int, ...] | None  # old var -> new var, when totally ordered


def irreducible_decomposition(I: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """Irredundant irreducible components whose intersection is I.

    Splits the (canonically) first mixed generator g = x_i^a * v at its
    smallest supporting variable: I = (I + (x_i^a)) * cap * (I + (v)); leaves
    of the recursion have pure-power generators only.  Redundant components
    (those containing the intersection of the others) are discarded, and the
    result is verified by re-intersecting.
    """
    if I.improper or I.is_zero:
        raise UsageError("irreducible_decomposition requires a proper nonzero ideal")
    components = _decompose(I)
    inter = reduce(lambda a, b: a.intersect(b), (c.ideal for c in components))
    if inter != I:
        raise InternalCheckError("irreducible components do not intersect back to the ideal")
    return components


@lru_cache(maxsize=4096)
def _decompose(I: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    raw = _split(I)
    # drop exact duplicates, then any component containing the intersection
    # of the others (containment checked exactly on generators)
    unique = list(dict.fromkeys(raw))
    kept = list(unique)
    changed = True
    while changed and len(kept) > 1:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1 :]
            inter = reduce(lambda a, b: a.intersect(b), others)
            if kept[idx].contains_ideal(inter):
                kept.pop(idx)
                changed = True
                break
    comps = tuple(
        IrreducibleComponent(c, frozenset(i for g in c.gens for i in g.support))
        for c in sorted(kept, key=lambda c: tuple(g.sort_key() for g in c.gens))
    )
    return comps


def _split(I: MonomialIdeal) -> tuple[MonomialIdeal, ...]:
    pivot = None
    for g in I.gens:  # canonical generator order fixes the pivot deterministically
        if len(g.support) > 1:
            pivot = g
            break
    if pivot is None:
        return (I,)
    i = pivot.support[0]
    a = pivot.exponents[i - 1]
    power = Monomial(I.ring, tuple(a if k == i - 1 else 0 for k in range(I.ring.n)))
    rest = pivot.exact_divide(power)
    left = minimalize(I.ring, I.gens + (power,))
    right = minimalize(I.ring, I.gens + (rest,))
    return _split(left) + _split(right)


def associated_primes(I: MonomialIdeal) -> AssociatedPrimes:
    """Distinct component supports, chain-order test, and prefix renumbering."""
    comps = irreducible_decomposition(I)
    supports = sorted({c.support for c in comps}, key=lambda s: (len(s), sorted(s)))
    ordered = all(supports[k] <= supports[k + 1] for k in range(len(supports) - 1))
    renumbering = None
    if ordered:
        new_order: list[int] = []
        for sup in supports:
            new_order.extend(sorted(sup - set(new_order)))
        new_order.extend(sorted(set(range(1, I.ring.n + 1)) - set(new_order)))
        perm = [0] * I.ring.n
        for new_idx, old in enumerate(new_order, start=1):
            perm[old - 1] = new_idx
        renumbering = tuple(perm)
    return AssociatedPrimes(tuple(supports), ordered, renumbering)


def renumber(I: MonomialIdeal, perm: tuple[int, ...]) -> MonomialIdeal:
    """Permute variables; perm[i-1] is the new index of old variable i."""
    return I.renumbered(perm)


def apply_to_support(perm: tuple[int, ...], support: frozenset[int]) -> frozenset[int]:
    return frozenset(perm[i - 1] for i in support)
