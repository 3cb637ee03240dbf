"""Seeded instance generators for the verification harness and the CLI.

Every kind asserts its advertised predicate on the instance it hands out,
so a property run never starts from a mislabeled input.  Generation is a
pure function of the SplitMix64 stream it is given.
"""

from __future__ import annotations

import enum

from .borel import borel_closure, is_borel_type, is_strongly_stable
from .errors import InternalCheckError, UsageError
from .ideal import MonomialIdeal, minimalize
from .ring import Monomial, RingContext
from .rng import SplitMix64

FILTER_RETRY_CAP = 4000


class InstanceKind(str, enum.Enum):
    BOREL_CLOSURE = "borel_closure"
    ARTINIAN = "artinian"
    RANDOM_MONOMIAL = "random_monomial"
    BOREL_TYPE_FILTERED = "borel_type_filtered"
    SUM_OF_BOREL_TYPE = "sum_of_borel_type"


def random_monomial(rng: SplitMix64, ring: RingContext, degree: int) -> Monomial:
    """Uniform-ish monomial of the given total degree (unit for degree 0)."""
    exps = [0] * ring.n
    for _ in range(degree):
        exps[rng.below(ring.n)] += 1
    return Monomial(ring, tuple(exps))


def random_monomial_ideal(
    rng: SplitMix64, ring: RingContext, max_deg: int, max_gens: int | None = None
) -> MonomialIdeal:
    """Minimalized ideal from a handful of random monomials of degree >= 1."""
    count = rng.randint(1, max_gens if max_gens is not None else ring.n + 3)
    gens = [random_monomial(rng, ring, rng.randint(1, max_deg)) for _ in range(count)]
    out = minimalize(ring, gens)
    if out.is_zero or out.improper:
        raise InternalCheckError("random generating set degenerated")
    return out


def artinian_from_exponents(ring: RingContext, exponents: tuple[int, ...]) -> MonomialIdeal:
    """The pure-power ideal (x_1^a1, ..., x_n^an)."""
    if len(exponents) != ring.n or any(a < 1 for a in exponents):
        raise UsageError("need one positive exponent per variable")
    gens = []
    for i, a in enumerate(exponents):
        exps = [0] * ring.n
        exps[i] = a
        gens.append(Monomial(ring, tuple(exps)))
    return minimalize(ring, gens)


def artinian_ideal(rng: SplitMix64, ring: RingContext, max_deg: int) -> MonomialIdeal:
    """Pure powers of every variable, plus up to two extra random monomials."""
    base = artinian_from_exponents(ring, tuple(rng.randint(1, max_deg) for _ in range(ring.n)))
    extras = [
        random_monomial(rng, ring, rng.randint(1, max_deg)) for _ in range(rng.below(3))
    ]
    out = minimalize(ring, list(base.gens) + extras)
    if out.improper or not out.is_artinian:
        raise InternalCheckError("artinian construction failed its own predicate")
    return out


def borel_closure_ideal(rng: SplitMix64, ring: RingContext, max_deg: int) -> MonomialIdeal:
    seeds = []
    for _ in range(rng.randint(1, 3)):
        seed = random_monomial(rng, ring, rng.randint(1, max_deg))
        if len(seed.support) <= 1 and ring.n > 1 and max_deg > 1:
            # closures of pure powers are just powers of prefix primes; redraw
            # once toward mixed seeds so longer saturation chains show up
            seed = random_monomial(rng, ring, rng.randint(2, max_deg))
        seeds.append(seed)
    out = borel_closure(seeds)
    if not is_strongly_stable(out):
        raise InternalCheckError("closure is not strongly stable")
    return out


def borel_type_ideal(rng: SplitMix64, ring: RingContext, max_deg: int) -> MonomialIdeal:
    """Rejection-sample random ideals until the Borel-type predicate passes."""
    for _ in range(FILTER_RETRY_CAP):
        candidate = random_monomial_ideal(rng, ring, max_deg)
        if is_borel_type(candidate):
            return candidate
    raise InternalCheckError(
        f"no Borel-type ideal found in {FILTER_RETRY_CAP} draws (n={ring.n}, deg<={max_deg})"
    )


def borel_type_parts(
    rng: SplitMix64, ring: RingContext, max_deg: int, count: int
) -> list[MonomialIdeal]:
    """A mixed batch of Borel-type ideals (closure / artinian / filtered)."""
    parts = []
    for _ in range(count):
        pick = rng.below(3)
        if pick == 0:
            parts.append(borel_closure_ideal(rng, ring, max_deg))
        elif pick == 1:
            parts.append(artinian_ideal(rng, ring, max_deg))
        else:
            parts.append(borel_type_ideal(rng, ring, max_deg))
    return parts


def sum_of_borel_type_ideal(rng: SplitMix64, ring: RingContext, max_deg: int) -> MonomialIdeal:
    parts = borel_type_parts(rng, ring, max_deg, rng.randint(2, 3))
    total = parts[0]
    for p in parts[1:]:
        total = total.sum(p)
    if not is_borel_type(total):
        raise InternalCheckError("sum of Borel-type ideals failed the predicate")
    return total


def generate(kind: InstanceKind | str, rng: SplitMix64, ring: RingContext, max_deg: int) -> MonomialIdeal:
    """Dispatch by kind; output always satisfies the kind's predicate."""
    kind = InstanceKind(kind)
    if kind is InstanceKind.BOREL_CLOSURE:
        return borel_closure_ideal(rng, ring, max_deg)
    if kind is InstanceKind.ARTINIAN:
        return artinian_ideal(rng, ring, max_deg)
    if kind is InstanceKind.RANDOM_MONOMIAL:
        return random_monomial_ideal(rng, ring, max_deg)
    if kind is InstanceKind.BOREL_TYPE_FILTERED:
        return borel_type_ideal(rng, ring, max_deg)
    if kind is InstanceKind.SUM_OF_BOREL_TYPE:
        return sum_of_borel_type_ideal(rng, ring, max_deg)
    raise UsageError(f"unknown instance kind {kind!r}")


def random_permutation(rng: SplitMix64, n: int) -> tuple[int, ...]:
    """Fisher-Yates shuffle of 1..n driven by the stream."""
    perm = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return tuple(perm)
