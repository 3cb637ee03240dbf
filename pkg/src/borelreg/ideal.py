"""Monomial ideals as canonical minimal generating sets.

Every operation returns a re-minimalized ideal, so ideal equality is plain
structural equality of the sorted generator tuples.  The improper ideal
(the whole ring) is a tagged value rather than a fake generator list; the
zero ideal is the empty generator list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import kernels
from .errors import ContextMismatchError, InternalCheckError, UsageError
from .ring import Monomial, RingContext

# Cap on exhaustive degree-d enumeration; desk-scale inputs stay far below.
MAX_ENUMERATION = 5_000_000


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, canonically represented.

    ``gens`` is the minimal generating set sorted by (degree, lex) and is
    empty for both the zero ideal and the improper ideal; the two are told
    apart by the ``improper`` flag.
    """

    ring: RingContext
    gens: tuple[Monomial, ...] = field(default=())
    improper: bool = False

    def __post_init__(self):
        gens = tuple(self.gens)
        if self.improper and gens:
            raise UsageError("the improper ideal carries no generator list")
        keys = []
        for g in gens:
            if g.ring != self.ring:
                raise ContextMismatchError("generator from a different ring")
            if g.is_unit:
                raise UsageError("unit generator; use the improper flag instead")
            keys.append(g.sort_key())
        if any(keys[i] >= keys[i + 1] for i in range(len(keys) - 1)):
            raise UsageError("generators must be strictly sorted; use minimalize()")
        object.__setattr__(self, "gens", gens)

    # -- basic views -------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def whole_ring(cls, ring: RingContext) -> "MonomialIdeal":
        return cls(ring, (), improper=True)

    @property
    def is_zero(self) -> bool:
        return not self.improper and not self.gens

    @property
    def is_proper(self) -> bool:
        return not self.improper

    @property
    def deg(self) -> int:
        """Maximum degree of a minimal generator."""
        if not self.gens:
            raise UsageError("deg() is undefined for the zero and improper ideals")
        return self.gens[-1].degree

    @property
    def min_deg(self) -> int:
        if not self.gens:
            raise UsageError("min_deg() is undefined for the zero and improper ideals")
        return self.gens[0].degree

    @property
    def max_var(self) -> int:
        """m(I): largest variable index appearing in a minimal generator."""
        return max((g.max_var for g in self.gens), default=0)

    @property
    def is_artinian(self) -> bool:
        """True iff the ideal contains a pure power of every variable."""
        if self.improper:
            return True
        pure = set()
        for g in self.gens:
            sup = g.support
            if len(sup) == 1:
                pure.add(sup[0])
        return len(pure) == self.ring.n

    def _require_same_ring(self, other) -> None:
        if self.ring != other.ring:
            raise ContextMismatchError("operands live in different rings")

    def __iter__(self):
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if self.improper:
            return "(1)"
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    # -- membership and arithmetic -----------------------------------------

    def contains(self, u: Monomial) -> bool:
        self._require_same_ring(u)
        if self.improper:
            return True
        d = u.degree
        for g in self.gens:
            if g.degree > d:
                return False
            if g.divides(u):
                return True
        return False

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """self >= other as sets."""
        self._require_same_ring(other)
        if self.improper:
            return True
        if other.improper:
            return False
        return all(self.contains(g) for g in other.gens)

    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._require_same_ring(other)
        if self.improper or other.improper:
            return MonomialIdeal.whole_ring(self.ring)
        return minimalize(self.ring, self.gens + other.gens)

    __add__ = sum

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._require_same_ring(other)
        if self.improper:
            return other
        if other.improper:
            return self
        pairs = [u.lcm(v) for u in self.gens for v in other.gens]
        return minimalize(self.ring, pairs)

    def colon(self, v: Monomial) -> "MonomialIdeal":
        """(I : v) for a monomial v."""
        self._require_same_ring(v)
        if self.improper:
            return self
        return minimalize(self.ring, [g.colon(v) for g in self.gens])

    def saturate_variable(self, j: int) -> "MonomialIdeal":
        """(I : x_j^infinity), by zeroing the j-th exponent of every generator."""
        self._reject_degenerate("saturate_variable")
        self.ring.check_var(j)
        dropped = [Monomial(self.ring, tuple(0 if k == j - 1 else e for k, e in enumerate(g.exponents)))
                   for g in self.gens]
        out = minimalize(self.ring, dropped)
        if out.gens and out.deg > self.deg:
            raise InternalCheckError("saturation increased a generator degree")
        return out

    def saturate_prefix_prime(self, j: int) -> "MonomialIdeal":
        """(I : (x_1,...,x_j)^infinity), as the fixpoint of K -> intersection of (K : x_k).

        Termination: every non-fixpoint step strictly enlarges the ideal, and
        every iterate is generated inside the componentwise exponent box of
        G(I) -- a colon only shrinks exponents and an lcm takes maxes, so
        neither leaves the box (asserted).  Strictly ascending chains of
        ideals generated inside a fixed finite box are finite.  Intermediate
        generator *degrees* can exceed deg(I), so they are no guard.
        """
        self._reject_degenerate("saturate_prefix_prime")
        self.ring.check_var(j)
        box = tuple(max(g.exponents[k] for g in self.gens) for k in range(self.ring.n))
        cap = 1
        for b in box:
            cap *= b + 1
        current = self
        for _ in range(cap + 1):
            step = current.colon(self.ring.variable(1))
            for k in range(2, j + 1):
                step = step.intersect(current.colon(self.ring.variable(k)))
            if step == current:
                return current
            if step.improper:
                return step
            if any(any(g.exponents[k] > box[k] for k in range(self.ring.n)) for g in step.gens):
                raise InternalCheckError("prefix saturation escaped the generator exponent box")
            if not step.contains_ideal(current):
                raise InternalCheckError("prefix saturation step failed to grow the ideal")
            current = step
        raise InternalCheckError("prefix saturation failed to stabilize")

    # -- truncation and Hilbert counting -------------------------------------

    def truncate(self, e: int) -> "MonomialIdeal":
        """The ideal generated by the monomials of degree >= e inside self.

        Its minimal generators are exactly the degree-e monomials lying in the
        ideal plus the original generators of degree > e; no minimalization
        pass is needed (equal-degree monomials never divide each other, and a
        degree-e member dividing a minimal generator of higher degree would
        contradict that generator's minimality).  Cross-checked against the
        definition-level construction in the test suite.
        """
        if e < 0:
            raise UsageError("truncation degree must be >= 0")
        if self.is_zero:
            return self
        if self.improper:
            return maximal_power(self.ring, e)
        if e <= self.min_deg:
            return self
        small = [g for g in self.gens if g.degree < e]
        keep = [g for g in self.gens if g.degree > e]
        at_e = [g for g in self.gens if g.degree == e]
        rows = _degree_rows(self.ring.n, e)
        mask = kernels.divisible_mask(_matrix_of(small + at_e), rows)
        level = [Monomial(self.ring, tuple(int(x) for x in rows[i])) for i in np.nonzero(mask)[0]]
        return MonomialIdeal(self.ring, tuple(sorted(level + keep, key=Monomial.sort_key)))

    def hilbert_quotient(self, d: int) -> int:
        """Number of degree-d monomials of the ring that lie outside the ideal."""
        return _hilbert_quotient_cached(self, d)

    # -- ring changes ---------------------------------------------------------

    def extend(self, extra: int) -> "MonomialIdeal":
        """Same generators viewed in a ring with `extra` appended variables."""
        big = self.ring.extended(extra)
        if self.improper:
            return MonomialIdeal.whole_ring(big)
        gens = tuple(Monomial(big, g.exponents + (0,) * extra) for g in self.gens)
        return MonomialIdeal(big, gens)

    def restrict(self, m: int) -> "MonomialIdeal":
        """Same generators viewed in the subring on the first m variables."""
        small = self.ring.restricted(m)
        if self.improper:
            return MonomialIdeal.whole_ring(small)
        if self.max_var > m:
            raise UsageError(f"a generator involves x{self.max_var} > x{m}; cannot restrict")
        gens = tuple(Monomial(small, g.exponents[:m]) for g in self.gens)
        return MonomialIdeal(small, gens)

    def renumbered(self, perm: tuple[int, ...]) -> "MonomialIdeal":
        """Permute variables: perm[i-1] is the new index of old variable i."""
        n = self.ring.n
        if sorted(perm) != list(range(1, n + 1)):
            raise UsageError(f"{perm} is not a permutation of 1..{n}")
        if self.improper:
            return self
        moved = []
        for g in self.gens:
            exps = [0] * n
            for i, e in enumerate(g.exponents):
                exps[perm[i] - 1] = e
            moved.append(Monomial(self.ring, tuple(exps)))
        out = minimalize(self.ring, moved)
        if len(out.gens) != len(self.gens):
            raise InternalCheckError("renumbering changed the number of minimal generators")
        return out

    def _reject_degenerate(self, op: str) -> None:
        if self.improper or self.is_zero:
            raise UsageError(f"{op} requires a proper nonzero ideal")


# ---------------------------------------------------------------------------
# constructors and free functions


def minimalize(ring: RingContext, monomials: Iterable[Monomial]) -> MonomialIdeal:
    """Canonical ideal from an arbitrary generating set.

    Keeps exactly the divisibility-minimal monomials, deduplicated and
    sorted.  A unit monomial anywhere makes the result the improper ideal.
    """
    seen = set()
    for m in monomials:
        if m.ring != ring:
            raise ContextMismatchError("generator from a different ring")
        if m.is_unit:
            return MonomialIdeal.whole_ring(ring)
        seen.add(m.exponents)
    if not seen:
        return MonomialIdeal.zero(ring)
    items = sorted(seen, key=lambda e: (sum(e), e))
    if len(items) <= 48:
        kept: list[tuple[int, ...]] = []
        for cand in items:
            if not any(all(a <= b for a, b in zip(k, cand)) for k in kept):
                kept.append(cand)
    else:
        # a candidate is redundant iff some strictly smaller-degree candidate
        # divides it (same-degree divisibility would mean equality, deduped above)
        arr = np.array(items, dtype=np.int64)
        degs = arr.sum(axis=1)
        kept_mask = np.ones(len(items), dtype=bool)
        for d in np.unique(degs)[1:]:
            sel = degs == d
            smaller = arr[degs < d]
            kept_mask[sel] = ~kernels.divisible_mask(smaller, arr[sel])
        kept = [items[i] for i in np.nonzero(kept_mask)[0]]
    return MonomialIdeal(ring, tuple(Monomial(ring, e) for e in kept))


def ideal(ring: RingContext, *exponent_rows) -> MonomialIdeal:
    """Convenience constructor from raw exponent tuples."""
    return minimalize(ring, [Monomial(ring, tuple(r)) for r in exponent_rows])


def maximal_power(ring: RingContext, e: int) -> MonomialIdeal:
    """(x_1,...,x_n)^e: the ideal of all monomials of degree >= e."""
    if e < 0:
        raise UsageError("power must be >= 0")
    if e == 0:
        return MonomialIdeal.whole_ring(ring)
    rows = _degree_rows(ring.n, e)
    gens = tuple(Monomial(ring, tuple(int(x) for x in row)) for row in rows)
    return MonomialIdeal(ring, tuple(sorted(gens, key=Monomial.sort_key)))


def monomials_of_degree(ring: RingContext, d: int) -> list[Monomial]:
    """All monomials of total degree d, in canonical order."""
    rows = _degree_rows(ring.n, d)
    out = [Monomial(ring, tuple(int(x) for x in row)) for row in rows]
    out.sort(key=Monomial.sort_key)
    return out


def _degree_rows(n: int, d: int) -> np.ndarray:
    count = math.comb(d + n - 1, n - 1)
    if count > MAX_ENUMERATION:
        raise UsageError(
            f"enumerating {count} monomials of degree {d} in {n} variables "
            f"exceeds the cap of {MAX_ENUMERATION}"
        )
    return kernels.degree_vectors(n, d)


def _matrix_of(gens: Iterable[Monomial]) -> np.ndarray:
    gens = list(gens)
    if not gens:
        return np.empty((0, 0), dtype=np.int64)
    return np.array([g.exponents for g in gens], dtype=np.int64)


def gens_matrix(I: MonomialIdeal) -> np.ndarray:
    """Generator exponents as an int64 matrix in canonical order."""
    if not I.gens:
        return np.empty((0, I.ring.n), dtype=np.int64)
    return np.array([g.exponents for g in I.gens], dtype=np.int64)


@lru_cache(maxsize=65536)
def _hilbert_quotient_cached(I: MonomialIdeal, d: int) -> int:
    if d < 0:
        raise UsageError("degree must be >= 0")
    if I.improper:
        return 0
    n = I.ring.n
    if d == 0:
        return 1
    total = math.comb(d + n - 1, n - 1)
    relevant = [g for g in I.gens if g.degree <= d]
    if not relevant:
        return total
    rows = _degree_rows(n, d)
    mask = kernels.divisible_mask(_matrix_of(relevant), rows)
    return total - int(np.count_nonzero(mask))


def hilbert_quotient(I: MonomialIdeal, d: int) -> int:
    """Hilbert function of S/I at degree d, by exhaustive enumeration."""
    return _hilbert_quotient_cached(I, d)
