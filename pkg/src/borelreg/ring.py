"""Polynomial-ring contexts and exponent-vector monomials.

Variables are 1-based in the public API (``x1 .. xn``, matching the
display names); exponent vectors are 0-indexed tuples internally.  All
values are immutable and hashable, so they can be shared freely and used
as cache keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .errors import ContextMismatchError, UsageError


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring fixed by its variable count and display names.

    ``n = 1`` is permitted even though most of the theory assumes at least
    two variables: the sequential-chain construction restricts ideals into
    progressively smaller rings that can bottom out at one variable.
    """

    n: int
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise UsageError(f"ring needs at least one variable, got n={self.n!r}")
        names = tuple(self.names) if self.names else default_names(self.n)
        if len(names) != self.n:
            raise UsageError(f"expected {self.n} variable names, got {len(names)}")
        if any(not s for s in names):
            raise UsageError("variable names must be non-empty")
        if len(set(names)) != self.n:
            raise UsageError("variable names must be unique")
        object.__setattr__(self, "names", names)

    def name(self, i: int) -> str:
        """Display name of variable i (1-based)."""
        self.check_var(i)
        return self.names[i - 1]

    def check_var(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise UsageError(f"variable index {i} outside 1..{self.n}")

    def variable(self, i: int) -> "Monomial":
        """The monomial x_i."""
        self.check_var(i)
        exps = [0] * self.n
        exps[i - 1] = 1
        return Monomial(self, tuple(exps))

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def monomial(self, *exponents: int) -> "Monomial":
        return Monomial(self, tuple(exponents))

    def extended(self, extra: int) -> "RingContext":
        """Ring with `extra` fresh variables appended after the current ones."""
        if extra < 0:
            raise UsageError("cannot extend by a negative count")
        names = list(self.names)
        taken = set(names)
        k = self.n + 1
        while len(names) < self.n + extra:
            cand = f"x{k}"
            while cand in taken:
                cand += "'"
            names.append(cand)
            taken.add(cand)
            k += 1
        return RingContext(self.n + extra, tuple(names))

    def restricted(self, m: int) -> "RingContext":
        if not 1 <= m <= self.n:
            raise UsageError(f"cannot restrict {self.n} variables to {m}")
        return RingContext(m, self.names[:m])


@dataclass(frozen=True)
class Monomial:
    """A monomial as a full exponent vector in a fixed ring."""

    ring: RingContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != self.ring.n:
            raise UsageError(
                f"exponent vector of length {len(exps)} in a ring with {self.ring.n} variables"
            )
        if any(e < 0 for e in exps):
            raise UsageError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def max_var(self) -> int:
        """Largest 1-based index of a dividing variable; 0 for the unit monomial."""
        for i in range(self.ring.n - 1, -1, -1):
            if self.exponents[i] > 0:
                return i + 1
        return 0

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        """Ascending 1-based indices of the dividing variables."""
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def _require_same_ring(self, other: "Monomial") -> None:
        if self.ring != other.ring:
            raise ContextMismatchError(f"mixed rings: {self.ring} vs {other.ring}")

    def divides(self, other: "Monomial") -> bool:
        self._require_same_ring(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._require_same_ring(other)
        return Monomial(self.ring, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._require_same_ring(other)
        return Monomial(self.ring, tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def colon(self, other: "Monomial") -> "Monomial":
        """Generator of the colon (self) : (other), i.e. self / gcd(self, other)."""
        self._require_same_ring(other)
        return Monomial(self.ring, tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._require_same_ring(other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def exact_divide(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise UsageError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def shifted(self, i: int, delta: int) -> "Monomial":
        """Copy with the exponent of variable i (1-based) changed by delta."""
        self.ring.check_var(i)
        exps = list(self.exponents)
        exps[i - 1] += delta
        return Monomial(self.ring, tuple(exps))

    def var_power(self, i: int, power: int) -> "Monomial":
        """Quotient by x_i^power (exact)."""
        return self.shifted(i, -power)

    def sort_key(self) -> tuple:
        # Canonical order used everywhere: degree first, then lex on exponents.
        return (self.degree, self.exponents)

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(self.ring.names[i])
            elif e > 1:
                parts.append(f"{self.ring.names[i]}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def max_var(u: Monomial) -> int:
    """m(u): largest index of a dividing variable, 0 for the unit monomial."""
    return u.max_var


def product(monomials) -> Monomial:
    monomials = list(monomials)
    if not monomials:
        raise UsageError("product of an empty monomial list is ring-dependent")
    return reduce(lambda a, b: a * b, monomials)
