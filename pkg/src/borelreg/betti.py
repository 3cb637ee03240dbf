"""Brute-force multigraded Betti numbers over rational coefficients.

For a monomial ideal I and a multidegree a, the simplicial complex on the
support of a whose faces are the variable subsets T with x^a / prod(T)
still inside I has reduced homology computing beta_{i,a}(I) in dimension
i - 1.  Candidate multidegrees are the lcms of generator subsets, so the
whole table is a finite computation.  Ranks are taken exactly with
fraction-free integer elimination; no floating point enters anywhere.

This module is the ground truth the combinatorial regularity methods are
checked against, so it shares no code path with them: membership tests go
through the plain generator-divisibility ideal API and the homology ranks
are self-contained.  Every run asserts boundary-squared-is-zero, the
degree-zero row against the generator histogram, and the Euler
characteristic alternating sum.

Coefficients are rational (characteristic zero); in five or fewer
variables monomial Betti numbers cannot depend on the field, but the
convention is reported in every serialized table regardless.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .borel import is_stable
from .errors import InternalCheckError, OracleInfeasibleError, UsageError
from .ideal import MonomialIdeal
from .ring import Monomial

DEFAULT_MAX_GENERATORS = 20
DEFAULT_MAX_LATTICE = 200_000
_ENV_BUDGET = "BORELREG_ORACLE_GENS"


def default_generator_budget() -> int:
    raw = os.environ.get(_ENV_BUDGET, "")
    if raw.strip():
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"{_ENV_BUDGET} must be an integer, got {raw!r}")
    return DEFAULT_MAX_GENERATORS


def fraction_free_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals of an integer matrix (Bareiss elimination).

    The two-step cross-multiplication keeps every intermediate an exact
    integer (the division by the previous pivot is exact), so the result is
    the true rational rank with arbitrary-precision arithmetic throughout.
    """
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot_row = None
        for r in range(rank, n_rows):
            if mat[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        for r in range(rank + 1, n_rows):
            factor = mat[r][col]
            for c in range(col, n_cols):
                mat[r][c] = (mat[r][c] * pivot - factor * mat[rank][c]) // prev
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


@dataclass(frozen=True)
class KoszulComplex:
    """Faces, boundaries, and reduced homology of one multidegree's complex."""

    multidegree: Monomial
    support: tuple[int, ...]
    faces_by_card: tuple[tuple[tuple[int, ...], ...], ...]  # index = cardinality
    boundaries: tuple[tuple[tuple[int, ...], ...], ...]  # matrix for card c >= 1
    reduced_dims: tuple[int, ...]  # reduced_dims[i] = dim of homology feeding beta_{i,a}

    @property
    def is_void(self) -> bool:
        return not any(self.faces_by_card)


def upper_koszul_complex(I: MonomialIdeal, a: Monomial) -> KoszulComplex:
    """Build the complex at multidegree a and compute its reduced homology."""
    if I.improper or I.is_zero:
        raise UsageError("the oracle needs a proper nonzero ideal")
    I._require_same_ring(a)
    support = a.support
    faces: list[list[tuple[int, ...]]] = [[] for _ in range(len(support) + 1)]
    for card in range(len(support) + 1):
        for subset in combinations(support, card):
            quotient = a
            for i in subset:
                quotient = quotient.shifted(i, -1)
            if I.contains(quotient):
                faces[card].append(subset)
    f_counts = [len(level) for level in faces]

    boundaries: list[list[list[int]]] = []
    for card in range(1, len(faces)):
        rows = {face: r for r, face in enumerate(faces[card - 1])}
        matrix = [[0] * f_counts[card] for _ in range(f_counts[card - 1])]
        for col, face in enumerate(faces[card]):
            for drop in range(card):
                sub = face[:drop] + face[drop + 1 :]
                matrix[rows[sub]][col] = -1 if drop % 2 else 1
        boundaries.append(matrix)

    _assert_boundary_squared_zero(boundaries)

    ranks = [fraction_free_rank(m) for m in boundaries]
    dims = []
    for i in range(len(faces)):
        below = ranks[i - 1] if i >= 1 else 0  # map out of C_{i-1} (void for i=0)
        above = ranks[i] if i < len(ranks) else 0
        dims.append(f_counts[i] - below - above)
    if any(d < 0 for d in dims):
        raise InternalCheckError("negative homology dimension; rank bookkeeping broken")
    # reduced Euler characteristic both ways
    if sum((-1) ** i * dims[i] for i in range(len(dims))) != sum(
        (-1) ** c * f_counts[c] for c in range(len(f_counts))
    ):
        raise InternalCheckError("Euler characteristic mismatch between faces and homology")
    return KoszulComplex(
        multidegree=a,
        support=support,
        faces_by_card=tuple(tuple(level) for level in faces),
        boundaries=tuple(tuple(tuple(r) for r in m) for m in boundaries),
        reduced_dims=tuple(dims),
    )


def _assert_boundary_squared_zero(boundaries: list[list[list[int]]]) -> None:
    for c in range(1, len(boundaries)):
        upper = boundaries[c]
        lower = boundaries[c - 1]
        if not upper or not lower:
            continue
        inner = len(upper)  # rows of upper == cols of lower
        for r in range(len(lower)):
            for col in range(len(upper[0])):
                if sum(lower[r][k] * upper[k][col] for k in range(inner)) != 0:
                    raise InternalCheckError("boundary composed with boundary is nonzero")


def lcm_lattice(
    I: MonomialIdeal,
    max_generators: int | None = None,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> tuple[Monomial, ...]:
    """Distinct lcms of nonempty generator subsets, in canonical order."""
    if I.improper or I.is_zero:
        raise UsageError("the lcm lattice needs a proper nonzero ideal")
    budget = max_generators if max_generators is not None else default_generator_budget()
    if len(I.gens) > budget:
        raise OracleInfeasibleError(
            f"{len(I.gens)} generators exceed the oracle budget of {budget}"
        )
    points: set[tuple[int, ...]] = set()
    for g in I.gens:
        new = {tuple(max(a, b) for a, b in zip(g.exponents, p)) for p in points}
        points |= new
        points.add(g.exponents)
        if len(points) > max_lattice:
            raise OracleInfeasibleError(f"lcm lattice exceeded {max_lattice} points")
    out = [Monomial(I.ring, p) for p in points]
    out.sort(key=Monomial.sort_key)
    return tuple(out)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers of an ideal, rational coefficients."""

    ideal: MonomialIdeal
    entries: tuple[tuple[int, tuple[int, ...], int], ...]  # (i, multidegree, beta)
    coefficients: str = "rational"

    def graded(self) -> dict[tuple[int, int], int]:
        """beta_{i,j} summed over multidegrees of total degree j."""
        out: dict[tuple[int, int], int] = {}
        for i, exps, beta in self.entries:
            key = (i, sum(exps))
            out[key] = out.get(key, 0) + beta
        return out

    @property
    def regularity(self) -> int:
        return max(sum(exps) - i for i, exps, beta in self.entries)

    def render(self) -> str:
        """Macaulay-style graded layout: rows are j - i, columns are i."""
        graded = self.graded()
        max_i = max(i for i, _ in graded)
        rows = sorted({j - i for i, j in graded})
        head = ["      "] + [f"{i:>5}" for i in range(max_i + 1)]
        lines = ["".join(head)]
        totals = ["total:"] + [
            f"{sum(b for (i, j), b in graded.items() if i == col):>5}" for col in range(max_i + 1)
        ]
        lines.append("".join(totals))
        for d in rows:
            cells = [f"{d:>5}:"]
            for i in range(max_i + 1):
                beta = graded.get((i, i + d), 0)
                cells.append(f"{beta if beta else '.':>5}")
            lines.append("".join(cells))
        return "\n".join(lines)


def betti_table(
    I: MonomialIdeal,
    max_generators: int | None = None,
    max_lattice: int = DEFAULT_MAX_LATTICE,
) -> BettiTable:
    """Full multigraded Betti table via upper Koszul homology.

    Always runs its self-checks: boundary squared zero and the Euler sum per
    multidegree (inside :func:`upper_koszul_complex`), and the degree-zero
    row against the minimal-generator histogram here.
    """
    lattice = lcm_lattice(I, max_generators=max_generators, max_lattice=max_lattice)
    entries: list[tuple[int, tuple[int, ...], int]] = []
    for a in lattice:
        complex_ = upper_koszul_complex(I, a)
        for i, dim in enumerate(complex_.reduced_dims):
            if dim > 0:
                entries.append((i, a.exponents, dim))
    table = BettiTable(I, tuple(sorted(entries, key=lambda t: (t[0], sum(t[1]), t[1]))))

    from_table: dict[int, int] = {}
    for i, exps, beta in table.entries:
        if i == 0:
            from_table[sum(exps)] = from_table.get(sum(exps), 0) + beta
    from_gens: dict[int, int] = {}
    for g in I.gens:
        from_gens[g.degree] = from_gens.get(g.degree, 0) + 1
    if from_table != from_gens:
        raise InternalCheckError(
            f"homological degree-zero row {from_table} disagrees with the "
            f"generator histogram {from_gens}"
        )
    return table


def reg_oracle(I: MonomialIdeal, max_generators: int | None = None) -> int:
    """Regularity as max(|a| - i) over nonzero beta_{i,a} of the ideal."""
    return betti_table(I, max_generators=max_generators).regularity


def reg_of_stable(I: MonomialIdeal) -> int:
    """Cheap second oracle: a stable ideal's regularity is its top generator
    degree (its minimal resolution is the classical Eliahou-Kervaire one)."""
    if not is_stable(I):
        raise UsageError("reg_of_stable requires a stable ideal")
    return I.deg


def oracle_feasible(I: MonomialIdeal, max_generators: int | None = None) -> bool:
    budget = max_generators if max_generators is not None else default_generator_budget()
    if I.improper or I.is_zero:
        return False
    return len(I.gens) <= budget
