"""Hot inner loops over exponent matrices, with two interchangeable backends.

Everything here operates on plain int64 arrays: a generator set is a
``(G, n)`` matrix of exponent vectors, a batch of monomials a ``(M, n)``
matrix.  The three kernels below dominate the runtime of truncation,
Hilbert-function enumeration and stability scans, so each one exists twice:

* a numba ``@njit`` version (compiled lazily, cached on disk), and
* a pure-numpy fallback with identical semantics, including the scan order
  of the reported stability witness.

Backend selection: the ``BORELREG_KERNELS`` environment variable may be set
to ``numpy`` or ``numba``; unset, numba is used when importable.  Tests and
the benchmark switch at runtime via :func:`set_backend`.

``first_unstable`` expects its generator matrix sorted by (degree, lex)
ascending -- the canonical generator order of ideals -- because membership
of a moved monomial splits into a divisibility scan over the
strictly-smaller-degree prefix plus an equality lookup inside the
same-degree block (two monomials of equal degree divide iff they are
equal).  That split is what keeps stability checks of truncations with
thousands of generators cheap.
"""

from __future__ import annotations

import math
import os
from typing import Callable, NamedTuple

import numpy as np


# ---------------------------------------------------------------------------
# numpy backend


def _np_degree_vectors(n: int, d: int) -> np.ndarray:
    """All exponent vectors of total degree d, first coordinate descending."""
    if n == 1:
        return np.array([[d]], dtype=np.int64)
    blocks = []
    for a in range(d, -1, -1):
        sub = _np_degree_vectors(n - 1, d - a)
        blk = np.empty((sub.shape[0], n), dtype=np.int64)
        blk[:, 0] = a
        blk[:, 1:] = sub
        blocks.append(blk)
    return np.vstack(blocks)


def _np_divisible_mask(gens: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """mask[r] == True iff some generator divides rows[r] (componentwise <=)."""
    m = rows.shape[0]
    out = np.zeros(m, dtype=bool)
    if gens.shape[0] == 0 or m == 0:
        return out
    chunk = max(1, (1 << 22) // max(1, gens.shape[0] * gens.shape[1]))
    for s in range(0, m, chunk):
        e = min(s + chunk, m)
        out[s:e] = (rows[s:e, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
    return out


def _np_first_unstable(gens: np.ndarray, degs: np.ndarray) -> tuple[int, int]:
    g_count, n = gens.shape
    if g_count == 0:
        return (-1, -1)
    pos = gens > 0
    mv = n - 1 - np.argmax(pos[:, ::-1], axis=1)  # 0-based m(g); gens are never 1
    counts = mv  # moves per generator: i0 in [0, mv)
    total = int(counts.sum())
    if total == 0:
        return (-1, -1)
    src = np.repeat(np.arange(g_count), counts)
    offsets = np.concatenate(([0], np.cumsum(counts)[:-1]))
    i0 = np.arange(total) - np.repeat(offsets, counts)
    moved = gens[src].copy()
    moved[np.arange(total), mv[src]] -= 1
    moved[np.arange(total), i0] += 1
    vdeg = degs[src]

    member = np.zeros(total, dtype=bool)
    for d in np.unique(vdeg):
        sel = vdeg == d
        lo = int(np.searchsorted(degs, d, side="left"))
        hi = int(np.searchsorted(degs, d, side="right"))
        vd = moved[sel]
        hit = np.zeros(vd.shape[0], dtype=bool)
        if lo > 0:
            hit |= _np_divisible_mask(gens[:lo], vd)
        block = gens[lo:hi]
        if block.shape[0] > 0:
            # equal degree: divisibility collapses to equality; compare via keys
            max_e = int(max(block.max(initial=0), vd.max(initial=0)))
            bits = max(1, max_e.bit_length())
            if bits * n <= 62:
                weights = (np.int64(1) << (bits * np.arange(n - 1, -1, -1))).astype(np.int64)
                hit |= np.isin(vd @ weights, block @ weights)
            else:  # absurd exponents; exactness over speed
                bset = {tuple(r) for r in block.tolist()}
                hit |= np.fromiter(
                    (tuple(r) in bset for r in vd.tolist()), dtype=bool, count=vd.shape[0]
                )
        member[sel] = hit

    bad = ~member
    if bad.any():
        k = int(np.argmax(bad))  # moves were built in (generator, i0) scan order
        return (int(src[k]), int(i0[k]))
    return (-1, -1)


# ---------------------------------------------------------------------------
# numba backend (optional)


def _build_numba():
    from numba import njit

    @njit(cache=True)
    def fill_degree_vectors(n, d, out):  # pragma: no cover - exercised via wrapper
        v = np.zeros(n, dtype=np.int64)
        v[0] = d
        idx = 0
        while True:
            for k in range(n):
                out[idx, k] = v[k]
            idx += 1
            if v[n - 1] == d:
                break
            j = n - 2
            while v[j] == 0:
                j -= 1
            t = v[n - 1]
            v[j] -= 1
            v[j + 1] = t + 1
            if j + 1 != n - 1:
                v[n - 1] = 0
        return idx

    @njit(cache=True)
    def divisible_mask(gens, rows, out):  # pragma: no cover
        g_count = gens.shape[0]
        m = rows.shape[0]
        n = gens.shape[1]
        for r in range(m):
            hit = False
            for g in range(g_count):
                ok = True
                for k in range(n):
                    if gens[g, k] > rows[r, k]:
                        ok = False
                        break
                if ok:
                    hit = True
                    break
            out[r] = hit

    @njit(cache=True)
    def first_unstable(gens, degs):  # pragma: no cover
        g_count, n = gens.shape
        v = np.empty(n, dtype=np.int64)
        for gi in range(g_count):
            mv = -1
            for k in range(n - 1, -1, -1):
                if gens[gi, k] > 0:
                    mv = k
                    break
            if mv <= 0:
                continue
            d = degs[gi]
            # degree block bounds in the (ascending) degs array
            a, b = 0, g_count
            while a < b:
                mid = (a + b) // 2
                if degs[mid] < d:
                    a = mid + 1
                else:
                    b = mid
            lo = a
            a, b = lo, g_count
            while a < b:
                mid = (a + b) // 2
                if degs[mid] <= d:
                    a = mid + 1
                else:
                    b = mid
            hi = a
            for i0 in range(mv):
                for k in range(n):
                    v[k] = gens[gi, k]
                v[mv] -= 1
                v[i0] += 1
                member = False
                for c in range(lo):
                    ok = True
                    for k in range(n):
                        if gens[c, k] > v[k]:
                            ok = False
                            break
                    if ok:
                        member = True
                        break
                if not member:
                    a, b = lo, hi
                    while a < b:
                        mid = (a + b) // 2
                        cmp = 0
                        for k in range(n):
                            if gens[mid, k] < v[k]:
                                cmp = -1
                                break
                            elif gens[mid, k] > v[k]:
                                cmp = 1
                                break
                        if cmp == 0:
                            member = True
                            break
                        elif cmp < 0:
                            a = mid + 1
                        else:
                            b = mid
                if not member:
                    return (gi, i0)
        return (-1, -1)

    def nb_degree_vectors(n: int, d: int) -> np.ndarray:
        count = math.comb(d + n - 1, n - 1)
        out = np.empty((count, n), dtype=np.int64)
        filled = fill_degree_vectors(n, d, out)
        if filled != count:
            raise AssertionError("degree enumeration miscounted")
        return out

    def nb_divisible_mask(gens: np.ndarray, rows: np.ndarray) -> np.ndarray:
        out = np.empty(rows.shape[0], dtype=bool)
        if gens.shape[0] == 0:
            out[:] = False
            return out
        divisible_mask(gens, rows, out)
        return out

    def nb_first_unstable(gens: np.ndarray, degs: np.ndarray) -> tuple[int, int]:
        if gens.shape[0] == 0:
            return (-1, -1)
        gi, i0 = first_unstable(gens, degs)
        return (int(gi), int(i0))

    return _Backend("numba", nb_degree_vectors, nb_divisible_mask, nb_first_unstable)


# ---------------------------------------------------------------------------
# registry / dispatch


class _Backend(NamedTuple):
    name: str
    degree_vectors: Callable[[int, int], np.ndarray]
    divisible_mask: Callable[[np.ndarray, np.ndarray], np.ndarray]
    first_unstable: Callable[[np.ndarray, np.ndarray], tuple[int, int]]


_BACKENDS: dict[str, _Backend] = {
    "numpy": _Backend("numpy", _np_degree_vectors, _np_divisible_mask, _np_first_unstable)
}

_requested = os.environ.get("BORELREG_KERNELS", "").strip().lower()
if _requested not in ("", "numpy", "numba"):
    raise RuntimeError(f"BORELREG_KERNELS must be 'numpy' or 'numba', not {_requested!r}")

if _requested != "numpy":
    try:
        _BACKENDS["numba"] = _build_numba()
    except ImportError:
        if _requested == "numba":
            raise RuntimeError("BORELREG_KERNELS=numba but numba is not importable")

_active = _BACKENDS["numba" if "numba" in _BACKENDS else "numpy"]
if _requested:
    _active = _BACKENDS[_requested]


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def active_backend() -> str:
    return _active.name


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; have {available_backends()}")
    _active = _BACKENDS[name]


def get_backend(name: str) -> _Backend:
    return _BACKENDS[name]


def degree_vectors(n: int, d: int) -> np.ndarray:
    """All exponent vectors of total degree d in n variables (int64 matrix)."""
    return _active.degree_vectors(n, d)


def divisible_mask(gens: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Boolean mask: per row, is it divisible by some generator row."""
    return _active.divisible_mask(gens, rows)


def first_unstable(gens: np.ndarray, degs: np.ndarray) -> tuple[int, int]:
    """First (generator index, 0-based small-variable index) whose exchange
    move x_i * g / x_{m(g)} leaves the ideal generated by `gens`; (-1, -1)
    when the generator set is stable.  `gens` must be in canonical order."""
    return _active.first_unstable(gens, degs)
