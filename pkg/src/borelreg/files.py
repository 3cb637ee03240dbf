"""Ideal file format and JSON serialization.

File grammar::

    ring <n>            # first non-comment line, exactly once
    x1^2*x3             # one monomial per line, '#' starts a comment
    x2

Monomials are '*'-joined factors ``name`` or ``name^k`` with k >= 1, or the
bare token ``1`` for the unit monomial; each variable may appear at most
once per monomial.  A file with a header and no generator lines is the zero
ideal.  Parsing always minimalizes, so a ``1`` line yields the improper
ideal rather than an error.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .ideal import MonomialIdeal, minimalize
from .ring import Monomial, RingContext

_FACTOR = re.compile(r"^(?P<name>[^\s^*]+?)(?:\^(?P<exp>[^\s^*]+))?$")


def parse_monomial(ring: RingContext, text: str, line: int | None = None) -> Monomial:
    """Parse one monomial in the grammar above, with positional errors."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty monomial", line)
    if stripped == "1":
        return ring.one()
    exps = [0] * ring.n
    col = 1 + (len(text) - len(text.lstrip()))
    for factor in stripped.split("*"):
        factor_stripped = factor.strip()
        if not factor_stripped:
            raise ParseError("empty factor between '*'", line, col)
        m = _FACTOR.match(factor_stripped)
        if m is None:
            raise ParseError(f"malformed factor {factor_stripped!r}", line, col)
        name = m.group("name")
        if name not in ring.names:
            raise ParseError(f"unknown variable {name!r} in a ring on {ring.n} variables", line, col)
        idx = ring.names.index(name)
        raw_exp = m.group("exp")
        if raw_exp is None:
            exp = 1
        else:
            if not raw_exp.isdigit() or int(raw_exp) < 1:
                raise ParseError(f"exponent must be a positive integer, got {raw_exp!r}", line, col)
            exp = int(raw_exp)
        if exps[idx] != 0:
            raise ParseError(f"variable {name!r} appears twice in one monomial", line, col)
        exps[idx] = exp
        col += len(factor) + 1
    return Monomial(ring, tuple(exps))


def parse_ideal_text(text: str) -> MonomialIdeal:
    """Parse the whole file format into a minimalized ideal."""
    ring: RingContext | None = None
    gens: list[Monomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if content.startswith("ring"):
            fields = content.split()
            if len(fields) != 2 or not fields[1].isdigit() or int(fields[1]) < 1:
                raise ParseError("header must be 'ring <positive integer>'", lineno)
            if ring is not None:
                raise ParseError("duplicate ring header", lineno)
            ring = RingContext(int(fields[1]))
            continue
        if ring is None:
            raise ParseError("generator before the 'ring <n>' header", lineno)
        gens.append(parse_monomial(ring, content, line=lineno))
    if ring is None:
        raise ParseError("missing 'ring <n>' header")
    return minimalize(ring, gens)


def format_ideal_text(I: MonomialIdeal) -> str:
    """Inverse of :func:`parse_ideal_text` up to minimalization."""
    lines = [f"ring {I.ring.n}"]
    if I.improper:
        lines.append("1")
    else:
        lines.extend(str(g) for g in I.gens)
    return "\n".join(lines) + "\n"


def ideal_to_json(I: MonomialIdeal) -> dict:
    out: dict = {"ring": I.ring.n, "gens": [str(g) for g in I.gens]}
    if I.ring.names != tuple(f"x{i}" for i in range(1, I.ring.n + 1)):
        out["names"] = list(I.ring.names)
    if I.improper:
        out["improper"] = True
    return out


def ideal_from_json(data: dict) -> MonomialIdeal:
    if "ring" not in data:
        raise ParseError("JSON ideal needs a 'ring' key")
    names = tuple(data["names"]) if "names" in data else ()
    ring = RingContext(int(data["ring"]), names)
    if data.get("improper"):
        return MonomialIdeal.whole_ring(ring)
    gens = [parse_monomial(ring, s) for s in data.get("gens", [])]
    return minimalize(ring, gens)
