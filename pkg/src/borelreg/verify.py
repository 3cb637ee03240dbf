"""Seeded property-verification harness.

Every invariant of the library -- monomial arithmetic laws, ideal-algebra
identities, the Borel-type characterizations, the chain formula, the
stability of high truncations, the sum bound, the associated-primes route,
and the oracle self-checks -- is a named property here.  A property run draws its
instances from a (seed, property-name, index) derived stream, so a failure
dump is a complete replay artifact: the exact instance files plus the
command that regenerates them.

Two runs with the same config produce byte-identical reports; nothing
time- or order-dependent enters the output.  Oracle-infeasible draws are
recorded as skipped, never as passed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import betti as betti_mod
from .betti import oracle_feasible, reg_of_stable, reg_oracle
from .borel import (
    borel_closure,
    is_borel_type,
    is_borel_type_exchange,
    is_stable,
    is_strongly_stable,
    replay_witness,
)
from .chain import build_chain, check_chain_hilbert_identity, reg_via_chain, regularity_upper_bound
from .errors import BorelRegError, OracleInfeasibleError
from .files import format_ideal_text
from .generators import (
    InstanceKind,
    artinian_ideal,
    borel_closure_ideal,
    borel_type_parts,
    generate,
    random_monomial,
    random_monomial_ideal,
    random_permutation,
)
from .ideal import MonomialIdeal, hilbert_quotient, maximal_power, minimalize, monomials_of_degree
from .primes import apply_to_support, associated_primes, irreducible_decomposition
from .regularity import check_sum_bound, reg_artinian, reg_borel_checked, reg_via_truncation
from .ring import Monomial, RingContext
from .rng import SplitMix64, stream


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    count: int = 200
    n_range: tuple[int, int] = (2, 4)
    deg_range: tuple[int, int] = (1, 4)
    properties: tuple[str, ...] | None = None  # None = every registered property
    kind: str | None = None  # force an instance kind where a property allows it
    oracle_max_gens: int = 20
    oracle_max_lattice: int = 200_000

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "n_range": list(self.n_range),
            "deg_range": list(self.deg_range),
            "properties": sorted(self.properties) if self.properties else None,
            "kind": self.kind,
            "oracle_max_gens": self.oracle_max_gens,
            "oracle_max_lattice": self.oracle_max_lattice,
        }


@dataclass(frozen=True)
class FailureRecord:
    prop: str
    index: int
    witness: str
    ideals: tuple[tuple[str, str], ...]  # (label, ideal file text)
    replay: str

    def to_dict(self) -> dict:
        return {
            "property": self.prop,
            "index": self.index,
            "witness": self.witness,
            "ideals": {k: v for k, v in self.ideals},
            "replay": self.replay,
        }


@dataclass
class PropertyOutcome:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[FailureRecord] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "failures": [f.to_dict() for f in self.failures],
        }


@dataclass
class VerifyReport:
    config: VerifyConfig
    outcomes: list[PropertyOutcome]

    @property
    def ok(self) -> bool:
        return all(o.failed == 0 for o in self.outcomes)

    def outcome(self, name: str) -> PropertyOutcome:
        for o in self.outcomes:
            if o.name == name:
                return o
        raise KeyError(name)

    def to_json(self) -> str:
        payload = {
            "config": self.config.to_dict(),
            "properties": [o.to_dict() for o in self.outcomes],
            "ok": self.ok,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def render(self) -> str:
        lines = []
        width = max((len(o.name) for o in self.outcomes), default=10)
        for o in self.outcomes:
            mark = "ok " if o.failed == 0 else "FAIL"
            skip = f" skipped={o.skipped}" if o.skipped else ""
            lines.append(f"{mark} {o.name:<{width}} passed={o.passed} failed={o.failed}{skip}")
        for o in self.outcomes:
            for f in o.failures:
                lines.append("")
                lines.append(f"FAILURE {f.prop}[{f.index}]: {f.witness}")
                for label, text in f.ideals:
                    lines.append(f"--- {label} ---")
                    lines.append(text.rstrip("\n"))
                lines.append(f"replay: {f.replay}")
        lines.append("")
        lines.append("all properties passed" if self.ok else "FAILURES PRESENT")
        return "\n".join(lines) + "\n"


class _Skip(Exception):
    """Raised by a runner when the drawn instance cannot exercise the property."""


class _Fail(Exception):
    """Raised by a runner with a witness message and the instances involved."""

    def __init__(self, witness: str, ideals: tuple[tuple[str, MonomialIdeal], ...] = ()):
        super().__init__(witness)
        self.witness = witness
        self.ideals = ideals


# ---------------------------------------------------------------------------
# instance draws


def _draw_ring(rng: SplitMix64, cfg: VerifyConfig, n_cap: int | None = None) -> RingContext:
    lo, hi = cfg.n_range
    if n_cap is not None:
        hi = min(hi, n_cap)
        lo = min(lo, hi)
    return RingContext(rng.randint(lo, hi))


def _draw_deg(rng: SplitMix64, cfg: VerifyConfig) -> int:
    lo, hi = cfg.deg_range
    return rng.randint(max(1, lo), max(1, hi))


def _any_instance(rng, cfg, default_kind: InstanceKind, n_cap: int | None = None) -> MonomialIdeal:
    ring = _draw_ring(rng, cfg, n_cap)
    kind = InstanceKind(cfg.kind) if cfg.kind else default_kind
    return generate(kind, rng, ring, _draw_deg(rng, cfg))


def _borel_instance(rng, cfg, n_cap: int | None = None) -> MonomialIdeal:
    """A Borel-type instance from a mixed pool (closure/artinian/filtered/sum)."""
    if cfg.kind:
        out = _any_instance(rng, cfg, InstanceKind(cfg.kind), n_cap)
        if not is_borel_type(out):
            raise _Skip
        return out
    ring = _draw_ring(rng, cfg, n_cap)
    kinds = (
        InstanceKind.BOREL_CLOSURE,
        InstanceKind.ARTINIAN,
        InstanceKind.BOREL_TYPE_FILTERED,
        InstanceKind.SUM_OF_BOREL_TYPE,
    )
    return generate(kinds[rng.below(len(kinds))], rng, ring, _draw_deg(rng, cfg))


def _oracle_ready(cfg, make, retries: int = 200) -> MonomialIdeal:
    """Retry a source until the Betti oracle budget admits the instance."""
    for _ in range(retries):
        candidate = make()
        if oracle_feasible(candidate, cfg.oracle_max_gens):
            return candidate
    raise _Skip


def _files(*pairs: tuple[str, MonomialIdeal]) -> tuple[tuple[str, MonomialIdeal], ...]:
    return tuple(pairs)


# ---------------------------------------------------------------------------
# property runners; raising _Fail or returning is the contract


def _p_lcm_is_join(rng, cfg):
    ring = _draw_ring(rng, cfg)
    u = random_monomial(rng, ring, rng.randint(0, _draw_deg(rng, cfg)))
    v = random_monomial(rng, ring, rng.randint(0, _draw_deg(rng, cfg)))
    join = u.lcm(v)
    if not (u.divides(join) and v.divides(join)):
        raise _Fail(f"lcm({u},{v})={join} is not a common multiple")
    for d in range(join.degree + 2):
        for w in monomials_of_degree(ring, d):
            if u.divides(w) and v.divides(w) and not join.divides(w):
                raise _Fail(f"common multiple {w} of {u},{v} not divisible by lcm {join}")


def _p_colon_times_divisor(rng, cfg):
    ring = _draw_ring(rng, cfg)
    u = random_monomial(rng, ring, rng.randint(0, _draw_deg(rng, cfg)))
    v = random_monomial(rng, ring, rng.randint(0, _draw_deg(rng, cfg)))
    recombined = u.colon(v) * v
    if (recombined == u) != v.divides(u):
        raise _Fail(f"colon({u},{v})*{v} = {recombined}; divides={v.divides(u)}")


def _p_maxvar_of_product(rng, cfg):
    ring = _draw_ring(rng, cfg)
    u = random_monomial(rng, ring, rng.randint(0, _draw_deg(rng, cfg)))
    v = random_monomial(rng, ring, rng.randint(0, _draw_deg(rng, cfg)))
    if (u * v).max_var != max(u.max_var, v.max_var):
        raise _Fail(f"max_var({u}*{v}) != max(max_var({u}), max_var({v}))")


def _p_minimalize_absorbs_multiples(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    g = I.gens[rng.below(len(I.gens))]
    multiple = g * random_monomial(rng, I.ring, rng.randint(0, _draw_deg(rng, cfg)))
    back = minimalize(I.ring, list(I.gens) + [multiple])
    if back != I:
        raise _Fail(f"adding the multiple {multiple} of {g} changed the ideal", _files(("ideal", I)))


def _p_intersect_membership(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    J = random_monomial_ideal(rng, I.ring, _draw_deg(rng, cfg))
    both = I.intersect(J)
    for d in range(min(I.deg + J.deg, 9) + 1):
        for u in monomials_of_degree(I.ring, d):
            if both.contains(u) != (I.contains(u) and J.contains(u)):
                raise _Fail(
                    f"membership of {u} in the intersection disagrees",
                    _files(("I", I), ("J", J), ("intersection", both)),
                )


def _p_saturation_two_routes(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    j = rng.randint(1, I.ring.n)
    fast = I.saturate_variable(j)
    xj = I.ring.variable(j)
    slow = I
    for _ in range(I.deg + 2):
        step = slow.colon(xj)
        if step == slow:
            break
        slow = step
    if fast != slow:
        raise _Fail(f"saturation routes at x{j} disagree", _files(("ideal", I)))


def _p_artinian_full_saturation(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.ARTINIAN)
    if not I.is_artinian:
        raise _Skip
    if not I.saturate_prefix_prime(I.ring.n).improper:
        raise _Fail("artinian ideal failed to saturate to the whole ring", _files(("ideal", I)))


def _p_truncate_compose(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    top = regularity_upper_bound(I) + 2
    e = rng.randint(0, top)
    e2 = rng.randint(e, top)
    if I.truncate(e).truncate(e2) != I.truncate(max(e, e2)):
        raise _Fail(f"truncate composition failed at e={e}, e'={e2}", _files(("ideal", I)))


def _p_truncate_hilbert(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    e = rng.randint(0, I.deg + 2)
    cut = I.truncate(e)
    n = I.ring.n
    for d in range(e + 3):
        got = hilbert_quotient(cut, d)
        want = hilbert_quotient(I, d) if d >= e else len(monomials_of_degree(I.ring, d))
        if got != want:
            raise _Fail(
                f"HF(S/truncate(I,{e}), {d}) = {got}, expected {want}", _files(("ideal", I))
            )


def _p_star_exchange_agree(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    a = is_borel_type(I)
    b = is_borel_type_exchange(I)
    if a.verdict != b.verdict:
        raise _Fail(
            f"saturation form says {a.verdict}, exchange form says {b.verdict}",
            _files(("ideal", I)),
        )


def _p_stable_implication_chain(rng, cfg):
    kind = InstanceKind.BOREL_CLOSURE if rng.chance(1, 2) else InstanceKind.RANDOM_MONOMIAL
    I = _any_instance(rng, cfg, kind)
    strong = is_strongly_stable(I)
    stable = bool(is_stable(I))
    borel = bool(is_borel_type(I))
    if strong and not stable:
        raise _Fail("strongly stable but not stable", _files(("ideal", I)))
    if stable and not borel:
        raise _Fail("stable but not Borel type", _files(("ideal", I)))


def _p_borel_sum_closed(rng, cfg):
    ring = _draw_ring(rng, cfg)
    parts = borel_type_parts(rng, ring, _draw_deg(rng, cfg), 2)
    total = parts[0].sum(parts[1])
    if total.improper:
        raise _Skip
    if not is_borel_type(total):
        raise _Fail(
            "sum of Borel-type ideals is not Borel type",
            _files(("part1", parts[0]), ("part2", parts[1]), ("sum", total)),
        )


def _p_witness_replay(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    for name, verdict in (
        ("stability", is_stable(I)),
        ("saturation", is_borel_type(I)),
        ("exchange", is_borel_type_exchange(I)),
    ):
        if not verdict.verdict and not replay_witness(I, verdict):
            raise _Fail(f"{name} witness does not replay: {verdict.witness}", _files(("ideal", I)))


def _p_closure_idempotent(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.BOREL_CLOSURE)
    again = borel_closure(list(I.gens))
    if again != I:
        raise _Fail("closure of the closure's generators changed the ideal", _files(("ideal", I)))


def _p_chain_shape(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    chain = build_chain(I)
    n_values = [st.n_l for st in chain.stages]
    if chain.r > I.ring.n or any(a <= b for a, b in zip(n_values, n_values[1:])):
        raise _Fail(f"chain shape broken: n_l sequence {n_values}", _files(("ideal", I)))
    for st in chain.stages:
        if st.restricted.extend(I.ring.n - st.n_l) != st.ideal:
            raise _Fail(f"stage {st.index}: restriction does not extend back", _files(("ideal", I)))


def _p_chain_stage_strict(rng, cfg):
    I = _borel_instance(rng, cfg)
    chain = build_chain(I)
    for st in chain.stages:
        if st.s_value is None or st.saturation == st.restricted:
            raise _Fail(
                f"stage {st.index} is already saturated on Borel-type input",
                _files(("ideal", I)),
            )


def _p_reg_within_degree_bound(rng, cfg):
    I = _borel_instance(rng, cfg)
    value = reg_via_chain(I)
    if value > regularity_upper_bound(I):
        raise _Fail(f"reg {value} exceeds n(deg-1)+1 = {regularity_upper_bound(I)}", _files(("ideal", I)))


def _p_chain_reg_monotone(rng, cfg):
    for _ in range(40):  # chains of length 1 say nothing about monotonicity
        I = _borel_instance(rng, cfg)
        chain = build_chain(I)
        if chain.r >= 2:
            break
    else:
        raise _Skip
    nxt = chain.stages[1].ideal
    if reg_via_chain(nxt) > reg_via_chain(I):
        raise _Fail("regularity increased along the chain", _files(("I0", I), ("I1", nxt)))


def _p_chain_hilbert_identity(rng, cfg):
    I = _borel_instance(rng, cfg)
    chain = build_chain(I)
    report = check_chain_hilbert_identity(chain, reg_via_chain(I) + 3)
    if not report.all_hold:
        raise _Fail(f"stage Hilbert identity failed at {report.failures()}", _files(("ideal", I)))


def _p_reg_three_methods_agree(rng, cfg):
    I = _oracle_ready(cfg, lambda: _borel_instance(rng, cfg, n_cap=4))
    by_chain = reg_via_chain(I)
    by_truncation = reg_via_truncation(I)
    by_oracle = reg_oracle(I, cfg.oracle_max_gens)
    if not (by_chain == by_truncation == by_oracle):
        raise _Fail(
            f"chain={by_chain} truncation={by_truncation} oracle={by_oracle}",
            _files(("ideal", I)),
        )


def _p_truncations_stable_above_reg(rng, cfg):
    I = _borel_instance(rng, cfg)
    value = reg_via_chain(I)
    for e in range(value, regularity_upper_bound(I) + 3):
        verdict = is_stable(I.truncate(e))
        if not verdict:
            raise _Fail(
                f"truncation at e={e} >= reg={value} is unstable: {verdict.witness}",
                _files(("ideal", I)),
            )


def _p_stable_truncation_bounds_reg(rng, cfg):
    def qualifying():
        for _ in range(300):
            I = _oracle_ready(cfg, lambda: _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL, n_cap=4))
            stable_at = [
                e
                for e in range(I.deg, regularity_upper_bound(I) + 1)
                if is_stable(I.truncate(e))
            ]
            if stable_at:
                return I, stable_at
        raise _Skip

    I, stable_at = qualifying()
    value = reg_oracle(I, cfg.oracle_max_gens)
    for e in stable_at:
        if value > e:
            raise _Fail(f"truncation stable at e={e} but oracle reg={value}", _files(("ideal", I)))


def _p_extension_preserves_truncation_stability(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL, n_cap=4)
    bigger = I.extend(1)
    for e in range(I.deg, regularity_upper_bound(I) + 1):
        small_stable = bool(is_stable(I.truncate(e)))
        big_stable = bool(is_stable(bigger.truncate(e)))
        if small_stable != big_stable:
            raise _Fail(
                f"truncation stability at e={e} changed under ring extension "
                f"({small_stable} -> {big_stable})",
                _files(("ideal", I)),
            )


def _p_artinian_reg_matches_oracle(rng, cfg):
    I = _oracle_ready(cfg, lambda: _any_instance(rng, cfg, InstanceKind.ARTINIAN, n_cap=4))
    if not I.is_artinian:
        raise _Skip
    value = reg_artinian(I)
    by_oracle = reg_oracle(I, cfg.oracle_max_gens)
    if value != by_oracle:
        raise _Fail(f"artinian reg {value} != oracle reg {by_oracle}", _files(("ideal", I)))
    if I.truncate(value) != maximal_power(I.ring, value):
        raise _Fail(
            f"truncation at reg={value} is not the full degree-{value} ideal",
            _files(("ideal", I)),
        )


def _p_artinian_chain_agrees(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.ARTINIAN)
    if not I.is_artinian:
        raise _Skip
    chain = build_chain(I)
    if chain.r != 1:
        raise _Fail(f"artinian chain has length {chain.r} != 1", _files(("ideal", I)))
    if reg_via_chain(I) != reg_artinian(I):
        raise _Fail(
            f"chain reg {reg_via_chain(I)} != artinian reg {reg_artinian(I)}",
            _files(("ideal", I)),
        )


def _p_sum_reg_bound(rng, cfg):
    ring = _draw_ring(rng, cfg)
    parts = borel_type_parts(rng, ring, _draw_deg(rng, cfg), rng.randint(2, 3))
    report = check_sum_bound(parts)
    if not report.ok:
        labeled = [(f"part{k+1}", p) for k, p in enumerate(parts)]
        raise _Fail(
            f"sum bound report: {report.to_dict()}",
            _files(*labeled, ("sum", report.sum_ideal)),
        )


def _p_oracle_permutation_invariant(rng, cfg):
    I = _oracle_ready(cfg, lambda: _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL, n_cap=4))
    perm = random_permutation(rng, I.ring.n)
    moved = I.renumbered(perm)
    if reg_oracle(I, cfg.oracle_max_gens) != reg_oracle(moved, cfg.oracle_max_gens):
        raise _Fail(f"oracle regularity changed under permutation {perm}", _files(("ideal", I)))


def _p_decomposition_reintersects(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    comps = irreducible_decomposition(I)  # re-intersection asserted inside
    for comp in comps:
        if any(len(g.support) != 1 for g in comp.ideal.gens):
            raise _Fail("component has a mixed generator", _files(("ideal", I)))


def _p_component_membership(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    comps = irreducible_decomposition(I)
    probes = [random_monomial(rng, I.ring, rng.randint(0, I.deg + 2)) for _ in range(12)]
    probes += [g * random_monomial(rng, I.ring, rng.randint(0, 2)) for g in I.gens[:3]]
    for u in probes:
        if I.contains(u) != all(c.ideal.contains(u) for c in comps):
            raise _Fail(f"membership of {u} disagrees with the components", _files(("ideal", I)))


def _p_ordered_primes_renumber_route(rng, cfg):
    base = _oracle_ready(cfg, lambda: _borel_instance(rng, cfg, n_cap=4))
    scramble = random_permutation(rng, base.ring.n)
    I = base.renumbered(scramble)
    primes = associated_primes(I)
    if not primes.totally_ordered:
        raise _Fail(
            "associated primes of a scrambled Borel-type ideal not detected as a chain",
            _files(("scrambled", I), ("original", base)),
        )
    moved = I.renumbered(primes.renumbering)
    if not is_borel_type(moved):
        raise _Fail("renumbered ideal is not Borel type", _files(("scrambled", I), ("renumbered", moved)))
    value, _ = reg_borel_checked(moved)
    by_oracle = reg_oracle(I, cfg.oracle_max_gens)
    if value != by_oracle:
        raise _Fail(
            f"renumbered regularity {value} != oracle {by_oracle} of the scrambled ideal",
            _files(("scrambled", I), ("renumbered", moved)),
        )


def _p_primes_permutation_equivariant(rng, cfg):
    I = _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL)
    perm = random_permutation(rng, I.ring.n)
    direct = {apply_to_support(perm, s) for s in associated_primes(I).primes}
    moved = set(associated_primes(I.renumbered(perm)).primes)
    if direct != moved:
        raise _Fail(f"associated primes are not equivariant under {perm}", _files(("ideal", I)))


def _p_oracle_self_checks(rng, cfg):
    I = _oracle_ready(cfg, lambda: _any_instance(rng, cfg, InstanceKind.RANDOM_MONOMIAL, n_cap=4))
    table = betti_mod.betti_table(I, cfg.oracle_max_gens, cfg.oracle_max_lattice)
    if table.regularity < I.deg:
        raise _Fail(f"oracle reg {table.regularity} below deg(I) = {I.deg}", _files(("ideal", I)))


def _p_stable_ideal_reg_is_maxdeg(rng, cfg):
    I = _oracle_ready(cfg, lambda: _any_instance(rng, cfg, InstanceKind.BOREL_CLOSURE, n_cap=4))
    if not is_stable(I):
        raise _Fail("closure instance is not stable", _files(("ideal", I)))
    if reg_oracle(I, cfg.oracle_max_gens) != reg_of_stable(I):
        raise _Fail(f"oracle disagrees with deg(I) = {I.deg} on a stable ideal", _files(("ideal", I)))


PROPERTIES: dict[str, callable] = {
    "lcm_is_join": _p_lcm_is_join,
    "colon_times_divisor": _p_colon_times_divisor,
    "maxvar_of_product": _p_maxvar_of_product,
    "minimalize_absorbs_multiples": _p_minimalize_absorbs_multiples,
    "intersect_membership": _p_intersect_membership,
    "saturation_two_routes": _p_saturation_two_routes,
    "artinian_full_saturation": _p_artinian_full_saturation,
    "truncate_compose": _p_truncate_compose,
    "truncate_hilbert": _p_truncate_hilbert,
    "star_exchange_agree": _p_star_exchange_agree,
    "stable_implication_chain": _p_stable_implication_chain,
    "borel_sum_closed": _p_borel_sum_closed,
    "witness_replay": _p_witness_replay,
    "closure_idempotent": _p_closure_idempotent,
    "chain_shape": _p_chain_shape,
    "chain_stage_strict": _p_chain_stage_strict,
    "reg_within_degree_bound": _p_reg_within_degree_bound,
    "chain_reg_monotone": _p_chain_reg_monotone,
    "chain_hilbert_identity": _p_chain_hilbert_identity,
    "reg_three_methods_agree": _p_reg_three_methods_agree,
    "truncations_stable_above_reg": _p_truncations_stable_above_reg,
    "stable_truncation_bounds_reg": _p_stable_truncation_bounds_reg,
    "extension_preserves_truncation_stability": _p_extension_preserves_truncation_stability,
    "artinian_reg_matches_oracle": _p_artinian_reg_matches_oracle,
    "artinian_chain_agrees": _p_artinian_chain_agrees,
    "sum_reg_bound": _p_sum_reg_bound,
    "oracle_permutation_invariant": _p_oracle_permutation_invariant,
    "decomposition_reintersects": _p_decomposition_reintersects,
    "component_membership": _p_component_membership,
    "ordered_primes_renumber_route": _p_ordered_primes_renumber_route,
    "primes_permutation_equivariant": _p_primes_permutation_equivariant,
    "oracle_self_checks": _p_oracle_self_checks,
    "stable_ideal_reg_is_maxdeg": _p_stable_ideal_reg_is_maxdeg,
}


def property_names() -> tuple[str, ...]:
    return tuple(PROPERTIES)


def _replay_command(cfg: VerifyConfig, name: str, index: int) -> str:
    parts = [
        "borelreg verify",
        f"--seed {cfg.seed}",
        f"--properties {name}",
        f"--index {index}",
        f"--n {cfg.n_range[0]}:{cfg.n_range[1]}",
        f"--deg {cfg.deg_range[0]}:{cfg.deg_range[1]}",
    ]
    if cfg.kind:
        parts.append(f"--kind {cfg.kind}")
    return " ".join(parts)


def run_verify(cfg: VerifyConfig, index: int | None = None) -> VerifyReport:
    """Run the selected properties over cfg.count fresh instances each."""
    if cfg.properties is not None:
        unknown = set(cfg.properties) - set(PROPERTIES)
        if unknown:
            raise BorelRegError(f"unknown properties: {sorted(unknown)}")
        selected = [n for n in PROPERTIES if n in set(cfg.properties)]
    else:
        selected = list(PROPERTIES)
    indices = [index] if index is not None else list(range(cfg.count))

    outcomes = []
    for name in selected:
        runner = PROPERTIES[name]
        outcome = PropertyOutcome(name)
        for k in indices:
            rng = stream(cfg.seed, name, k)
            try:
                runner(rng, cfg)
            except _Skip:
                outcome.skipped += 1
            except OracleInfeasibleError:
                outcome.skipped += 1
            except _Fail as failure:
                outcome.failed += 1
                outcome.failures.append(
                    FailureRecord(
                        prop=name,
                        index=k,
                        witness=failure.witness,
                        ideals=tuple((label, format_ideal_text(i)) for label, i in failure.ideals),
                        replay=_replay_command(cfg, name, k),
                    )
                )
            except (BorelRegError, AssertionError) as exc:
                outcome.failed += 1
                outcome.failures.append(
                    FailureRecord(
                        prop=name,
                        index=k,
                        witness=f"unexpected {type(exc).__name__}: {exc}",
                        ideals=(),
                        replay=_replay_command(cfg, name, k),
                    )
                )
            else:
                outcome.passed += 1
        outcomes.append(outcome)
    return VerifyReport(cfg, outcomes)
