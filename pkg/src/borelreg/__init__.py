"""Exact computations with Borel-type (weakly stable) monomial ideals.

The library builds saturation chains, decides stability / strong stability
/ Borel type with replayable witnesses, and computes Castelnuovo-Mumford
regularity by three mutually cross-checking methods: the chain formula,
the minimal stable truncation, and a brute-force homological Betti oracle
over rational coefficients.
"""

from .betti import (
    BettiTable,
    KoszulComplex,
    betti_table,
    fraction_free_rank,
    lcm_lattice,
    oracle_feasible,
    reg_of_stable,
    reg_oracle,
    upper_koszul_complex,
)
from .borel import (
    Evidence,
    ExchangeWitness,
    SaturationWitness,
    StabilityWitness,
    borel_closure,
    is_borel_type,
    is_borel_type_exchange,
    is_stable,
    is_strongly_stable,
    replay_witness,
)
from .chain import (
    ChainStage,
    SaturationChain,
    StageIdentityReport,
    build_chain,
    check_chain_hilbert_identity,
    reg_via_chain,
    regularity_upper_bound,
    stage_s_value,
)
from .errors import (
    BorelRegError,
    ContextMismatchError,
    InternalCheckError,
    MethodDisagreementError,
    NotBorelTypeError,
    OracleInfeasibleError,
    ParseError,
    UsageError,
)
from .files import format_ideal_text, ideal_from_json, ideal_to_json, parse_ideal_text, parse_monomial
from .generators import InstanceKind, generate
from .ideal import (
    MonomialIdeal,
    hilbert_quotient,
    maximal_power,
    minimalize,
    monomials_of_degree,
)
from .primes import (
    AssociatedPrimes,
    IrreducibleComponent,
    associated_primes,
    irreducible_decomposition,
    renumber,
)
from .regularity import (
    RegularityReport,
    SumBoundReport,
    check_sum_bound,
    reg_artinian,
    reg_auto,
    reg_via_truncation,
)
from .ring import Monomial, RingContext, max_var
from .rng import SplitMix64, stream
from .verify import VerifyConfig, VerifyReport, property_names, run_verify

__version__ = "0.1.0"

__all__ = [
    "AssociatedPrimes",
    "BettiTable",
    "BorelRegError",
    "ChainStage",
    "ContextMismatchError",
    "Evidence",
    "ExchangeWitness",
    "InstanceKind",
    "InternalCheckError",
    "IrreducibleComponent",
    "KoszulComplex",
    "MethodDisagreementError",
    "Monomial",
    "MonomialIdeal",
    "NotBorelTypeError",
    "OracleInfeasibleError",
    "ParseError",
    "RegularityReport",
    "RingContext",
    "SaturationChain",
    "SaturationWitness",
    "SplitMix64",
    "StabilityWitness",
    "StageIdentityReport",
    "SumBoundReport",
    "UsageError",
    "VerifyConfig",
    "VerifyReport",
    "associated_primes",
    "betti_table",
    "borel_closure",
    "build_chain",
    "check_chain_hilbert_identity",
    "check_sum_bound",
    "format_ideal_text",
    "fraction_free_rank",
    "generate",
    "hilbert_quotient",
    "ideal_from_json",
    "ideal_to_json",
    "irreducible_decomposition",
    "is_borel_type",
    "is_borel_type_exchange",
    "is_stable",
    "is_strongly_stable",
    "lcm_lattice",
    "maximal_power",
    "max_var",
    "minimalize",
    "monomials_of_degree",
    "oracle_feasible",
    "parse_ideal_text",
    "parse_monomial",
    "property_names",
    "reg_artinian",
    "reg_auto",
    "reg_of_stable",
    "reg_oracle",
    "reg_via_chain",
    "reg_via_truncation",
    "regularity_upper_bound",
    "renumber",
    "replay_witness",
    "run_verify",
    "stage_s_value",
    "stream",
    "upper_koszul_complex",
]
