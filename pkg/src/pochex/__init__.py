"""Exact derivatives and eps-expansions of rising-factorial expressions.

Everything is computed over exact rationals: derivative coefficients of
rising factorials and their reciprocals to any order, partial-fraction
decompositions of rising-factorial quotients, and coefficient tables for the
eps-expansion of double hypergeometric-style series — with every closed form
cross-checked against an independent truncated-series engine.
"""

from .combinatorics import (
    binomial,
    double_factorial,
    gen_bernoulli_poly,
    harmonic,
    mod_harmonic,
    nested_ones_S,
    nested_ones_Z,
    stirling_s1,
)
from .duals import Dual
from .errors import (
    DegreeError,
    DomainError,
    MissingParameter,
    NonzeroConstantTerm,
    ParseError,
    PochexError,
    PoleError,
    RepeatedRoot,
    ZeroSeries,
    ZeroSlope,
)
from .hyper_expand import (
    CLOSED_EXAMPLES,
    ExpansionTable,
    HyperTermSpec,
    IndexLaw,
    closed_engine_spec,
    closed_f4_reformulated,
    delta_dual_expand,
    emit_table,
    expand_closed,
    expand_general,
    regroup_total_degree,
)
from .partial_fractions import (
    PartialFractionForm,
    PFTerm,
    PochProductQuotient,
    decompose_multi,
    decompose_single,
    pf_derivative,
    reduce_excess,
)
from .pochhammer import (
    LinearParam,
    PochMethod,
    RecipMethod,
    poch_deriv,
    poch_eps_series,
    pochhammer,
    quotient_deriv,
    recip_poch_deriv,
    recip_poch_laurent,
)
from .series import (
    EpsSeries,
    Rational,
    format_rational,
    parse_rational,
    polynomial_series,
    series_add,
    series_compose,
    series_div,
    series_elementary,
    series_invert,
    series_mul,
    series_pow,
)
from .specfile import SpecOptions, parse_quotient_text, parse_spec_text
from .verify import (
    DEFAULT_GENFUN_ORDER,
    IN_SCOPE_TAGS,
    RELATION_COVERAGE,
    CheckSummary,
    GenFunId,
    GenFunResult,
    IdentityId,
    IdentityResult,
    default_grid,
    genfun_check,
    identity_eval,
    run_genfun,
    run_identity,
    verify_all,
    verify_ids,
)

__version__ = "0.1.0"

__all__ = [
    "binomial",
    "double_factorial",
    "gen_bernoulli_poly",
    "harmonic",
    "mod_harmonic",
    "nested_ones_S",
    "nested_ones_Z",
    "stirling_s1",
    "Dual",
    "DegreeError",
    "DomainError",
    "MissingParameter",
    "NonzeroConstantTerm",
    "ParseError",
    "PochexError",
    "PoleError",
    "RepeatedRoot",
    "ZeroSeries",
    "ZeroSlope",
    "CLOSED_EXAMPLES",
    "ExpansionTable",
    "HyperTermSpec",
    "IndexLaw",
    "closed_engine_spec",
    "closed_f4_reformulated",
    "delta_dual_expand",
    "emit_table",
    "expand_closed",
    "expand_general",
    "regroup_total_degree",
    "PartialFractionForm",
    "PFTerm",
    "PochProductQuotient",
    "decompose_multi",
    "decompose_single",
    "pf_derivative",
    "reduce_excess",
    "LinearParam",
    "PochMethod",
    "RecipMethod",
    "poch_deriv",
    "poch_eps_series",
    "pochhammer",
    "quotient_deriv",
    "recip_poch_deriv",
    "recip_poch_laurent",
    "EpsSeries",
    "Rational",
    "format_rational",
    "parse_rational",
    "polynomial_series",
    "series_add",
    "series_compose",
    "series_div",
    "series_elementary",
    "series_invert",
    "series_mul",
    "series_pow",
    "SpecOptions",
    "parse_quotient_text",
    "parse_spec_text",
    "DEFAULT_GENFUN_ORDER",
    "IN_SCOPE_TAGS",
    "RELATION_COVERAGE",
    "CheckSummary",
    "GenFunId",
    "GenFunResult",
    "IdentityId",
    "IdentityResult",
    "default_grid",
    "genfun_check",
    "identity_eval",
    "run_genfun",
    "run_identity",
    "verify_all",
    "verify_ids",
]
