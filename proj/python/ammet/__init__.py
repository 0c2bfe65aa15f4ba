"""Mixed-economy amplifier toolkit (Python bindings of the C++ core)."""

from ._ammet import (
    AmplificationPoint,
    AmplificationRow,
    BiasCircuit,
    ClassifiedRecord,
    CountryRecord,
    DomainError,
    EconomicAccount,
    NumericError,
    OperatingPoint,
    ParseError,
    Region,
    TransistorParams,
    UsageError,
    alpha_from_beta,
    base_current,
    beta_from_alpha,
    build_amplification_table,
    classify_alpha,
    classify_records,
    current_gain,
    curve_points,
    effective_gain_with_leakage,
    emit_table,
    equilibrium_income,
    gain_from_base_width,
    government_spending,
    investment_amplification,
    parse_worldbank_csv,
    render_scatter_svg,
    solve_bias_point,
    to_alpha,
    whatif_account,
)

OPTIMAL_ALPHA = 0.1
OPTIMAL_BETA = 10.0

__all__ = [name for name in dir() if not name.startswith("_")]
