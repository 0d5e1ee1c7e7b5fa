"""Market-value regression pipeline for football player data.

Ingests player CSVs, encodes them into a design matrix, fits OLS with a
complete inferential summary, runs heteroscedasticity/collinearity/error
diagnostics, performs backward elimination, and generates synthetic
datasets with published ground truth.
"""
from .diagnostics import (
    BreuschPaganResult,
    PlotSeries,
    VifEntry,
    VifReport,
    breusch_pagan,
    mape,
    plot_series,
    vif,
)
from .features import (
    ColumnMeta,
    EncodedDataset,
    PlayerRecord,
    StandardizationParams,
    age_group,
    card_score,
    encode_dataset,
    goal_contribution,
    height_group,
    match_group,
)
from .ingest import (
    CSV_HEADER,
    ExclusionEntry,
    ExclusionLog,
    FilterConfig,
    FilterResult,
    apply_filters,
    parse_players_csv,
)
from .numcore import (
    LeastSquaresSolution,
    Matrix,
    QrFactors,
    least_squares_solve,
    qr_pivoted,
    unscaled_covariance,
)
from .ols import (
    CoefficientRow,
    FitResult,
    InformationCriteria,
    adjusted_r_squared,
    coefficient_table,
    f_statistic,
    fit_ols,
    information_criteria,
    log_likelihood,
)
from .selection import EliminationStep, EliminationTrace, ModelSummary, backward_eliminate
from .synth import SynthTruth, generate_players, records_to_csv, truth_to_dict

__version__ = "0.1.0"

__all__ = [
    "BreuschPaganResult",
    "ColumnMeta",
    "CoefficientRow",
    "CSV_HEADER",
    "EliminationStep",
    "EliminationTrace",
    "EncodedDataset",
    "ExclusionEntry",
    "ExclusionLog",
    "FilterConfig",
    "FilterResult",
    "FitResult",
    "InformationCriteria",
    "LeastSquaresSolution",
    "Matrix",
    "ModelSummary",
    "PlayerRecord",
    "PlotSeries",
    "QrFactors",
    "StandardizationParams",
    "SynthTruth",
    "VifEntry",
    "VifReport",
    "adjusted_r_squared",
    "age_group",
    "apply_filters",
    "backward_eliminate",
    "breusch_pagan",
    "card_score",
    "coefficient_table",
    "encode_dataset",
    "f_statistic",
    "fit_ols",
    "generate_players",
    "goal_contribution",
    "height_group",
    "information_criteria",
    "least_squares_solve",
    "log_likelihood",
    "mape",
    "match_group",
    "parse_players_csv",
    "plot_series",
    "qr_pivoted",
    "records_to_csv",
    "truth_to_dict",
    "unscaled_covariance",
    "vif",
]
