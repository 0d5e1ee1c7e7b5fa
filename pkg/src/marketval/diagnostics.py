"""Model diagnostics: Breusch-Pagan test, VIF report, MAPE, plot series."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numcore
from .distributions import chi2_sf
from .errors import InvalidInputError
from .features import KIND_BIAS, EncodedDataset
from .ols import FitResult

BP_KOENKER = "koenker"
BP_ORIGINAL = "original"

VIF_UNCORRELATED = "uncorrelated"
VIF_MODERATE = "moderate"
VIF_HIGH = "high"

# Aux R^2 this close to 1 is treated as exact collinearity.
_COLLINEAR_R2 = 1.0 - 1e-12
# Slack for the banding thresholds so exact boundary cases land on the
# documented side (vif computed from R^2 = 0.8 must band as moderate).
_BAND_SLACK = 1e-9


@dataclass(frozen=True)
class BreuschPaganResult:
    lm_statistic: float
    df: int
    p_value: float
    variant: str


@dataclass(frozen=True)
class VifEntry:
    column: str
    r_squared_aux: float
    vif: float  # math.inf when `infinite` is set
    band: str
    infinite: bool


@dataclass(frozen=True)
class VifReport:
    entries: tuple[VifEntry, ...]


def _aux_regression(design: np.ndarray, has_bias: bool, target: np.ndarray):
    """R^2 and explained sum of squares of target regressed on `design`.

    Returns (r_squared, ess, non_bias_rank).  The design is expected to
    carry its bias column first when `has_bias` is set; R^2 is centered in
    that case and uncentered otherwise.  A zero-variance target has nothing
    to explain: R^2 = 0, ESS = 0.
    """
    solution = numcore.least_squares_solve(design, target)
    if has_bias:
        tss = float(np.sum((target - target.mean()) ** 2))
    else:
        tss = float(target @ target)
    non_bias_rank = solution.rank - (1 if has_bias else 0)
    if tss <= 0.0:
        return 0.0, 0.0, non_bias_rank
    r2 = min(1.0, max(0.0, 1.0 - solution.rss / tss))
    ess = max(0.0, tss - solution.rss)
    return r2, ess, non_bias_rank


def _model_matrix(fit: FitResult, data: EncodedDataset) -> tuple[np.ndarray, bool]:
    """Retained-column design for the auxiliary regression, bias guaranteed.

    Columns the main fit dropped as collinear are dropped here too.  When
    the model itself carries no bias column, one is prepended so the
    auxiliary regression is always run against an intercept.
    """
    dropped = set(fit.dropped_columns)
    keep = [j for j, name in enumerate(data.column_names) if name not in dropped]
    a = data.design.array()[:, keep]
    if data.has_bias:
        return a, True
    return np.column_stack([np.ones(a.shape[0]), a]), True


def breusch_pagan(fit: FitResult, data: EncodedDataset, variant: str = BP_KOENKER) -> BreuschPaganResult:
    """Breusch-Pagan heteroscedasticity test of a fitted model.

    The auxiliary regression uses the same design matrix as the main fit
    (retained columns only, intercept always included).  The koenker
    variant regresses squared residuals and takes LM = n * R^2_aux; the
    original variant regresses e^2 / (rss/n) and takes LM = ESS / 2.  In
    both cases p = chi2_sf(LM, df) with df = non-bias regressors in the
    auxiliary regression.  The null hypothesis is homoscedasticity.
    """
    if variant not in (BP_KOENKER, BP_ORIGINAL):
        raise InvalidInputError(f"unknown variant {variant!r}")
    if fit.df_resid < 1:
        raise InvalidInputError("Breusch-Pagan requires residual degrees of freedom")
    n = fit.n_obs
    e2 = np.asarray(fit.residuals) ** 2
    aux, has_bias = _model_matrix(fit, data)
    if variant == BP_KOENKER:
        r2, _, df = _aux_regression(aux, has_bias, e2)
        lm = n * r2
    else:
        sigma2_ml = fit.rss / n
        g = e2 / sigma2_ml
        _, ess, df = _aux_regression(aux, has_bias, g)
        lm = ess / 2.0
    if df < 1:
        # No non-bias regressors survived: the test statistic is 0 by construction.
        return BreuschPaganResult(lm_statistic=0.0, df=0, p_value=1.0, variant=variant)
    return BreuschPaganResult(
        lm_statistic=float(lm),
        df=int(df),
        p_value=chi2_sf(float(lm), int(df)),
        variant=variant,
    )


def _band(vif_value: float) -> str:
    if vif_value <= 1.0 + _BAND_SLACK:
        return VIF_UNCORRELATED
    if vif_value <= 5.0 * (1.0 + _BAND_SLACK):
        return VIF_MODERATE
    return VIF_HIGH


def vif(data: EncodedDataset) -> VifReport:
    """Variance inflation factors for every non-bias column.

    Each column is regressed on all the others (bias included when the
    dataset has one); vif = 1/(1 - R^2_aux).  Exact collinearity yields an
    infinite-flagged entry instead of an error.
    """
    a = data.design.array()
    has_bias = data.has_bias
    non_bias = [j for j, c in enumerate(data.columns) if c.kind != KIND_BIAS]
    if len(non_bias) < 2:
        raise InvalidInputError("vif needs at least 2 non-bias columns")
    entries: list[VifEntry] = []
    for j in non_bias:
        target = a[:, j]
        if has_bias:
            target_tss = float(np.sum((target - target.mean()) ** 2))
        else:
            target_tss = float(target @ target)
        if target_tss <= 0.0:
            # Constant column: exactly representable by the intercept.
            entries.append(
                VifEntry(data.columns[j].name, 1.0, math.inf, VIF_HIGH, True)
            )
            continue
        others = np.delete(a, j, axis=1)
        # Centered R^2 when the bias column is among the regressors.
        r2, _, _ = _aux_regression(others, has_bias, target)
        if r2 >= _COLLINEAR_R2:
            entries.append(
                VifEntry(data.columns[j].name, r2, math.inf, VIF_HIGH, True)
            )
        else:
            v = 1.0 / (1.0 - r2)
            entries.append(VifEntry(data.columns[j].name, r2, v, _band(v), False))
    return VifReport(entries=tuple(entries))


def mape(actual, predicted) -> float:
    """Mean absolute percentage error, (100/n) * sum |a_i - p_i| / |a_i|."""
    a = np.asarray(actual, dtype=float).reshape(-1)
    p = np.asarray(predicted, dtype=float).reshape(-1)
    if a.size != p.size or a.size < 1:
        raise InvalidInputError("actual and predicted must have equal length >= 1")
    zeros = np.nonzero(a == 0.0)[0]
    if zeros.size:
        raise ZeroDivisionError(f"actual[{int(zeros[0])}] is zero; MAPE is undefined")
    return float(100.0 / a.size * np.sum(np.abs(a - p) / np.abs(a)))


@dataclass(frozen=True)
class PlotSeries:
    """Plot-ready point pairs extracted from a fit."""

    residual_series: tuple[tuple[float, float], ...]  # (fitted, residual)
    measured_predicted: tuple[tuple[float, float], ...]  # (actual, predicted)


def plot_series(fit: FitResult) -> PlotSeries:
    """Residual-vs-fitted and measured-vs-predicted pairs for plotting."""
    fitted = np.asarray(fit.fitted)
    resid = np.asarray(fit.residuals)
    actual = fitted + resid
    return PlotSeries(
        residual_series=tuple((float(f), float(r)) for f, r in zip(fitted, resid)),
        measured_predicted=tuple((float(a), float(f)) for a, f in zip(actual, fitted)),
    )
