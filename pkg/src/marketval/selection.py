"""Backward elimination of regressors by p-value, with a full audit trace."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InferenceUnavailableError, InvalidInputError
from .features import EncodedDataset
from .ols import FitResult, fit_ols


@dataclass(frozen=True)
class ModelSummary:
    k_params: int
    r_squared: float
    adj_r_squared: float


@dataclass(frozen=True)
class EliminationStep:
    removed_column: str
    removed_p_value: float
    model_after: ModelSummary


@dataclass(frozen=True)
class EliminationTrace:
    """One backward-elimination run: every removal plus the final fit.

    `conforming` is False when the loop hit the single-column floor with
    that column's p-value still above alpha (no conforming model exists on
    this path).
    """

    alpha: float
    steps: tuple[EliminationStep, ...]
    final_fit: FitResult
    conforming: bool


def _worst_retained(fit: FitResult) -> tuple[int, str, float] | None:
    """Index, name and p of the largest retained p-value; ties -> lowest index."""
    dropped = set(fit.dropped_columns)
    best: tuple[int, str, float] | None = None
    for j, name in enumerate(fit.column_names):
        if name in dropped:
            continue
        p = float(fit.p_values[j])
        if math.isnan(p):
            continue
        if best is None or p > best[2]:
            best = (j, name, p)
    return best


def backward_eliminate(
    data: EncodedDataset, alpha: float, confidence_level: float = 0.95
) -> EliminationTrace:
    """Repeatedly drop the worst-p column until every p-value is <= alpha.

    Each round fits OLS, finds the largest p-value among retained columns
    (ties broken by lowest column index) and, if it exceeds `alpha`,
    removes that column and refits.  The bias column competes like any
    other.  The last remaining column is never removed; if its p-value
    still exceeds alpha the trace is flagged non-conforming.

    Deterministic: identical inputs give identical traces.
    """
    if not 0.0 < alpha < 1.0:
        raise InvalidInputError("alpha must be in (0, 1)")
    current = data
    fit = fit_ols(current, confidence_level)
    if not fit.inference_available:
        raise InferenceUnavailableError(
            "initial fit has no residual degrees of freedom; cannot rank p-values"
        )
    steps: list[EliminationStep] = []
    conforming = True
    while True:
        worst = _worst_retained(fit)
        if worst is None or worst[2] <= alpha:
            break
        if current.design.cols == 1:
            conforming = False
            break
        j, name, p = worst
        keep = [i for i in range(current.design.cols) if i != j]
        current = current.select_columns(keep)
        fit = fit_ols(current, confidence_level)
        steps.append(
            EliminationStep(
                removed_column=name,
                removed_p_value=p,
                model_after=ModelSummary(
                    k_params=fit.k_params,
                    r_squared=fit.r_squared,
                    adj_r_squared=fit.adj_r_squared,
                ),
            )
        )
    return EliminationTrace(alpha=alpha, steps=tuple(steps), final_fit=fit, conforming=conforming)
