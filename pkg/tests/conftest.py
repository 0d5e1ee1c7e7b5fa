from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
from hypothesis import HealthCheck, settings

from marketval.features import (
    KIND_BIAS,
    KIND_CONTINUOUS,
    ColumnMeta,
    EncodedDataset,
)
from marketval.numcore import Matrix

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def dataset_from_arrays(design, response, names=None, bias=True) -> EncodedDataset:
    """Wrap a raw design matrix as a dataset for fitting.

    When ``bias`` is true the first column must be all ones and is tagged as
    the bias column; every other column is tagged continuous.
    """
    design = np.asarray(design, dtype=float)
    n_cols = design.shape[1]
    if names is None:
        names = ["const" if bias else "x0"] + [f"x{j}" for j in range(1, n_cols)]
    columns = []
    for j, name in enumerate(names):
        kind = KIND_BIAS if bias and j == 0 else KIND_CONTINUOUS
        columns.append(ColumnMeta(name=name, kind=kind, source_attribute=name))
    return EncodedDataset(
        design=Matrix(design),
        columns=tuple(columns),
        response=np.asarray(response, dtype=float),
        standardization_params=(),
        dropped_levels={},
    )
