"""Dataset carrier and row-aligned dataset operations.

A DataMatrix is n samples (rows) by d features (columns) of finite float64
values, optionally with an integer class label per row.  All operations are
pure: they return new matrices and never mutate their inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, PairingError
from .rng import check_seed, generator

__all__ = [
    "DataMatrix",
    "MlpSpec",
    "standardize",
    "concat_features",
    "shuffle_rows",
    "shuffle_permutation",
    "mlp_transform",
]


@dataclass(frozen=True)
class DataMatrix:
    """n_rows x n_cols matrix of finite 64-bit floats, row-major.

    `labels`, when present, carries one integer class label per row and
    travels with the rows through shuffles and slices.
    """

    values: np.ndarray
    labels: np.ndarray | None = field(default=None)

    def __post_init__(self):
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise InputError(f"expected a 2-D matrix, got ndim={values.ndim}")
        if values.shape[0] < 1:
            raise InputError("matrix needs at least one row")
        if values.shape[1] < 1:
            raise InputError("matrix needs at least one column")
        bad = ~np.isfinite(values)
        if bad.any():
            r, c = np.argwhere(bad)[0]
            raise InputError(
                f"non-finite value {values[r, c]!r} at (row {r}, col {c})"
            )
        object.__setattr__(self, "values", values)
        if self.labels is not None:
            labels = np.asarray(self.labels, dtype=np.int64)
            if labels.ndim != 1 or labels.shape[0] != values.shape[0]:
                raise InputError(
                    f"labels length {labels.shape} does not match "
                    f"{values.shape[0]} rows"
                )
            object.__setattr__(self, "labels", labels)

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_cols(self) -> int:
        return self.values.shape[1]

    def select_columns(self, cols) -> "DataMatrix":
        return DataMatrix(self.values[:, list(cols)], self.labels)


@dataclass(frozen=True)
class MlpSpec:
    """Random fully-connected network: `layers` rounds of a square weight
    matrix followed by LeakyReLU with the given negative-side slope."""

    layers: int = 15
    width: int = 784
    slope: float = 0.01
    weight_seed: int = 0

    def __post_init__(self):
        if self.layers < 1:
            raise InputError(f"layers must be >= 1, got {self.layers}")
        if self.width < 1:
            raise InputError(f"width must be >= 1, got {self.width}")
        if not 0.0 <= self.slope <= 1.0:
            raise InputError(f"slope must lie in [0, 1], got {self.slope}")
        check_seed(self.weight_seed)


def standardize(x: DataMatrix) -> DataMatrix:
    """Center each column to mean 0 and scale to population std 1.

    Columns with zero standard deviation become identically 0.
    """
    v = x.values
    centered = v - v.mean(axis=0)
    std = np.sqrt(np.mean(centered * centered, axis=0))
    out = np.where(std > 0, centered / np.where(std > 0, std, 1.0), 0.0)
    return DataMatrix(out, x.labels)


def concat_features(x: DataMatrix, y: DataMatrix) -> DataMatrix:
    """Sample-aligned feature concatenation: row i of the result is row i
    of `x` followed by row i of `y`."""
    if x.n_rows != y.n_rows:
        raise PairingError(
            f"row counts differ: {x.n_rows} vs {y.n_rows}"
        )
    return DataMatrix(np.hstack([x.values, y.values]), x.labels)


def shuffle_permutation(
    n: int, mode: str, seed: int, labels: np.ndarray | None = None
) -> np.ndarray:
    """Row permutation used by shuffle_rows; exposed so callers can record
    or invert it.

    mode "full": a uniform random permutation of all rows.
    mode "class_preserving": a uniform permutation drawn independently
    within each label group (groups visited in ascending label order), so
    every row is replaced by a row of the same class.
    """
    if mode not in ("full", "class_preserving"):
        raise InputError(f"unknown shuffle mode {mode!r}")
    rng = generator(check_seed(seed))
    if mode == "full":
        return rng.permutation(n)
    if labels is None:
        raise InputError("class_preserving shuffle requires row labels")
    perm = np.arange(n)
    for lab in np.unique(labels):
        idx = np.flatnonzero(labels == lab)
        perm[idx] = idx[rng.permutation(idx.size)]
    return perm


def shuffle_rows(y: DataMatrix, mode: str, seed: int) -> DataMatrix:
    """Permute rows to break (full) or coarsen (class_preserving) the
    pairing with another dataset.  Deterministic given the seed; labels
    travel with their rows."""
    perm = shuffle_permutation(y.n_rows, mode, seed, y.labels)
    labels = None if y.labels is None else y.labels[perm]
    return DataMatrix(y.values[perm], labels)


def mlp_transform(x: DataMatrix, spec: MlpSpec) -> DataMatrix:
    """Push the data through a randomly initialized MLP.

    Each layer multiplies by a fresh square Gaussian matrix with entries of
    standard deviation 1/sqrt(width) (keeps activation magnitude stable
    across depth) and applies LeakyReLU.  slope=1 makes the whole map
    linear; slope=0 is plain ReLU.
    """
    if x.n_cols != spec.width:
        raise InputError(
            f"input has {x.n_cols} columns but the network width is {spec.width}"
        )
    rng = generator(spec.weight_seed)
    scale = 1.0 / np.sqrt(spec.width)
    h = x.values
    for _ in range(spec.layers):
        w = rng.standard_normal((spec.width, spec.width)) * scale
        h = h @ w
        h = np.where(h >= 0, h, spec.slope * h)
    return DataMatrix(h, x.labels)
