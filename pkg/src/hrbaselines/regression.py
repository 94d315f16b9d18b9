"""Closed-form single-predictor least squares and the relative-residual fit.

Moments are population (1/n) moments; the slope is a ratio so the 1/n vs
1/(n-1) choice cancels, and the intercept never depends on it. Sums use
math.fsum, which is exact, so fits are permutation-invariant bit for bit.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import (
    BaseNearZeroError,
    LengthMismatchError,
    NonFiniteInputError,
    TooFewPointsError,
)
from .types import LinearModel

# relative zero-variance threshold, scaled so the test is unit-robust
VAR_EPS = 1e-12

# first-stage predictions this close to zero make relative residuals blow up
BASE_EPS = 1e-6


def _require_paired_finite(xs: Sequence[float], ys: Sequence[float], n_min: int) -> None:
    if len(xs) != len(ys):
        raise LengthMismatchError(f"got {len(xs)} x values vs {len(ys)} y values")
    if len(xs) < n_min:
        raise TooFewPointsError(f"need at least {n_min} points, got {len(xs)}")
    for seq, name in ((xs, "x"), (ys, "y")):
        for i, v in enumerate(seq):
            if not math.isfinite(v):
                raise NonFiniteInputError(f"{name}[{i}] = {v!r}")


def fit_ols(xs: Sequence[float], ys: Sequence[float]) -> LinearModel:
    """Fit y = slope*x + intercept by ordinary least squares.

    A predictor whose variance falls below VAR_EPS * max(1, mean(x)^2) is
    treated as constant: the fit degrades to the mean of y with slope 0 and
    the degenerate flag set, keeping pipelines total on all-equal features.
    """
    _require_paired_finite(xs, ys, 2)
    n = len(xs)
    x_mean = math.fsum(xs) / n
    y_mean = math.fsum(ys) / n
    var_x = math.fsum((x - x_mean) ** 2 for x in xs) / n
    if var_x < VAR_EPS * max(1.0, x_mean * x_mean):
        return LinearModel(slope=0.0, intercept=y_mean, degenerate=True)
    cov_xy = math.fsum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys)) / n
    slope = cov_xy / var_x
    return LinearModel(slope=slope, intercept=y_mean - slope * x_mean)


def predict_linear(model: LinearModel, x: float) -> float:
    """Evaluate the fitted line at x."""
    if not math.isfinite(x):
        raise NonFiniteInputError(f"x = {x!r}")
    return model.slope * x + model.intercept


def fit_relative_residual(
    ys_true: Sequence[float],
    ys_base: Sequence[float],
    xs: Sequence[float],
) -> LinearModel:
    """Fit the second-stage line of relative residuals against xs.

    The targets are r_i = (ys_true_i - ys_base_i) / ys_base_i, the relative
    error of the first-stage predictions; callers back-scale a predicted r
    into bpm as base + base*r.
    """
    if len(ys_true) != len(ys_base):
        raise LengthMismatchError(f"got {len(ys_true)} targets vs {len(ys_base)} base predictions")
    for i, base in enumerate(ys_base):
        if abs(base) <= BASE_EPS:
            raise BaseNearZeroError(i, base)
    residuals = [(yt - yb) / yb for yt, yb in zip(ys_true, ys_base)]
    return fit_ols(xs, residuals)
