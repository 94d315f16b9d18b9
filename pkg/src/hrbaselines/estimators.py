"""The four baseline estimators: BC, BMotion, BAge, BAM.

Each fit consumes FeatureRows (one row per video; every 10-second clip is
one regression sample) and returns an immutable EstimatorModel. predict()
maps any model variant over rows and never mutates state, so one fitted
model can serve concurrent callers.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import EmptyTrainingSetError, MissingFeatureError, MissingTargetError
from .regression import fit_ols, fit_relative_residual, predict_linear
from .types import CLAMP_RANGE, EstimatorModel, FeatureRow, Prediction


def _targets(rows: Sequence[FeatureRow]) -> list[float]:
    if not rows:
        raise EmptyTrainingSetError("training set is empty")
    out = []
    for row in rows:
        if row.hr_true is None:
            raise MissingTargetError(row.video_id)
        out.append(row.hr_true)
    return out


def _feature(rows: Sequence[FeatureRow], name: str) -> list[float]:
    out = []
    for row in rows:
        value = getattr(row, name)
        if value is None:
            raise MissingFeatureError(row.video_id, name)
        out.append(value)
    return out


def fit_bc(train: Sequence[FeatureRow], delta: int = 10) -> EstimatorModel:
    """Constant baseline: the training-mean HR rounded down to whole bpm."""
    hrs = _targets(train)
    c = math.floor(math.fsum(hrs) / len(hrs))
    return EstimatorModel(variant="bc", c=c, delta=delta)


def fit_bmotion(train: Sequence[FeatureRow], delta: int = 10) -> EstimatorModel:
    """HR regressed on the average motion amplitude."""
    hrs = _targets(train)
    amas = _feature(train, "ama")
    return EstimatorModel(variant="bmotion", lm=fit_ols(amas, hrs), delta=delta)


def fit_bage(train: Sequence[FeatureRow], delta: int = 10) -> EstimatorModel:
    """HR regressed on the aggregated age."""
    hrs = _targets(train)
    ages = _feature(train, "age")
    return EstimatorModel(variant="bage", lm=fit_ols(ages, hrs), delta=delta)


def fit_bam(train: Sequence[FeatureRow], delta: int = 10) -> EstimatorModel:
    """Two-stage fit: age regression, then relative residuals on motion.

    Stage one is the BAge line. Its relative errors on the training set,
    (hr_i - base_i) / base_i, become the targets of a second line on AMA;
    prediction back-scales with base + base*r.
    """
    hrs = _targets(train)
    ages = _feature(train, "age")
    amas = _feature(train, "ama")
    lm_age = fit_ols(ages, hrs)
    base = [predict_linear(lm_age, a) for a in ages]
    lm_resid = fit_relative_residual(hrs, base, amas)
    return EstimatorModel(variant="bam", lm_age=lm_age, lm_resid=lm_resid, delta=delta)


def _predict_row(model: EstimatorModel, row: FeatureRow) -> float:
    if model.variant == "bc":
        return float(model.c)
    if model.variant == "bmotion":
        if row.ama is None:
            raise MissingFeatureError(row.video_id, "ama")
        return predict_linear(model.lm, row.ama)
    if model.variant == "bage":
        if row.age is None:
            raise MissingFeatureError(row.video_id, "age")
        return predict_linear(model.lm, row.age)
    # bam
    if row.age is None:
        raise MissingFeatureError(row.video_id, "age")
    if row.ama is None:
        raise MissingFeatureError(row.video_id, "ama")
    base = predict_linear(model.lm_age, row.age)
    r = predict_linear(model.lm_resid, row.ama)
    return base + base * r


def predict(
    model: EstimatorModel, rows: Iterable[FeatureRow], clamp: bool = False
) -> list[Prediction]:
    """Predict HR for every row, preserving input order.

    clamp=True bounds outputs to the [40, 240] bpm physiological range;
    the default reports raw regression outputs.
    """
    preds = []
    for row in rows:
        hr = _predict_row(model, row)
        if clamp:
            hr = min(max(hr, CLAMP_RANGE[0]), CLAMP_RANGE[1])
        preds.append(Prediction(row.video_id, hr))
    return preds
