"""Challenge scoring: MAE (primary), RMSE, and Pearson R.

Pearson R of a zero-variance sequence is undefined; the leaderboard
convention is to report exactly 0 there (the constant baseline's R), and
this module follows it instead of raising. All accumulation uses fsum in a
fixed order, so reports are bit-identical across reruns.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import (
    DuplicatePredictionError,
    EmptyInputError,
    LengthMismatchError,
    MissingGroundTruthError,
    NonFiniteInputError,
    TooFewPointsError,
)
from .types import MetricsReport, Prediction, VideoMeta

# relative variance floor below which a sequence counts as constant
VAR_EPS = 1e-12


def _check_pair(y_true: Sequence[float], y_pred: Sequence[float], n_min: int) -> None:
    if len(y_true) != len(y_pred):
        raise LengthMismatchError(f"got {len(y_true)} truths vs {len(y_pred)} predictions")
    if len(y_true) < n_min:
        if n_min <= 1:
            raise EmptyInputError("no samples to score")
        raise TooFewPointsError(f"need at least {n_min} points, got {len(y_true)}")
    for seq, name in ((y_true, "y_true"), (y_pred, "y_pred")):
        for i, v in enumerate(seq):
            if not math.isfinite(v):
                raise NonFiniteInputError(f"{name}[{i}] = {v!r}")


def mae(y_true: Sequence[float], y_pred: Sequence[float]) -> float:
    """Mean absolute error in bpm."""
    _check_pair(y_true, y_pred, 1)
    return math.fsum(abs(t - p) for t, p in zip(y_true, y_pred)) / len(y_true)


def rmse(y_true: Sequence[float], y_pred: Sequence[float]) -> float:
    """Root mean square error in bpm."""
    _check_pair(y_true, y_pred, 1)
    return math.sqrt(math.fsum((t - p) ** 2 for t, p in zip(y_true, y_pred)) / len(y_true))


def pearson_r(y_true: Sequence[float], y_pred: Sequence[float]) -> float:
    """Pearson correlation, with zero-variance inputs scored as exactly 0.

    The variance test is relative (VAR_EPS scaled by the squared mean) so
    the convention is unit-robust. Results are clamped into [-1, 1] against
    last-ulp rounding.
    """
    _check_pair(y_true, y_pred, 2)
    n = len(y_true)
    t_mean = math.fsum(y_true) / n
    p_mean = math.fsum(y_pred) / n
    tc = [t - t_mean for t in y_true]
    pc = [p - p_mean for p in y_pred]
    s_tt = math.fsum(c * c for c in tc)
    s_pp = math.fsum(c * c for c in pc)
    if s_tt / n < VAR_EPS * max(1.0, t_mean * t_mean):
        return 0.0
    if s_pp / n < VAR_EPS * max(1.0, p_mean * p_mean):
        return 0.0
    r = math.fsum(a * b for a, b in zip(tc, pc)) / math.sqrt(s_tt * s_pp)
    return min(1.0, max(-1.0, r))


def evaluate(preds: Iterable[Prediction], metas: Iterable[VideoMeta]) -> MetricsReport:
    """Join predictions to ground truth by video_id and score them.

    The join runs in ascending video_id order so floating-point accumulation
    is reproducible regardless of input order.
    """
    truth = {}
    for meta in metas:
        if meta.hr_true is not None:
            truth[meta.video_id] = meta.hr_true
    seen = set()
    pairs = []
    for pred in preds:
        if pred.video_id in seen:
            raise DuplicatePredictionError(pred.video_id)
        seen.add(pred.video_id)
        if pred.video_id not in truth:
            raise MissingGroundTruthError(pred.video_id)
        pairs.append((pred.video_id, truth[pred.video_id], pred.hr_pred))
    if not pairs:
        raise EmptyInputError("no predictions to score")
    pairs.sort(key=lambda item: item[0])
    y_true = [t for _, t, _ in pairs]
    y_pred = [p for _, _, p in pairs]
    r = pearson_r(y_true, y_pred) if len(pairs) >= 2 else 0.0
    return MetricsReport(
        mae=mae(y_true, y_pred),
        rmse=rmse(y_true, y_pred),
        pearson_r=r,
        n=len(pairs),
    )
