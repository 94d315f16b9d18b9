"""Adaptive baseline heart-rate estimators from face tracks and age series.

Four indirect estimators share one fit/predict interface: a training-mean
constant (BC), linear regressions on motion amplitude (BMotion) and age
(BAge), and a two-stage age regression with a motion-fit relative-residual
correction (BAM). None of them touch a pulse signal; they quantify how far
appearance priors alone get on the remote HR estimation task.
"""

from .errors import HrBaselinesError
from .estimators import fit_bage, fit_bam, fit_bc, fit_bmotion, predict
from .features import FeatureConfig, aggregate_age, build_feature_rows, compute_ama
from .metrics import evaluate, mae, pearson_r, rmse
from .regression import fit_ols, fit_relative_residual, predict_linear
from .synth import GenParams, generate_dataset
from .types import (
    AgeSeries,
    EstimatorModel,
    FaceBox,
    FeatureRow,
    LinearModel,
    MetricsReport,
    Prediction,
    VideoMeta,
    VideoTrack,
    validate_track,
)

__version__ = "0.1.0"

__all__ = [
    "AgeSeries",
    "EstimatorModel",
    "FaceBox",
    "FeatureConfig",
    "FeatureRow",
    "GenParams",
    "HrBaselinesError",
    "LinearModel",
    "MetricsReport",
    "Prediction",
    "VideoMeta",
    "VideoTrack",
    "aggregate_age",
    "build_feature_rows",
    "compute_ama",
    "evaluate",
    "fit_bage",
    "fit_bam",
    "fit_bc",
    "fit_bmotion",
    "fit_ols",
    "fit_relative_residual",
    "generate_dataset",
    "mae",
    "pearson_r",
    "predict",
    "predict_linear",
    "rmse",
    "validate_track",
]
