"""Shared domain types: face tracks, age series, features, models, reports.

All types are immutable after construction and validate their invariants in
__post_init__, so an instance that exists is a valid one. Sequences are
stored as tuples; instances are safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BadVideoIdError,
    DuplicateFrameError,
    FrameOutOfRangeError,
    NonPositiveExtentError,
    UnsortedFramesError,
    ValidationError,
)

VARIANTS = ("bc", "bmotion", "bage", "bam")

# Predictions may optionally be clamped to this physiological range.
CLAMP_RANGE = (40.0, 240.0)


def _check_video_id(video_id: str) -> None:
    # ids travel through comma-delimited files; keep them round-trippable
    if not video_id or any(ch in video_id for ch in ",\r\n"):
        raise BadVideoIdError(f"bad video_id {video_id!r}: must be non-empty, no commas/newlines")


def _check_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class FaceBox:
    """One detected face rectangle on one frame.

    (x, y) is the TOP-LEFT corner of the rectangle; the vertical motion
    feature uses this top-edge y normalized by the rectangle height h.
    """

    frame_idx: int
    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        if self.frame_idx < 0:
            raise FrameOutOfRangeError(f"frame_idx must be >= 0, got {self.frame_idx}")
        for name in ("x", "y", "w", "h"):
            _check_finite(name, getattr(self, name))
        if self.w <= 0 or self.h <= 0:
            raise NonPositiveExtentError(
                f"frame {self.frame_idx}: w and h must be > 0, got w={self.w}, h={self.h}"
            )


@dataclass(frozen=True)
class VideoTrack:
    """Time series of face rectangles for one video.

    Attributes:
        video_id: Opaque identifier, unique per video.
        fps: Frames per second (> 0).
        frame_count: Total frames in the video; box indices stay below it.
        boxes: Boxes sorted strictly ascending by frame_idx. Frames with no
            detection are simply absent (sparse tracks are legal).
    """

    video_id: str
    fps: float
    frame_count: int
    boxes: tuple[FaceBox, ...]

    def __post_init__(self):
        object.__setattr__(self, "boxes", tuple(self.boxes))
        _check_video_id(self.video_id)
        _check_finite("fps", self.fps)
        if self.fps <= 0:
            raise ValidationError(f"{self.video_id}: fps must be > 0, got {self.fps}")
        if self.frame_count <= 0:
            raise ValidationError(
                f"{self.video_id}: frame_count must be > 0, got {self.frame_count}"
            )
        prev = -1
        for box in self.boxes:
            if box.frame_idx == prev:
                raise DuplicateFrameError(f"{self.video_id}: duplicate frame_idx {box.frame_idx}")
            if box.frame_idx < prev:
                raise UnsortedFramesError(
                    f"{self.video_id}: frame_idx {box.frame_idx} after {prev}"
                )
            if box.frame_idx >= self.frame_count:
                raise FrameOutOfRangeError(
                    f"{self.video_id}: frame_idx {box.frame_idx} >= frame_count {self.frame_count}"
                )
            prev = box.frame_idx

    def box_by_frame(self) -> dict[int, FaceBox]:
        """Map frame_idx -> box for O(1) pair lookup."""
        return {b.frame_idx: b for b in self.boxes}


def validate_track(track: VideoTrack) -> VideoTrack:
    """Re-run all VideoTrack invariants and return the track unchanged.

    Construction already validates; this is the explicit entry point for
    data that arrived through a loader or an external producer.
    """
    VideoTrack(track.video_id, track.fps, track.frame_count, track.boxes)
    return track


@dataclass(frozen=True)
class VideoMeta:
    """Per-video metadata: frame rate and optional ground-truth HR (bpm)."""

    video_id: str
    fps: float
    hr_true: Optional[float] = None

    def __post_init__(self):
        _check_video_id(self.video_id)
        _check_finite("fps", self.fps)
        if self.fps <= 0:
            raise ValidationError(f"{self.video_id}: fps must be > 0, got {self.fps}")
        if self.hr_true is not None:
            _check_finite("hr_true", self.hr_true)
            if not (0.0 < self.hr_true < 300.0):
                raise ValidationError(
                    f"{self.video_id}: hr_true must lie in (0, 300), got {self.hr_true}"
                )


@dataclass(frozen=True)
class AgeSeries:
    """Per-frame age estimates (years) for one video.

    samples is a tuple of (frame_idx, age) pairs, frame indices strictly
    ascending, ages within [1, 120].
    """

    video_id: str
    samples: tuple[tuple[int, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple((int(f), float(a)) for f, a in self.samples))
        _check_video_id(self.video_id)
        prev = -1
        for frame_idx, age in self.samples:
            if frame_idx == prev:
                raise DuplicateFrameError(f"{self.video_id}: duplicate age frame_idx {frame_idx}")
            if frame_idx < prev:
                raise UnsortedFramesError(f"{self.video_id}: age frame_idx {frame_idx} after {prev}")
            if frame_idx < 0:
                raise FrameOutOfRangeError(f"{self.video_id}: age frame_idx {frame_idx} < 0")
            _check_finite("age", age)
            if not (1.0 <= age <= 120.0):
                raise ValidationError(f"{self.video_id}: age must lie in [1, 120], got {age}")
            prev = frame_idx


@dataclass(frozen=True)
class FeatureRow:
    """One video's derived features and optional regression target.

    Attributes:
        video_id: Video identifier.
        ama: Average motion amplitude (dimensionless, >= 0) or None.
        age: Aggregated age in years or None (no age series available).
        hr_true: Ground-truth HR in bpm or None (test-mode data).
    """

    video_id: str
    ama: Optional[float] = None
    age: Optional[float] = None
    hr_true: Optional[float] = None

    def __post_init__(self):
        _check_video_id(self.video_id)
        if self.ama is not None:
            _check_finite("ama", self.ama)
            if self.ama < 0:
                raise ValidationError(f"{self.video_id}: ama must be >= 0, got {self.ama}")
        if self.age is not None:
            _check_finite("age", self.age)
        if self.hr_true is not None:
            _check_finite("hr_true", self.hr_true)


@dataclass(frozen=True)
class LinearModel:
    """Fitted line y = slope*x + intercept.

    degenerate=True marks a zero-variance predictor fit that fell back to
    the mean (slope forced to 0).
    """

    slope: float
    intercept: float
    degenerate: bool = False

    def __post_init__(self):
        _check_finite("slope", self.slope)
        _check_finite("intercept", self.intercept)
        if self.degenerate and self.slope != 0.0:
            raise ValidationError("degenerate model must have slope 0")


@dataclass(frozen=True)
class EstimatorModel:
    """A fitted baseline estimator, one of the four variants.

    Exactly the fields for the variant are set:
      bc      -> c (constant HR, integral bpm)
      bmotion -> lm fitted on AMA
      bage    -> lm fitted on age
      bam     -> lm_age (first stage on age) + lm_resid (relative residuals on AMA)

    delta records the motion-feature frame offset used when the training
    features were extracted, so prediction-time features can be checked.
    """

    variant: str
    c: Optional[int] = None
    lm: Optional[LinearModel] = None
    lm_age: Optional[LinearModel] = None
    lm_resid: Optional[LinearModel] = None
    delta: int = 10

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValidationError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.delta < 1:
            raise ValidationError(f"delta must be >= 1, got {self.delta}")
        needed = {
            "bc": ("c",),
            "bmotion": ("lm",),
            "bage": ("lm",),
            "bam": ("lm_age", "lm_resid"),
        }[self.variant]
        for name in ("c", "lm", "lm_age", "lm_resid"):
            have = getattr(self, name) is not None
            if have != (name in needed):
                raise ValidationError(f"variant {self.variant!r}: field {name!r} "
                                      + ("must be set" if name in needed else "must be unset"))
        if self.variant == "bc" and self.c <= 0:
            raise ValidationError(f"bc constant must be > 0, got {self.c}")


@dataclass(frozen=True)
class Prediction:
    """Predicted HR (bpm) for one video."""

    video_id: str
    hr_pred: float

    def __post_init__(self):
        _check_video_id(self.video_id)
        _check_finite("hr_pred", self.hr_pred)


@dataclass(frozen=True)
class MetricsReport:
    """Challenge-style scores for one prediction set.

    Attributes:
        mae: Mean absolute error, bpm (primary metric).
        rmse: Root mean square error, bpm.
        pearson_r: Pearson correlation in [-1, 1]; exactly 0 when either
            side has (relatively) zero variance.
        n: Number of scored videos.
    """

    mae: float
    rmse: float
    pearson_r: float
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"n must be >= 1, got {self.n}")
        for name in ("mae", "rmse", "pearson_r"):
            _check_finite(name, getattr(self, name))
        # allow one-ulp noise in the Jensen inequality when all errors are equal
        if self.mae < 0 or self.mae > self.rmse * (1 + 1e-12) + 1e-15:
            raise ValidationError(f"need 0 <= mae <= rmse, got mae={self.mae}, rmse={self.rmse}")
        if not (-1.0 <= self.pearson_r <= 1.0):
            raise ValidationError(f"pearson_r must lie in [-1, 1], got {self.pearson_r}")
