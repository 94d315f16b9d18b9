"""Exception types raised across the toolkit.

Every error the library can raise derives from HrBaselinesError so callers
(and the CLI) can catch data/validation problems with one handler and map
them to exit code 1, keeping usage errors (argparse, exit code 2) separate.
"""

from __future__ import annotations


class HrBaselinesError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(HrBaselinesError):
    """A domain type invariant was violated."""


class DuplicateFrameError(ValidationError):
    """Two boxes or samples share one frame index within a video."""


class UnsortedFramesError(ValidationError):
    """Frame indices are not strictly ascending."""


class NonPositiveExtentError(ValidationError):
    """A face rectangle has width or height <= 0."""


class FrameOutOfRangeError(ValidationError):
    """A frame index is negative or >= frame_count."""


class BadVideoIdError(ValidationError):
    """video_id is empty or contains wire-format delimiter characters."""


# --- feature extraction ---

class FeatureError(HrBaselinesError):
    """Base class for feature-computation failures."""

    def __init__(self, message: str, video_id: str | None = None):
        self.video_id = video_id
        super().__init__(message if video_id is None else f"{video_id}: {message}")


class TooShortError(FeatureError):
    """Track has frame_count <= delta, so no motion pair exists."""


class NoUsablePairsError(FeatureError):
    """Every (f, f-delta) pair is missing at least one detection."""


class EmptySeriesError(FeatureError):
    """Age series holds no samples."""


class MissingMetaError(FeatureError):
    """A track has no matching VideoMeta entry."""


# --- regression ---

class RegressionError(HrBaselinesError):
    pass


class LengthMismatchError(RegressionError):
    pass


class TooFewPointsError(RegressionError):
    pass


class NonFiniteInputError(RegressionError):
    pass


class BaseNearZeroError(RegressionError):
    """A first-stage prediction is within 1e-6 of zero; relative residuals undefined."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(f"base prediction at index {index} is {value!r}, within 1e-6 of zero")


# --- estimators ---

class EstimatorError(HrBaselinesError):
    pass


class EmptyTrainingSetError(EstimatorError):
    pass


class MissingTargetError(EstimatorError):
    """A training row lacks hr_true."""

    def __init__(self, video_id: str):
        self.video_id = video_id
        super().__init__(f"{video_id}: row has no hr_true target")


class MissingFeatureError(EstimatorError):
    """A row lacks a feature the estimator variant requires."""

    def __init__(self, video_id: str, feature: str):
        self.video_id = video_id
        self.feature = feature
        super().__init__(f"{video_id}: row has no {feature!r} value")


# --- metrics ---

class MetricsError(HrBaselinesError):
    pass


class EmptyInputError(MetricsError):
    pass


class MissingGroundTruthError(MetricsError):
    def __init__(self, video_id: str):
        self.video_id = video_id
        super().__init__(f"{video_id}: no ground-truth HR for this prediction")


class DuplicatePredictionError(MetricsError):
    def __init__(self, video_id: str):
        self.video_id = video_id
        super().__init__(f"{video_id}: more than one prediction for this video")


# --- file I/O ---

class DataIOError(HrBaselinesError):
    pass


class ParseError(DataIOError):
    """A file row could not be parsed; carries the 1-based line number."""

    def __init__(self, line: int, reason: str, path: str | None = None):
        self.line = line
        self.reason = reason
        self.path = path
        where = f"{path}:{line}" if path else f"line {line}"
        super().__init__(f"{where}: {reason}")


class UnknownVariantError(DataIOError):
    def __init__(self, variant: str):
        self.variant = variant
        super().__init__(f"unknown estimator variant {variant!r}")


class SchemaVersionMismatchError(DataIOError):
    def __init__(self, found, expected: int):
        self.found = found
        self.expected = expected
        super().__init__(f"model schema_version {found!r} not supported (expected {expected})")


# --- synth ---

class InvalidParamsError(HrBaselinesError):
    pass
