"""Domain type construction and invariant enforcement."""

import pytest

from hrbaselines import (
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
from hrbaselines.errors import (
    BadVideoIdError,
    DuplicateFrameError,
    FrameOutOfRangeError,
    NonPositiveExtentError,
    UnsortedFramesError,
    ValidationError,
)

from conftest import make_track, static_track


class TestValidateTrack:
    def test_valid_track_accepted_unchanged(self):
        track = make_track([100.0, 101.0, 102.0], [50.0, 50.0, 50.0])
        assert validate_track(track) is track

    def test_duplicate_frame_rejected(self):
        boxes = (FaceBox(2, 0, 0, 5, 5), FaceBox(3, 0, 0, 5, 5), FaceBox(3, 0, 1, 5, 5))
        with pytest.raises(DuplicateFrameError):
            VideoTrack("v1", 30.0, 10, boxes)

    def test_zero_height_rejected(self):
        with pytest.raises(NonPositiveExtentError):
            FaceBox(5, 0, 0, 5, 0)

    def test_unsorted_frames_rejected(self):
        boxes = (FaceBox(4, 0, 0, 5, 5), FaceBox(2, 0, 0, 5, 5))
        with pytest.raises(UnsortedFramesError):
            VideoTrack("v1", 30.0, 10, boxes)

    def test_frame_idx_beyond_frame_count_rejected(self):
        with pytest.raises(FrameOutOfRangeError):
            VideoTrack("v1", 30.0, 3, (FaceBox(3, 0, 0, 5, 5),))

    def test_non_positive_fps_rejected(self):
        with pytest.raises(ValidationError):
            VideoTrack("v1", 0.0, 3, ())

    def test_sparse_track_is_legal(self):
        track = VideoTrack("v1", 30.0, 100, (FaceBox(0, 0, 0, 5, 5), FaceBox(99, 0, 0, 5, 5)))
        assert len(track.boxes) == 2


def test_video_id_wire_constraints():
    with pytest.raises(BadVideoIdError):
        VideoMeta("", 30.0)
    with pytest.raises(BadVideoIdError):
        Prediction("a,b", 80.0)
    with pytest.raises(BadVideoIdError):
        AgeSeries("v\n1", ((0, 25.0),))


def test_meta_hr_range():
    assert VideoMeta("v1", 30.0, 88.0).hr_true == 88.0
    assert VideoMeta("v1", 30.0).hr_true is None
    with pytest.raises(ValidationError):
        VideoMeta("v1", 30.0, 0.0)
    with pytest.raises(ValidationError):
        VideoMeta("v1", 30.0, 300.0)


def test_age_series_invariants():
    with pytest.raises(ValidationError):
        AgeSeries("v1", ((0, 0.5),))
    with pytest.raises(UnsortedFramesError):
        AgeSeries("v1", ((5, 20.0), (3, 21.0)))
    with pytest.raises(DuplicateFrameError):
        AgeSeries("v1", ((5, 20.0), (5, 21.0)))


def test_feature_row_rejects_negative_ama():
    with pytest.raises(ValidationError):
        FeatureRow("v1", ama=-0.1)


def test_linear_model_degenerate_flag():
    with pytest.raises(ValidationError):
        LinearModel(slope=1.0, intercept=0.0, degenerate=True)
    assert LinearModel(0.0, 87.0, degenerate=True).intercept == 87.0


def test_prediction_must_be_finite():
    with pytest.raises(ValidationError):
        Prediction("v1", float("nan"))


class TestEstimatorModel:
    def test_variant_field_pairing(self):
        lm = LinearModel(1.0, 2.0)
        EstimatorModel(variant="bc", c=87)
        EstimatorModel(variant="bage", lm=lm)
        EstimatorModel(variant="bam", lm_age=lm, lm_resid=lm)
        with pytest.raises(ValidationError):
            EstimatorModel(variant="bc")  # missing c
        with pytest.raises(ValidationError):
            EstimatorModel(variant="bage", lm=lm, c=87)  # stray field
        with pytest.raises(ValidationError):
            EstimatorModel(variant="nope", c=87)

    def test_bc_constant_positive(self):
        with pytest.raises(ValidationError):
            EstimatorModel(variant="bc", c=0)

    def test_delta_at_least_one(self):
        with pytest.raises(ValidationError):
            EstimatorModel(variant="bc", c=87, delta=0)


def test_metrics_report_invariants():
    MetricsReport(mae=5.0, rmse=5.0, pearson_r=0.0, n=2)
    with pytest.raises(ValidationError):
        MetricsReport(mae=6.0, rmse=5.0, pearson_r=0.0, n=2)
    with pytest.raises(ValidationError):
        MetricsReport(mae=1.0, rmse=2.0, pearson_r=1.5, n=2)
    with pytest.raises(ValidationError):
        MetricsReport(mae=1.0, rmse=2.0, pearson_r=0.0, n=0)


def test_types_are_immutable():
    track = static_track()
    with pytest.raises(AttributeError):
        track.fps = 25.0
    with pytest.raises(AttributeError):
        track.boxes[0].y = 1.0
