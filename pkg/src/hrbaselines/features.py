"""Per-video scalar features: average motion amplitude and aggregated age.

AMA is the mean absolute change of the height-normalized vertical face-box
coordinate over a fixed frame offset delta. Only the vertical coordinate is
used; detected rectangle widths are too noisy under head rotation to be
worth folding in. The aggregated age is a trimmed mean over evenly sampled
per-frame estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    EmptySeriesError,
    MissingMetaError,
    NoUsablePairsError,
    TooShortError,
    ValidationError,
)
from .types import AgeSeries, FeatureRow, VideoMeta, VideoTrack


@dataclass(frozen=True)
class FeatureConfig:
    """Knobs for feature extraction.

    Attributes:
        delta: Frame offset for the motion amplitude (default 10).
        age_sample_count: How many evenly spaced frames to sample ages at.
        age_median_window: Width of the centered window averaged after
            sorting the sampled ages (5 of 10 by default).
    """

    delta: int = 10
    age_sample_count: int = 10
    age_median_window: int = 5

    def __post_init__(self):
        if self.delta < 1:
            raise ValidationError(f"delta must be >= 1, got {self.delta}")
        if not (1 <= self.age_median_window <= self.age_sample_count):
            raise ValidationError(
                "need 1 <= age_median_window <= age_sample_count, got "
                f"window={self.age_median_window}, count={self.age_sample_count}"
            )


def compute_ama(track: VideoTrack, config: FeatureConfig = FeatureConfig()) -> float:
    """Average motion amplitude of one track.

    Mean over f = delta .. frame_count-1 of |y^f/h^f - y^(f-delta)/h^(f-delta)|,
    summed in ascending f for bit-reproducibility. Pairs where either frame
    has no detection are skipped and the denominator is the number of usable
    pairs, which is bias-free for stationary motion and avoids inventing
    boxes by interpolation.
    """
    delta = config.delta
    if track.frame_count <= delta:
        raise TooShortError(
            f"frame_count {track.frame_count} <= delta {delta}", video_id=track.video_id
        )
    by_frame = track.box_by_frame()
    terms = []
    for f in range(delta, track.frame_count):
        cur = by_frame.get(f)
        prev = by_frame.get(f - delta)
        if cur is None or prev is None:
            continue
        terms.append(abs(cur.y / cur.h - prev.y / prev.h))
    if not terms:
        raise NoUsablePairsError(
            f"no frame pair (f, f-{delta}) has detections on both frames",
            video_id=track.video_id,
        )
    return math.fsum(terms) / len(terms)


def _even_targets(frame_count: int, count: int) -> list[int]:
    """Evenly spaced frame targets over [0, frame_count-1], round half up."""
    if count == 1:
        return [0]
    return [math.floor(i * (frame_count - 1) / (count - 1) + 0.5) for i in range(count)]


def aggregate_age(
    series: AgeSeries, frame_count: int, config: FeatureConfig = FeatureConfig()
) -> float:
    """Aggregate a per-frame age series into one value in years.

    Picks the sample nearest each of age_sample_count evenly spaced frame
    targets (ties go to the lower frame index; one sample may serve several
    targets when the series is short), sorts the picked values, and averages
    the centered age_median_window of them. The windowed average rejects
    outlier frames the way a trimmed mean does.
    """
    if not series.samples:
        raise EmptySeriesError("age series has no samples", video_id=series.video_id)
    selected = []
    for target in _even_targets(frame_count, config.age_sample_count):
        best = min(series.samples, key=lambda s: (abs(s[0] - target), s[0]))
        selected.append(best[1])
    selected.sort()
    start = (config.age_sample_count - config.age_median_window) // 2
    window = selected[start:start + config.age_median_window]
    return math.fsum(window) / len(window)


def build_feature_rows(
    tracks: Iterable[VideoTrack],
    ages: Iterable[AgeSeries],
    metas: Iterable[VideoMeta],
    config: FeatureConfig = FeatureConfig(),
) -> list[FeatureRow]:
    """Join per-video features into FeatureRows, sorted by video_id.

    Every track must have a meta entry; the age feature is absent when the
    video has no age series, and hr_true is absent when the meta lacks it
    (test mode). Feature errors abort and carry the offending video_id.
    """
    meta_by_id = {m.video_id: m for m in metas}
    ages_by_id = {a.video_id: a for a in ages}
    rows = []
    for track in sorted(tracks, key=lambda t: t.video_id):
        meta = meta_by_id.get(track.video_id)
        if meta is None:
            raise MissingMetaError("no metadata entry for this track", video_id=track.video_id)
        ama = compute_ama(track, config)
        series = ages_by_id.get(track.video_id)
        age = None
        if series is not None:
            age = aggregate_age(series, track.frame_count, config)
        rows.append(FeatureRow(track.video_id, ama=ama, age=age, hr_true=meta.hr_true))
    return rows
