"""Seeded synthetic datasets for desk-scale testing of the full pipeline.

Each video gets an age drawn from Uniform[15, 40] (the working range of the
age feature), a motion amplitude m from Uniform[0, m_max], and a dense face
track whose top-edge y follows a square wave with half-period delta and
amplitude m*h/2, so every delta-pair contributes exactly m and compute_ama
recovers m up to float rounding. Ground truth is

    hr_true = a*age + b*m*age + c + Normal(0, sigma)

so b=0 gives a pure age signal and b>0 an age-motion interaction.

Randomness comes from numpy's Philox counter-based bit generator, keyed per
video as (seed << 64) | video_index: the same seed yields bit-identical
datasets regardless of generation order or chunking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParamsError
from .types import AgeSeries, FaceBox, VideoMeta, VideoTrack

# fixed track geometry; only y moves, per the vertical-only motion feature
BOX_H = 100.0
BOX_W = 100.0
BOX_X = 160.0
BOX_Y0 = 240.0

AGE_RANGE = (15.0, 40.0)


@dataclass(frozen=True)
class GenParams:
    """Generator knobs.

    a is bpm per year, b bpm per year per AMA unit (interaction), c the bpm
    offset, sigma the Gaussian HR noise, m_max the motion amplitude range,
    age_jitter the per-frame age noise in years. delta is the square-wave
    half-period and should match the feature extraction offset.
    """

    a: float = 0.8
    b: float = 0.0
    c: float = 60.0
    sigma: float = 2.0
    m_max: float = 0.5
    age_jitter: float = 0.5
    frame_count: int = 300
    fps: float = 30.0
    delta: int = 10

    def __post_init__(self):
        if self.sigma < 0 or self.m_max < 0 or self.age_jitter < 0:
            raise InvalidParamsError("sigma, m_max and age_jitter must be >= 0")
        if self.frame_count <= self.delta:
            raise InvalidParamsError(
                f"frame_count must exceed delta, got {self.frame_count} <= {self.delta}"
            )
        if self.delta < 1:
            raise InvalidParamsError(f"delta must be >= 1, got {self.delta}")
        if self.fps <= 0:
            raise InvalidParamsError(f"fps must be > 0, got {self.fps}")


def _video_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(seed << 64) | index))


def generate_dataset(
    seed: int, n_videos: int, params: GenParams = GenParams()
) -> tuple[list[VideoTrack], list[VideoMeta], list[AgeSeries]]:
    """Generate a deterministic synthetic dataset of n_videos videos.

    Returns (tracks, metas, ages) sorted by video_id. Raises InvalidParams
    when the parameterization is unusable, including when a drawn hr_true
    would leave the physiological (0, 300) bpm range.
    """
    if n_videos < 1:
        raise InvalidParamsError(f"n_videos must be >= 1, got {n_videos}")
    if seed < 0 or seed >= 2 ** 64:
        raise InvalidParamsError(f"seed must fit in 64 bits, got {seed}")
    tracks, metas, ages = [], [], []
    for i in range(n_videos):
        rng = _video_rng(seed, i)
        video_id = f"synth{i:04d}"
        age = rng.uniform(*AGE_RANGE)
        m = rng.uniform(0.0, params.m_max)
        noise = rng.normal(0.0, params.sigma) if params.sigma > 0 else 0.0
        hr = params.a * age + params.b * m * age + params.c + noise
        if not (0.0 < hr < 300.0):
            raise InvalidParamsError(
                f"{video_id}: drawn hr_true {hr:.2f} outside (0, 300); tame a/b/c/sigma"
            )
        amplitude = m * BOX_H / 2.0
        boxes = []
        for f in range(params.frame_count):
            sign = 1.0 if (f // params.delta) % 2 == 0 else -1.0
            boxes.append(FaceBox(f, BOX_X, BOX_Y0 + sign * amplitude, BOX_W, BOX_H))
        tracks.append(VideoTrack(video_id, params.fps, params.frame_count, tuple(boxes)))
        metas.append(VideoMeta(video_id, params.fps, hr))
        if params.age_jitter > 0:
            jitter = rng.normal(0.0, params.age_jitter, size=params.frame_count)
        else:
            jitter = np.zeros(params.frame_count)
        sampled = np.clip(age + jitter, 1.0, 120.0)
        samples = tuple((f, float(sampled[f])) for f in range(params.frame_count))
        ages.append(AgeSeries(video_id, samples))
    return tracks, metas, ages
