"""Bundled golden fixtures: tiny input files with byte-exact expected outputs.

Each fixture is a self-contained pipeline run: materialize `files` into a
directory, execute the CLI `commands` in order, and every file named in
`expected` must come out byte-identical. The numbers were hand-computed
(the two-stage walkthrough is worked step by step in docs/bam_walkthrough.md).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Fixture:
    name: str
    files: dict[str, str]
    commands: tuple[tuple[str, ...], ...]
    expected: dict[str, str]


# Two videos, HR exactly linear in age (slope -2, intercept 150), motion
# amplitudes 1 and 0. The first stage fits the line exactly, so the relative
# residuals are identically zero and the second stage is the zero line.
_BAM_FEATURES = """\
# delta=10
video_id,ama,age,hr_true
v01,1.0,20.0,110.0
v02,0.0,30.0,90.0
"""

_BAM_MODEL = """\
{
  "schema_version": 1,
  "variant": "bam",
  "delta": 10,
  "lm_age": {"slope": -2, "intercept": 150, "degenerate": false},
  "lm_resid": {"slope": 0, "intercept": 0, "degenerate": false}
}
"""

_BAM_PREDICTIONS = """\
video_id,hr_bpm
v01,110.000000
v02,90.000000
"""

# One perfectly still face: every motion pair is zero, the age series is
# constant 25, ground truth 80 bpm.
_STATIC_TRACKS = "video_id,frame_idx,frame_count,fps,x,y,w,h\n" + "".join(
    f"vstatic,{f},20,30.0,10.0,100.0,40.0,50.0\n" for f in range(20)
)

_STATIC_META = """\
video_id,fps,hr_bpm
vstatic,30.0,80.0
"""

_STATIC_AGES = """\
video_id,frame_idx,age_years
vstatic,0,25.0
vstatic,9,25.0
vstatic,19,25.0
"""

_STATIC_FEATURES = """\
# delta=10
video_id,ama,age,hr_true
vstatic,0.0,25.0,80.0
"""

# Training mean 87.95 bpm, rounded down to the constant 87.
_BC_FEATURES = """\
video_id,ama,age,hr_true
vbc01,,,85.95
vbc02,,,89.95
"""

_BC_MODEL = """\
{
  "schema_version": 1,
  "variant": "bc",
  "delta": 10,
  "c": 87
}
"""


def fixture_suite() -> list[Fixture]:
    """The golden fixtures exercised by the end-to-end tests."""
    return [
        Fixture(
            name="bam_walkthrough",
            files={"features.csv": _BAM_FEATURES},
            commands=(
                ("train", "--features", "features.csv", "--method", "bam",
                 "--model-out", "model.json"),
                ("predict", "--features", "features.csv", "--model", "model.json",
                 "--out", "pred.csv"),
            ),
            expected={"model.json": _BAM_MODEL, "pred.csv": _BAM_PREDICTIONS},
        ),
        Fixture(
            name="static_track",
            files={
                "tracks.csv": _STATIC_TRACKS,
                "meta.csv": _STATIC_META,
                "ages.csv": _STATIC_AGES,
            },
            commands=(
                ("features", "--tracks", "tracks.csv", "--meta", "meta.csv",
                 "--ages", "ages.csv", "--out", "features.csv"),
            ),
            expected={"features.csv": _STATIC_FEATURES},
        ),
        Fixture(
            name="bc_mean",
            files={"features.csv": _BC_FEATURES},
            commands=(
                ("train", "--features", "features.csv", "--method", "bc",
                 "--model-out", "model.json"),
            ),
            expected={"model.json": _BC_MODEL},
        ),
    ]
