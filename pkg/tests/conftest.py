"""Shared fixtures and track-building helpers."""

from __future__ import annotations

import pytest

from hrbaselines import FaceBox, VideoTrack
from hrbaselines import cli


def make_track(ys, hs=None, video_id="v1", fps=30.0, x=10.0, w=40.0, frame_count=None):
    """Dense track from per-frame y values (h defaults to 50 everywhere)."""
    if hs is None:
        hs = [50.0] * len(ys)
    boxes = tuple(FaceBox(f, x, float(y), w, float(h)) for f, (y, h) in enumerate(zip(ys, hs)))
    return VideoTrack(video_id, fps, frame_count or len(ys), boxes)


def static_track(n=20, y=100.0, h=50.0, video_id="v1"):
    return make_track([y] * n, [h] * n, video_id=video_id)


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""

    def run(*argv):
        code = cli.main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
