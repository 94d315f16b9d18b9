"""File formats: tracks, metadata, ages, features, predictions, and models.

All formats are UTF-8, LF-terminated, comma-delimited text with a '.'
decimal separator and no locale dependence. Loaders reject rows that
violate domain invariants instead of silently clamping. Full reference in
docs/formats.md.

    tracks       video_id,frame_idx,frame_count,fps,x,y,w,h
    meta         video_id,fps,hr_bpm          (hr_bpm may be blank)
    ages         video_id,frame_idx,age_years
    features     video_id,ama,age,hr_true     (optionals blank; '#' comments)
    predictions  video_id,hr_bpm              (6 decimals, sorted by id)
    model        JSON, schema_version 1, coefficients as %.17g decimals

Numbers in the row formats are written with repr(), which round-trips
doubles exactly; predictions are the one format with mandated 6-decimal
rendering.
"""

from __future__ import annotations

import json
import math
import os
from typing import Iterable, Sequence

from .errors import (
    DataIOError,
    DuplicatePredictionError,
    HrBaselinesError,
    ParseError,
    SchemaVersionMismatchError,
    UnknownVariantError,
)
from .types import (
    AgeSeries,
    EstimatorModel,
    FaceBox,
    FeatureRow,
    LinearModel,
    Prediction,
    VideoMeta,
    VideoTrack,
    validate_track,
)

MODEL_SCHEMA_VERSION = 1

TRACKS_HEADER = "video_id,frame_idx,frame_count,fps,x,y,w,h"
META_HEADER = "video_id,fps,hr_bpm"
AGES_HEADER = "video_id,frame_idx,age_years"
FEATURES_HEADER = "video_id,ama,age,hr_true"
PREDICTIONS_HEADER = "video_id,hr_bpm"


def _fmt(value: float) -> str:
    return repr(float(value))


def _read_rows(path, header: str, n_fields: int, allow_comments: bool = False):
    """Yield (line_no, fields) for each data row, enforcing the header."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        text = fh.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    data_started = False
    header_seen = False
    for line_no, line in enumerate(lines, start=1):
        line = line.rstrip("\r")
        if line == "":
            continue
        if allow_comments and line.startswith("#"):
            if data_started:
                raise ParseError(line_no, "comment after data rows", path=str(path))
            continue
        if not header_seen:
            if line != header:
                raise ParseError(line_no, f"expected header {header!r}, got {line!r}", path=str(path))
            header_seen = True
            continue
        data_started = True
        fields = line.split(",")
        if len(fields) != n_fields:
            raise ParseError(line_no, f"expected {n_fields} fields, got {len(fields)}", path=str(path))
        yield line_no, fields
    if not header_seen:
        raise ParseError(1, f"missing header {header!r}", path=str(path))


def _parse_float(raw: str, name: str, line_no: int, path) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ParseError(line_no, f"non-numeric {name}: {raw!r}", path=str(path)) from None
    if not math.isfinite(value):
        raise ParseError(line_no, f"non-finite {name}: {raw!r}", path=str(path))
    return value


def _parse_int(raw: str, name: str, line_no: int, path) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ParseError(line_no, f"non-integer {name}: {raw!r}", path=str(path)) from None


def _wrap_validation(video_id: str, exc: HrBaselinesError) -> DataIOError:
    return DataIOError(f"{video_id}: {exc}")


# --- tracks ---

def load_tracks(path) -> list[VideoTrack]:
    """Load and validate face tracks, grouped by video_id, in file order."""
    groups: dict[str, dict] = {}
    for line_no, fields in _read_rows(path, TRACKS_HEADER, 8):
        vid, f_idx, f_cnt, fps, x, y, w, h = fields
        box = dict(
            frame_idx=_parse_int(f_idx, "frame_idx", line_no, path),
            x=_parse_float(x, "x", line_no, path),
            y=_parse_float(y, "y", line_no, path),
            w=_parse_float(w, "w", line_no, path),
            h=_parse_float(h, "h", line_no, path),
        )
        frame_count = _parse_int(f_cnt, "frame_count", line_no, path)
        fps_val = _parse_float(fps, "fps", line_no, path)
        group = groups.setdefault(vid, dict(frame_count=frame_count, fps=fps_val, boxes=[]))
        if group["frame_count"] != frame_count:
            raise ParseError(line_no, f"inconsistent frame_count for {vid!r}", path=str(path))
        if group["fps"] != fps_val:
            raise ParseError(line_no, f"inconsistent fps for {vid!r}", path=str(path))
        group["boxes"].append(box)
    tracks = []
    for vid, group in groups.items():
        try:
            boxes = tuple(FaceBox(**b) for b in group["boxes"])
            tracks.append(VideoTrack(vid, group["fps"], group["frame_count"], boxes))
        except HrBaselinesError as exc:
            raise _wrap_validation(vid, exc) from exc
    for track in tracks:
        validate_track(track)
    return tracks


def write_tracks(tracks: Iterable[VideoTrack], path) -> None:
    lines = [TRACKS_HEADER]
    for track in sorted(tracks, key=lambda t: t.video_id):
        for b in track.boxes:
            lines.append(
                f"{track.video_id},{b.frame_idx},{track.frame_count},{_fmt(track.fps)},"
                f"{_fmt(b.x)},{_fmt(b.y)},{_fmt(b.w)},{_fmt(b.h)}"
            )
    _write_text(path, lines)


# --- meta ---

def load_meta(path) -> list[VideoMeta]:
    metas = []
    seen = set()
    for line_no, fields in _read_rows(path, META_HEADER, 3):
        vid, fps, hr = fields
        if vid in seen:
            raise ParseError(line_no, f"duplicate video_id {vid!r}", path=str(path))
        seen.add(vid)
        hr_true = None if hr == "" else _parse_float(hr, "hr_bpm", line_no, path)
        try:
            metas.append(VideoMeta(vid, _parse_float(fps, "fps", line_no, path), hr_true))
        except HrBaselinesError as exc:
            raise _wrap_validation(vid, exc) from exc
    return metas


def write_meta(metas: Iterable[VideoMeta], path) -> None:
    lines = [META_HEADER]
    for m in sorted(metas, key=lambda m: m.video_id):
        hr = "" if m.hr_true is None else _fmt(m.hr_true)
        lines.append(f"{m.video_id},{_fmt(m.fps)},{hr}")
    _write_text(path, lines)


# --- ages ---

def load_ages(path) -> list[AgeSeries]:
    groups: dict[str, list] = {}
    for line_no, fields in _read_rows(path, AGES_HEADER, 3):
        vid, frame_idx, age = fields
        groups.setdefault(vid, []).append(
            (_parse_int(frame_idx, "frame_idx", line_no, path),
             _parse_float(age, "age_years", line_no, path))
        )
    series = []
    for vid, samples in groups.items():
        try:
            series.append(AgeSeries(vid, tuple(samples)))
        except HrBaselinesError as exc:
            raise _wrap_validation(vid, exc) from exc
    return series


def write_ages(series: Iterable[AgeSeries], path) -> None:
    lines = [AGES_HEADER]
    for s in sorted(series, key=lambda s: s.video_id):
        for frame_idx, age in s.samples:
            lines.append(f"{s.video_id},{frame_idx},{_fmt(age)}")
    _write_text(path, lines)


# --- features ---

def load_features(path) -> tuple[list[FeatureRow], int | None]:
    """Load feature rows plus the delta annotation, if the file carries one.

    Returns (rows, delta). delta comes from an optional '# delta=N' comment
    line written by the features command; hand-made files without it load
    with delta None.
    """
    delta = None
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for line in fh:
            line = line.strip()
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if body.startswith("delta="):
                    try:
                        delta = int(body.split("=", 1)[1])
                    except ValueError:
                        raise ParseError(1, f"bad delta annotation {line!r}", path=str(path)) from None
            elif line:
                break
    rows = []
    seen = set()
    for line_no, fields in _read_rows(path, FEATURES_HEADER, 4, allow_comments=True):
        vid, ama, age, hr = fields
        if vid in seen:
            raise ParseError(line_no, f"duplicate video_id {vid!r}", path=str(path))
        seen.add(vid)
        try:
            rows.append(FeatureRow(
                vid,
                ama=None if ama == "" else _parse_float(ama, "ama", line_no, path),
                age=None if age == "" else _parse_float(age, "age", line_no, path),
                hr_true=None if hr == "" else _parse_float(hr, "hr_true", line_no, path),
            ))
        except HrBaselinesError as exc:
            raise _wrap_validation(vid, exc) from exc
    return rows, delta


def write_features(rows: Iterable[FeatureRow], path, delta: int | None = None) -> None:
    lines = []
    if delta is not None:
        lines.append(f"# delta={delta}")
    lines.append(FEATURES_HEADER)
    for row in sorted(rows, key=lambda r: r.video_id):
        ama = "" if row.ama is None else _fmt(row.ama)
        age = "" if row.age is None else _fmt(row.age)
        hr = "" if row.hr_true is None else _fmt(row.hr_true)
        lines.append(f"{row.video_id},{ama},{age},{hr}")
    _write_text(path, lines)


# --- predictions ---

def write_predictions(preds: Sequence[Prediction], path) -> None:
    """Write predictions sorted by video_id, HR rendered with 6 decimals."""
    if not preds:
        raise DataIOError("refusing to write an empty predictions file")
    lines = [PREDICTIONS_HEADER]
    for p in sorted(preds, key=lambda p: p.video_id):
        lines.append(f"{p.video_id},{p.hr_pred:.6f}")
    _write_text(path, lines)


def load_predictions(path) -> list[Prediction]:
    preds = []
    seen = set()
    for line_no, fields in _read_rows(path, PREDICTIONS_HEADER, 2):
        vid, hr = fields
        if vid in seen:
            raise DuplicatePredictionError(vid)
        seen.add(vid)
        try:
            preds.append(Prediction(vid, _parse_float(hr, "hr_bpm", line_no, path)))
        except HrBaselinesError as exc:
            raise _wrap_validation(vid, exc) from exc
    return preds


# --- models ---

def _coeff(value: float) -> str:
    # 17 significant decimal digits round-trip any IEEE double exactly
    return "%.17g" % value


def _lm_json(lm: LinearModel) -> str:
    flag = "true" if lm.degenerate else "false"
    return (f'{{"slope": {_coeff(lm.slope)}, "intercept": {_coeff(lm.intercept)}, '
            f'"degenerate": {flag}}}')


def save_model(model: EstimatorModel, path) -> None:
    """Persist a fitted model as JSON with full-precision coefficients."""
    parts = [
        f'  "schema_version": {MODEL_SCHEMA_VERSION}',
        f'  "variant": "{model.variant}"',
        f'  "delta": {model.delta}',
    ]
    if model.variant == "bc":
        parts.append(f'  "c": {model.c}')
    elif model.variant in ("bmotion", "bage"):
        parts.append(f'  "lm": {_lm_json(model.lm)}')
    else:
        parts.append(f'  "lm_age": {_lm_json(model.lm_age)}')
        parts.append(f'  "lm_resid": {_lm_json(model.lm_resid)}')
    _write_text(path, ["{", ",\n".join(parts), "}"])


def _lm_from_json(obj, name: str) -> LinearModel:
    if not isinstance(obj, dict) or set(obj) != {"slope", "intercept", "degenerate"}:
        raise DataIOError(f"model field {name!r} is malformed")
    return LinearModel(float(obj["slope"]), float(obj["intercept"]), bool(obj["degenerate"]))


def load_model(path) -> EstimatorModel:
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, f"invalid model JSON: {exc.msg}", path=str(path)) from None
    if not isinstance(doc, dict):
        raise ParseError(1, "model file must hold a JSON object", path=str(path))
    version = doc.get("schema_version")
    if version != MODEL_SCHEMA_VERSION:
        raise SchemaVersionMismatchError(version, MODEL_SCHEMA_VERSION)
    variant = doc.get("variant")
    if variant not in ("bc", "bmotion", "bage", "bam"):
        raise UnknownVariantError(str(variant))
    try:
        delta = int(doc.get("delta", 10))
    except (TypeError, ValueError):
        raise DataIOError(f"model delta is not an integer: {doc.get('delta')!r}") from None
    try:
        if variant == "bc":
            return EstimatorModel(variant="bc", c=int(doc["c"]), delta=delta)
        if variant in ("bmotion", "bage"):
            return EstimatorModel(variant=variant, lm=_lm_from_json(doc.get("lm"), "lm"),
                                  delta=delta)
        return EstimatorModel(
            variant="bam",
            lm_age=_lm_from_json(doc.get("lm_age"), "lm_age"),
            lm_resid=_lm_from_json(doc.get("lm_resid"), "lm_resid"),
            delta=delta,
        )
    except KeyError as exc:
        raise DataIOError(f"model file missing field {exc}") from None
    except HrBaselinesError as exc:
        raise DataIOError(f"invalid model: {exc}") from exc


def _write_text(path, lines: Sequence[str]) -> None:
    """Write lines LF-terminated, atomically (write temp then rename)."""
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")
    os.replace(tmp, path)
