"""Command-line pipeline: synth -> features -> train -> predict -> evaluate/compare.

Every stage is file-mediated (no hidden state) and deterministic given its
inputs and flags, so stages can be rerun, cached, and diffed. Exit codes:
0 success, 1 data/validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import dataio, estimators, metrics, synth
from .errors import HrBaselinesError, MissingMetaError
from .features import FeatureConfig, aggregate_age, compute_ama
from .types import FeatureRow

_FITTERS = {
    "bc": estimators.fit_bc,
    "bage": estimators.fit_bage,
    "bmotion": estimators.fit_bmotion,
    "bam": estimators.fit_bam,
}


def cmd_features(args) -> int:
    tracks = dataio.load_tracks(args.tracks)
    metas = dataio.load_meta(args.meta)
    age_series = dataio.load_ages(args.ages) if args.ages else []
    config = FeatureConfig(delta=args.delta)
    meta_by_id = {m.video_id: m for m in metas}
    ages_by_id = {a.video_id: a for a in age_series}

    rows, failures = [], []
    for track in sorted(tracks, key=lambda t: t.video_id):
        try:
            meta = meta_by_id.get(track.video_id)
            if meta is None:
                raise MissingMetaError("no metadata entry for this track",
                                       video_id=track.video_id)
            ama = compute_ama(track, config)
            series = ages_by_id.get(track.video_id)
            age = aggregate_age(series, track.frame_count, config) if series else None
            rows.append(FeatureRow(track.video_id, ama=ama, age=age, hr_true=meta.hr_true))
        except HrBaselinesError as exc:
            failures.append((track.video_id, exc))
    if failures:
        for video_id, exc in failures:
            print(f"error: {video_id}: {exc}", file=sys.stderr)
        return 1
    dataio.write_features(rows, args.out, delta=args.delta)
    print(f"wrote {len(rows)} feature rows to {args.out}")
    return 0


def cmd_train(args) -> int:
    rows, file_delta = dataio.load_features(args.features)
    delta = file_delta if file_delta is not None else 10
    model = _FITTERS[args.method](rows, delta=delta)
    dataio.save_model(model, args.model_out)
    print(f"variant: {model.variant}")
    print(f"delta: {model.delta}")
    if model.variant == "bc":
        print(f"c: {model.c}")
    elif model.variant in ("bage", "bmotion"):
        print(f"lm: slope={model.lm.slope:g} intercept={model.lm.intercept:g}"
              + (" (degenerate)" if model.lm.degenerate else ""))
    else:
        print(f"lm_age: slope={model.lm_age.slope:g} intercept={model.lm_age.intercept:g}"
              + (" (degenerate)" if model.lm_age.degenerate else ""))
        print(f"lm_resid: slope={model.lm_resid.slope:g} intercept={model.lm_resid.intercept:g}"
              + (" (degenerate)" if model.lm_resid.degenerate else ""))
    return 0


def cmd_predict(args) -> int:
    model = dataio.load_model(args.model)
    rows, file_delta = dataio.load_features(args.features)
    if file_delta is not None and file_delta != model.delta:
        print(f"warning: features were extracted with delta={file_delta} "
              f"but the model was trained with delta={model.delta}", file=sys.stderr)
    preds = estimators.predict(model, rows, clamp=args.clamp)
    dataio.write_predictions(preds, args.out)
    print(f"wrote {len(preds)} predictions to {args.out}")
    return 0


def _format_report(report, fmt: str) -> str:
    if fmt == "csv":
        return ("mae,rmse,pearson_r,n\n"
                f"{report.mae:.2f},{report.rmse:.2f},{report.pearson_r:.2f},{report.n}")
    return (f"MAE:  {report.mae:.2f} bpm\n"
            f"RMSE: {report.rmse:.2f} bpm\n"
            f"R:    {report.pearson_r:.2f}\n"
            f"n:    {report.n}")


def cmd_evaluate(args) -> int:
    preds = dataio.load_predictions(args.pred)
    metas = dataio.load_meta(args.meta)
    report = metrics.evaluate(preds, metas)
    print(_format_report(report, args.format))
    return 0


def cmd_compare(args) -> int:
    labels = args.labels if args.labels else [Path(p).stem for p in args.pred]
    if len(labels) != len(args.pred):
        print("error: --labels must match the number of --pred files", file=sys.stderr)
        return 2
    if len(set(labels)) != len(labels):
        print("error: duplicate labels", file=sys.stderr)
        return 2
    metas = dataio.load_meta(args.meta)
    scored = []
    for label, pred_path in zip(labels, args.pred):
        report = metrics.evaluate(dataio.load_predictions(pred_path), metas)
        scored.append((label, report))
    scored.sort(key=lambda item: (item[1].mae, item[0]))
    width = max(5, max(len(label) for label, _ in scored))
    print(f"{'label':<{width}}  {'MAE':>7}  {'RMSE':>7}  {'R':>6}  {'n':>5}")
    for label, report in scored:
        print(f"{label:<{width}}  {report.mae:>7.2f}  {report.rmse:>7.2f}  "
              f"{report.pearson_r:>6.2f}  {report.n:>5}")
    return 0


def cmd_synth(args) -> int:
    if args.videos < 1:
        print("error: --videos must be >= 1", file=sys.stderr)
        return 2
    params = synth.GenParams(
        a=args.a, b=args.b, c=args.c, sigma=args.sigma, m_max=args.m_max,
        age_jitter=args.age_jitter, frame_count=args.frames, fps=args.fps,
        delta=args.delta,
    )
    tracks, metas, ages = synth.generate_dataset(args.seed, args.videos, params)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    dataio.write_tracks(tracks, out / "tracks.csv")
    dataio.write_meta(metas, out / "meta.csv")
    dataio.write_ages(ages, out / "ages.csv")
    print(f"wrote {len(tracks)} synthetic videos to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hrbaselines",
        description="Adaptive baseline heart-rate estimators over face-track features.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("features", help="extract per-video AMA and age features")
    p.add_argument("--tracks", required=True, help="face-tracks file")
    p.add_argument("--meta", required=True, help="video metadata file")
    p.add_argument("--ages", help="per-frame age estimates file (optional)")
    p.add_argument("--out", required=True, help="output features file")
    p.add_argument("--delta", type=int, default=10, help="motion frame offset (default 10)")
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("train", help="fit one of the four baselines")
    p.add_argument("--features", required=True)
    p.add_argument("--method", required=True, choices=sorted(_FITTERS))
    p.add_argument("--model-out", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="predict HR for a features file")
    p.add_argument("--features", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--clamp", action="store_true",
                   help="clamp predictions to the 40-240 bpm range")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", help="score a predictions file against ground truth")
    p.add_argument("--pred", required=True)
    p.add_argument("--meta", required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", help="score several prediction files, sorted by MAE")
    p.add_argument("--meta", required=True)
    p.add_argument("--pred", required=True, nargs="+")
    p.add_argument("--labels", nargs="+")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("synth", help="generate a seeded synthetic dataset")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--videos", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--a", type=float, default=0.8, help="bpm per year")
    p.add_argument("--b", type=float, default=0.0, help="bpm per year per AMA unit")
    p.add_argument("--c", type=float, default=60.0, help="bpm offset")
    p.add_argument("--sigma", type=float, default=2.0, help="HR noise, bpm")
    p.add_argument("--m-max", type=float, default=0.5, help="max motion amplitude")
    p.add_argument("--age-jitter", type=float, default=0.5, help="per-frame age noise, years")
    p.add_argument("--frames", type=int, default=300, help="frames per video")
    p.add_argument("--fps", type=float, default=30.0)
    p.add_argument("--delta", type=int, default=10, help="square-wave half-period")
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except HrBaselinesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
