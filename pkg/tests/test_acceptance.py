"""Acceptance suite: one test per acceptance criterion at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to get one PASS line per
criterion. Every expected value here is either hand-computed, produced by an
independent oracle (numpy's QR-based polyfit), or a determinism byte-compare.
"""

import time

import numpy as np
import pytest

from hrbaselines import (
    FaceBox,
    FeatureConfig,
    FeatureRow,
    GenParams,
    VideoTrack,
    build_feature_rows,
    cli,
    compute_ama,
    fit_bage,
    fit_bam,
    fit_bc,
    fit_ols,
    generate_dataset,
    mae,
    pearson_r,
    predict,
    rmse,
)
from hrbaselines import dataio, metrics


def _ok(name):
    print(f"\nACCEPTANCE PASS: {name}")


def make_track(ys, hs, video_id="v1"):
    boxes = tuple(
        FaceBox(f, 10.0, float(y), 40.0, float(h)) for f, (y, h) in enumerate(zip(ys, hs))
    )
    return VideoTrack(video_id, 30.0, len(ys), boxes)


def test_ols_oracle_equivalence():
    """1,000 random instances (n <= 100) match numpy's fit to relative 1e-9, < 5 s."""
    rng = np.random.default_rng(20240401)
    started = time.perf_counter()
    for _ in range(1000):
        n = int(rng.integers(2, 101))
        xs = rng.uniform(-100, 100, n)
        ys = rng.uniform(-300, 300, n)
        model = fit_ols(list(xs), list(ys))
        if model.degenerate:
            continue
        o_slope, o_intercept = np.polyfit(xs, ys, 1)
        assert abs(model.slope - o_slope) <= 1e-9 * max(1.0, abs(o_slope))
        assert abs(model.intercept - o_intercept) <= 1e-9 * max(1.0, abs(o_intercept))
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"oracle equivalence took {elapsed:.2f}s"
    _ok(f"OLS oracle equivalence (1000 instances in {elapsed:.2f}s)")


def test_ama_invariance_suite():
    """Zero motion -> 0; scale and shift invariance to 1e-12; hand fixtures to 1e-12."""
    # zero motion is exactly zero
    static = make_track([100.0] * 20, [50.0] * 20)
    assert compute_ama(static) == 0.0

    # hand fixtures: one sparse pair and a uniform drift, both 0.2
    pair_track = VideoTrack(
        "v1", 30.0, 11,
        (FaceBox(0, 0, 100.0, 40.0, 50.0), FaceBox(10, 0, 110.0, 40.0, 50.0)),
    )
    assert abs(compute_ama(pair_track) - 0.2) <= 1e-12
    drift = make_track([100.0 + f for f in range(30)], [50.0] * 30)
    assert abs(compute_ama(drift) - 0.2) <= 1e-12

    # randomized scale / shift invariance
    rng = np.random.default_rng(8)
    config = FeatureConfig()
    for _ in range(50):
        n = int(rng.integers(11, 61))
        ys = rng.uniform(0, 2000, n)
        hs = rng.uniform(20, 400, n)
        base = compute_ama(make_track(ys, hs), config)
        for s in (0.5, 3.0, 17.25):
            scaled = compute_ama(make_track(ys * s, hs * s), config)
            assert abs(base - scaled) <= 1e-12
        h_const = float(rng.uniform(20, 400))
        base_const = compute_ama(make_track(ys, [h_const] * n), config)
        for c in (-1500.0, 42.0, 977.5):
            shifted = compute_ama(make_track(ys + c, [h_const] * n), config)
            assert abs(base_const - shifted) <= 1e-12
    _ok("AMA invariance suite (zero motion, scale, shift, hand fixtures)")


def test_metric_identities():
    """MAE <= RMSE on 1,000 random pairs; R in [-1,1]; exact R identities."""
    rng = np.random.default_rng(99)
    for _ in range(1000):
        n = int(rng.integers(1, 60))
        y_true = rng.uniform(40, 200, n)
        y_pred = rng.uniform(-100, 400, n)
        assert mae(y_true, y_pred) <= rmse(y_true, y_pred) * (1 + 1e-12) + 1e-15
        if n >= 2:
            assert -1.0 <= pearson_r(y_true, y_pred) <= 1.0
    for _ in range(100):
        y = list(rng.uniform(40, 200, int(rng.integers(2, 40))))
        assert pearson_r(y, y) == 1.0
        assert pearson_r(y, [-v for v in y]) == -1.0
        assert pearson_r(y, [87.0] * len(y)) == 0.0
    _ok("metric identities (Jensen, range, exact R conventions)")


def test_bc_floor():
    """Training means 87.95, 70.0, 69.01 floor to 87, 70, 69."""
    cases = (
        ([87.95], 87),
        ([70.0], 70),
        ([69.0, 69.02], 69),
    )
    for hrs, expected in cases:
        model = fit_bc([FeatureRow(f"v{i}", hr_true=h) for i, h in enumerate(hrs)])
        assert model.c == expected, f"mean of {hrs} should floor to {expected}, got {model.c}"
    _ok("BC floor semantics (87.95 -> 87, 70.0 -> 70, 69.01 -> 69)")


def test_bam_equals_bage_on_exact_linear_training():
    """With hr exactly linear in age, BAM == BAge to 1e-9 on 100 random probes."""
    rng = np.random.default_rng(314)
    ages = list(rng.uniform(15, 40, 40))
    amas = list(rng.uniform(0, 1, 40))
    train = [
        FeatureRow(f"t{i:03d}", ama=amas[i], age=ages[i], hr_true=-1.5 * ages[i] + 120.0)
        for i in range(40)
    ]
    bam = fit_bam(train)
    bage = fit_bage(train)
    probes = [
        FeatureRow(f"p{i:03d}", ama=float(rng.uniform(0, 1)), age=float(rng.uniform(15, 40)))
        for i in range(100)
    ]
    bam_out = [p.hr_pred for p in predict(bam, probes)]
    bage_out = [p.hr_pred for p in predict(bage, probes)]
    worst = max(abs(a - b) for a, b in zip(bam_out, bage_out))
    assert worst <= 1e-9, f"max |BAM - BAge| = {worst}"
    _ok(f"BAM==BAge identity on exact-linear training (max diff {worst:.2e})")


def test_parameter_recovery_at_desk_scale():
    """Seeded n=200 set: BAge slope in [0.7, 0.9], test MAE in [1.2, 2.4] bpm;
    with the b=0.1 interaction, BAM train MAE <= BAge train MAE. Under 10 s."""
    started = time.perf_counter()

    params = GenParams(a=0.8, b=0.0, c=60.0, sigma=2.0)
    tracks, metas, ages = generate_dataset(1001, 200, params)
    rows = build_feature_rows(tracks, ages, metas)
    train = [r for i, r in enumerate(rows) if i % 2 == 1]
    test = [r for i, r in enumerate(rows) if i % 2 == 0]
    model = fit_bage(train)
    assert 0.7 <= model.lm.slope <= 0.9, f"recovered slope {model.lm.slope}"
    preds = predict(model, test)
    report = metrics.evaluate(preds, metas)
    assert 1.2 <= report.mae <= 2.4, f"test-split MAE {report.mae}"

    params_b = GenParams(a=0.8, b=0.1, c=60.0, sigma=2.0)
    tracks_b, metas_b, ages_b = generate_dataset(1002, 200, params_b)
    rows_b = build_feature_rows(tracks_b, ages_b, metas_b)
    y_true = [r.hr_true for r in rows_b]
    bam_mae = mae(y_true, [p.hr_pred for p in predict(fit_bam(rows_b), rows_b)])
    bage_mae = mae(y_true, [p.hr_pred for p in predict(fit_bage(rows_b), rows_b)])
    assert bam_mae <= bage_mae, f"BAM train MAE {bam_mae} > BAge train MAE {bage_mae}"

    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"parameter recovery took {elapsed:.2f}s"
    _ok(
        "parameter recovery (slope {:.3f}, test MAE {:.2f}, BAM {:.3f} <= BAge {:.3f}, {:.1f}s)".format(
            model.lm.slope, report.mae, bam_mae, bage_mae, elapsed
        )
    )


def _pipeline_once(workdir, capsys):
    """synth(seed=42) -> features -> train bam -> predict -> evaluate."""
    data = workdir / "data"
    stages = [
        ["synth", "--seed", "42", "--videos", "30", "--b", "0.5", "--out", str(data)],
        ["features", "--tracks", str(data / "tracks.csv"), "--meta", str(data / "meta.csv"),
         "--ages", str(data / "ages.csv"), "--out", str(workdir / "features.csv")],
        ["train", "--features", str(workdir / "features.csv"), "--method", "bam",
         "--model-out", str(workdir / "bam.json")],
        ["predict", "--features", str(workdir / "features.csv"),
         "--model", str(workdir / "bam.json"), "--out", str(workdir / "pred.csv")],
        ["evaluate", "--pred", str(workdir / "pred.csv"), "--meta", str(data / "meta.csv"),
         "--format", "csv"],
    ]
    for argv in stages:
        assert cli.main(argv) == 0, f"stage failed: {argv[0]}"
    eval_output = capsys.readouterr().out
    files = {}
    for rel in ("data/tracks.csv", "data/meta.csv", "data/ages.csv",
                "features.csv", "bam.json", "pred.csv"):
        files[rel] = (workdir / rel).read_bytes()
    return files, eval_output


def test_end_to_end_determinism(tmp_path, capsys):
    """The synth->features->train->predict->evaluate chain is byte-identical on rerun."""
    run1, eval1 = _pipeline_once(tmp_path / "run1", capsys)
    run2, eval2 = _pipeline_once(tmp_path / "run2", capsys)
    for rel in run1:
        assert run1[rel] == run2[rel], f"{rel} differs between reruns"
    assert eval1.split("\n")[-3:] == eval2.split("\n")[-3:]
    _ok("end-to-end determinism (6 artifacts byte-identical across reruns)")


def test_ordering_sanity(tmp_path, capsys):
    """With both age and motion signal: MAE ranks BAM <= BAge <= BC, BMotion <= BC."""
    data = tmp_path / "data"
    assert cli.main(["synth", "--seed", "2024", "--videos", "200", "--b", "0.5",
                     "--m-max", "1.0", "--out", str(data)]) == 0
    features = tmp_path / "features.csv"
    assert cli.main(["features", "--tracks", str(data / "tracks.csv"),
                     "--meta", str(data / "meta.csv"), "--ages", str(data / "ages.csv"),
                     "--out", str(features)]) == 0
    pred_paths = {}
    for method in ("bc", "bmotion", "bage", "bam"):
        model = tmp_path / f"{method}.json"
        pred_paths[method] = tmp_path / f"pred_{method}.csv"
        assert cli.main(["train", "--features", str(features), "--method", method,
                         "--model-out", str(model)]) == 0
        assert cli.main(["predict", "--features", str(features), "--model", str(model),
                         "--out", str(pred_paths[method])]) == 0
    capsys.readouterr()

    metas = dataio.load_meta(data / "meta.csv")
    maes = {
        method: metrics.evaluate(dataio.load_predictions(path), metas).mae
        for method, path in pred_paths.items()
    }
    assert maes["bam"] <= maes["bage"] <= maes["bc"], f"rank violated: {maes}"
    assert maes["bmotion"] <= maes["bc"], f"rank violated: {maes}"

    # the compare table agrees: rows come out sorted ascending by MAE
    assert cli.main(["compare", "--meta", str(data / "meta.csv"),
                     "--pred", *[str(p) for p in pred_paths.values()],
                     "--labels", *pred_paths.keys()]) == 0
    table = capsys.readouterr().out.strip().split("\n")
    shown = [row.split()[1] for row in table[1:]]
    assert shown == sorted(shown, key=float)
    _ok(f"ordering sanity (MAEs: " +
        ", ".join(f"{m}={maes[m]:.2f}" for m in ("bam", "bage", "bmotion", "bc")) + ")")
