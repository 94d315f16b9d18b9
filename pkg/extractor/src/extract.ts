/**
 * Core extraction: video frames -> tracks rows -> ages rows, in the exact
 * CSV wire formats the hrbaselines toolkit loads. This file is the whole
 * coupling surface to the Python side; nothing else is shared.
 */

import * as fs from "fs";
import * as path from "path";

import {
  AgeEstimator,
  FaceCandidate,
  FaceDetector,
  GrayFrame,
  createAgeEstimator,
  createDetector,
} from "./backends";
import { ExtractorConfig } from "./config";
import { Y4mVideo } from "./y4m";

export class NoFacesDetectedError extends Error {}

export const TRACKS_HEADER = "video_id,frame_idx,frame_count,fps,x,y,w,h";
export const AGES_HEADER = "video_id,frame_idx,age_years";

/** How many evenly spaced frames the age model runs on. */
export const AGE_SAMPLE_COUNT = 10;

export interface TrackRow {
  frameIdx: number;
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface AgeRow {
  frameIdx: number;
  age: number;
}

export function assertValidVideoId(videoId: string): void {
  if (videoId.length === 0 || /[,\r\n]/.test(videoId)) {
    throw new Error(`bad video_id "${videoId}": must be non-empty, no commas/newlines`);
  }
}

function bestCandidate(candidates: FaceCandidate[]): FaceCandidate | undefined {
  let best: FaceCandidate | undefined;
  for (const c of candidates) {
    if (!best || c.confidence > best.confidence ||
        (c.confidence === best.confidence && c.w * c.h > best.w * best.h)) {
      best = c;
    }
  }
  return best;
}

/**
 * Run the detector over every frame, keeping the highest-confidence face
 * per frame; frames with no detection are omitted. Throws
 * NoFacesDetectedError when the whole video comes up empty.
 */
export function extractTracks(video: Y4mVideo, config: ExtractorConfig): TrackRow[] {
  const detector: FaceDetector = createDetector(config.detector);
  const rows: TrackRow[] = [];
  for (let f = 0; f < video.frames.length; f++) {
    const frame: GrayFrame = { data: video.frames[f], width: video.width, height: video.height };
    const best = bestCandidate(detector.detect(frame));
    if (best) {
      rows.push({ frameIdx: f, x: best.x, y: best.y, w: best.w, h: best.h });
    }
  }
  if (rows.length === 0) {
    throw new NoFacesDetectedError("no face detected on any frame");
  }
  return rows;
}

/** Evenly spaced frame targets over [0, frameCount-1], round half up. */
export function evenFrameTargets(frameCount: number, count: number): number[] {
  if (count === 1) return [0];
  const targets: number[] = [];
  for (let i = 0; i < count; i++) {
    const t = Math.floor((i * (frameCount - 1)) / (count - 1) + 0.5);
    if (targets.length === 0 || targets[targets.length - 1] !== t) {
      targets.push(t);
    }
  }
  return targets;
}

function cropFrame(frame: GrayFrame, box: TrackRow): GrayFrame {
  const x0 = Math.max(0, Math.floor(box.x));
  const y0 = Math.max(0, Math.floor(box.y));
  const x1 = Math.min(frame.width, Math.ceil(box.x + box.w));
  const y1 = Math.min(frame.height, Math.ceil(box.y + box.h));
  const w = Math.max(0, x1 - x0);
  const h = Math.max(0, y1 - y0);
  const data = new Uint8Array(w * h);
  for (let row = 0; row < h; row++) {
    const src = (y0 + row) * frame.width + x0;
    data.set(frame.data.subarray(src, src + w), row * w);
  }
  return { data, width: w, height: h };
}

/**
 * Estimate ages on face crops at the evenly spaced frame targets that the
 * downstream age aggregation samples. Targets whose frame has no detection
 * in the tracks rows are skipped, so the output has at most
 * AGE_SAMPLE_COUNT rows.
 */
export function extractAges(
  video: Y4mVideo,
  trackRows: TrackRow[],
  config: ExtractorConfig,
): AgeRow[] {
  const estimator: AgeEstimator = createAgeEstimator(config.age);
  const byFrame = new Map(trackRows.map((r) => [r.frameIdx, r]));
  const rows: AgeRow[] = [];
  for (const target of evenFrameTargets(video.frameCount, AGE_SAMPLE_COUNT)) {
    const box = byFrame.get(target);
    if (!box) continue;
    const frame: GrayFrame = {
      data: video.frames[target],
      width: video.width,
      height: video.height,
    };
    rows.push({ frameIdx: target, age: estimator.estimate(cropFrame(frame, box)) });
  }
  return rows;
}

export function tracksCsv(
  videoId: string,
  rows: TrackRow[],
  frameCount: number,
  fps: number,
): string {
  assertValidVideoId(videoId);
  const lines = [TRACKS_HEADER];
  for (const r of rows) {
    lines.push(`${videoId},${r.frameIdx},${frameCount},${fps},${r.x},${r.y},${r.w},${r.h}`);
  }
  return lines.join("\n") + "\n";
}

export function agesCsv(videoId: string, rows: AgeRow[]): string {
  assertValidVideoId(videoId);
  const lines = [AGES_HEADER];
  for (const r of rows) {
    lines.push(`${videoId},${r.frameIdx},${r.age}`);
  }
  return lines.join("\n") + "\n";
}

/** Parse a tracks CSV back into rows for one video (extract-ages input). */
export function parseTracksCsv(text: string, videoId: string): TrackRow[] {
  const lines = text.split("\n").filter((l) => l.length > 0);
  if (lines[0] !== TRACKS_HEADER) {
    throw new Error(`tracks file has unexpected header: ${lines[0]}`);
  }
  const rows: TrackRow[] = [];
  for (const line of lines.slice(1)) {
    const fields = line.split(",");
    if (fields.length !== 8) {
      throw new Error(`tracks row has ${fields.length} fields, expected 8`);
    }
    if (fields[0] !== videoId) continue;
    rows.push({
      frameIdx: parseInt(fields[1], 10),
      x: parseFloat(fields[4]),
      y: parseFloat(fields[5]),
      w: parseFloat(fields[6]),
      h: parseFloat(fields[7]),
    });
  }
  return rows;
}

/** Write atomically: temp file in the same directory, then rename. */
export function writeFileAtomic(filePath: string, content: string): void {
  const dir = path.dirname(filePath);
  const tmp = path.join(dir, `.${path.basename(filePath)}.tmp-${process.pid}`);
  fs.writeFileSync(tmp, content, "utf-8");
  fs.renameSync(tmp, filePath);
}

export function videoIdFromPath(videoPath: string): string {
  const base = path.basename(videoPath);
  const dot = base.lastIndexOf(".");
  return dot > 0 ? base.slice(0, dot) : base;
}
