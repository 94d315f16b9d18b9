/**
 * Deterministic synthetic sample clip: a bright face-like ellipse bobbing
 * vertically over a dark background, written as monochrome YUV4MPEG2.
 * Useful for demos and for testing the extraction pipeline without
 * shipping real video.
 */

import * as fs from "fs";

export interface SampleOptions {
  width: number;
  height: number;
  frames: number;
  fps: number;
}

export const DEFAULT_SAMPLE: SampleOptions = {
  width: 128,
  height: 96,
  frames: 300,
  fps: 30,
};

const BACKGROUND = 25;
const FACE_LUMA = 210;
const RADIUS_X = 20;
const RADIUS_Y = 26;
const BOB_AMPLITUDE = 6;
const BOB_PERIOD = 60; // frames per oscillation

export function renderSampleClip(opts: SampleOptions = DEFAULT_SAMPLE): Buffer {
  const { width, height, frames, fps } = opts;
  const header = `YUV4MPEG2 W${width} H${height} F${fps}:1 Ip A1:1 Cmono\n`;
  const chunks: Buffer[] = [Buffer.from(header, "latin1")];
  const cx = width / 2;
  const baseCy = height / 2 - 4;
  for (let f = 0; f < frames; f++) {
    const cy = baseCy + BOB_AMPLITUDE * Math.sin((2 * Math.PI * f) / BOB_PERIOD);
    const plane = Buffer.alloc(width * height, BACKGROUND);
    for (let y = 0; y < height; y++) {
      for (let x = 0; x < width; x++) {
        const dx = (x - cx) / RADIUS_X;
        const dy = (y - cy) / RADIUS_Y;
        if (dx * dx + dy * dy <= 1) {
          plane[y * width + x] = FACE_LUMA;
        }
      }
    }
    chunks.push(Buffer.from("FRAME\n", "latin1"), plane);
  }
  return Buffer.concat(chunks);
}

export function writeSampleClip(path: string, opts: SampleOptions = DEFAULT_SAMPLE): void {
  fs.writeFileSync(path, renderSampleClip(opts));
}

/** An empty clip (background only) for exercising the no-faces path. */
export function renderBlankClip(opts: SampleOptions = DEFAULT_SAMPLE): Buffer {
  const { width, height, frames, fps } = opts;
  const header = `YUV4MPEG2 W${width} H${height} F${fps}:1 Ip A1:1 Cmono\n`;
  const chunks: Buffer[] = [Buffer.from(header, "latin1")];
  for (let f = 0; f < frames; f++) {
    chunks.push(Buffer.from("FRAME\n", "latin1"), Buffer.alloc(width * height, BACKGROUND));
  }
  return Buffer.concat(chunks);
}
