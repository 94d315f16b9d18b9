/**
 * Minimal YUV4MPEG2 (.y4m) container reader.
 *
 * Only the luma plane is retained: every bundled backend works on
 * grayscale, and chroma planes are skipped over. Frame rate and frame
 * count come straight from the container, which is what the tracks
 * format wants repeated on every row.
 */

import * as fs from "fs";

export class UndecodableVideoError extends Error {}

export interface Y4mVideo {
  width: number;
  height: number;
  fps: number;
  frameCount: number;
  /** Luma planes, one Uint8Array of width*height bytes per frame. */
  frames: Uint8Array[];
}

const MAGIC = "YUV4MPEG2";

/** Bytes of chroma data following each luma plane, by colorspace tag. */
function chromaBytes(colorspace: string, ySize: number): number {
  if (colorspace === "mono") return 0;
  if (colorspace.startsWith("420")) return ySize / 2;
  if (colorspace.startsWith("422")) return ySize;
  if (colorspace.startsWith("444")) return ySize * 2;
  throw new UndecodableVideoError(`unsupported colorspace C${colorspace}`);
}

function readLine(buf: Buffer, start: number): { line: string; next: number } {
  const nl = buf.indexOf(0x0a, start);
  if (nl < 0) {
    throw new UndecodableVideoError("truncated stream: missing newline");
  }
  return { line: buf.toString("latin1", start, nl), next: nl + 1 };
}

export function parseY4m(buf: Buffer): Y4mVideo {
  const header = readLine(buf, 0);
  const tokens = header.line.split(" ");
  if (tokens[0] !== MAGIC) {
    throw new UndecodableVideoError("not a YUV4MPEG2 stream");
  }
  let width = 0;
  let height = 0;
  let fpsNum = 0;
  let fpsDen = 1;
  let colorspace = "420";
  for (const token of tokens.slice(1)) {
    const value = token.slice(1);
    switch (token[0]) {
      case "W":
        width = parseInt(value, 10);
        break;
      case "H":
        height = parseInt(value, 10);
        break;
      case "F": {
        const [num, den] = value.split(":");
        fpsNum = parseInt(num, 10);
        fpsDen = parseInt(den ?? "1", 10);
        break;
      }
      case "C":
        colorspace = value;
        break;
      default:
        break; // interlacing / aspect tokens are irrelevant here
    }
  }
  if (!(width > 0) || !(height > 0)) {
    throw new UndecodableVideoError(`bad dimensions W${width} H${height}`);
  }
  if (!(fpsNum > 0) || !(fpsDen > 0)) {
    throw new UndecodableVideoError("missing or bad frame rate token");
  }
  const ySize = width * height;
  const skip = chromaBytes(colorspace, ySize);

  const frames: Uint8Array[] = [];
  let pos = header.next;
  while (pos < buf.length) {
    const frameLine = readLine(buf, pos);
    if (!frameLine.line.startsWith("FRAME")) {
      throw new UndecodableVideoError(`expected FRAME marker at byte ${pos}`);
    }
    pos = frameLine.next;
    if (pos + ySize + skip > buf.length) {
      throw new UndecodableVideoError("truncated frame payload");
    }
    frames.push(Uint8Array.from(buf.subarray(pos, pos + ySize)));
    pos += ySize + skip;
  }
  if (frames.length === 0) {
    throw new UndecodableVideoError("stream contains no frames");
  }
  return { width, height, fps: fpsNum / fpsDen, frameCount: frames.length, frames };
}

export function readY4m(path: string): Y4mVideo {
  let buf: Buffer;
  try {
    buf = fs.readFileSync(path);
  } catch (err) {
    throw new UndecodableVideoError(`cannot read ${path}: ${(err as Error).message}`);
  }
  return parseY4m(buf);
}
