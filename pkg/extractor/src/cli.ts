#!/usr/bin/env node
/**
 * CLI: turn a video file into the hrbaselines tracks/ages CSV formats.
 *
 *   hrb-extract make-sample --out clip.y4m
 *   hrb-extract extract --video clip.y4m --out-tracks tracks.csv --out-ages ages.csv
 *   hrb-extract extract-tracks --video clip.y4m --out tracks.csv
 *   hrb-extract extract-ages --video clip.y4m --tracks tracks.csv --out ages.csv
 */

import * as fs from "fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { loadConfig } from "./config";
import {
  agesCsv,
  extractAges,
  extractTracks,
  parseTracksCsv,
  tracksCsv,
  videoIdFromPath,
  writeFileAtomic,
} from "./extract";
import { DEFAULT_SAMPLE, writeSampleClip } from "./sample";
import { readY4m } from "./y4m";

function resolveVideoId(argv: { video: string; videoId?: string }): string {
  return argv.videoId ?? videoIdFromPath(argv.video);
}

async function main(): Promise<number> {
  let failed = false;
  await yargs(hideBin(process.argv))
    .scriptName("hrb-extract")
    .command(
      "make-sample",
      "write a deterministic synthetic sample clip (.y4m)",
      (y) =>
        y
          .option("out", { type: "string", demandOption: true })
          .option("frames", { type: "number", default: DEFAULT_SAMPLE.frames })
          .option("fps", { type: "number", default: DEFAULT_SAMPLE.fps })
          .option("width", { type: "number", default: DEFAULT_SAMPLE.width })
          .option("height", { type: "number", default: DEFAULT_SAMPLE.height }),
      (argv) => {
        writeSampleClip(argv.out, {
          width: argv.width,
          height: argv.height,
          frames: argv.frames,
          fps: argv.fps,
        });
        console.log(`wrote ${argv.frames}-frame sample clip to ${argv.out}`);
      },
    )
    .command(
      "extract-tracks",
      "detect faces per frame and write a tracks CSV",
      (y) =>
        y
          .option("video", { type: "string", demandOption: true })
          .option("out", { type: "string", demandOption: true })
          .option("config", { type: "string" })
          .option("video-id", { type: "string" }),
      (argv) => {
        const video = readY4m(argv.video);
        const config = loadConfig(argv.config);
        const rows = extractTracks(video, config);
        const videoId = resolveVideoId(argv);
        writeFileAtomic(argv.out, tracksCsv(videoId, rows, video.frameCount, video.fps));
        console.log(`wrote ${rows.length} track rows for ${videoId} to ${argv.out}`);
      },
    )
    .command(
      "extract-ages",
      "estimate ages at evenly spaced frames and write an ages CSV",
      (y) =>
        y
          .option("video", { type: "string", demandOption: true })
          .option("tracks", { type: "string", demandOption: true })
          .option("out", { type: "string", demandOption: true })
          .option("config", { type: "string" })
          .option("video-id", { type: "string" }),
      (argv) => {
        const video = readY4m(argv.video);
        const config = loadConfig(argv.config);
        const videoId = resolveVideoId(argv);
        const trackRows = parseTracksCsv(fs.readFileSync(argv.tracks, "utf-8"), videoId);
        const rows = extractAges(video, trackRows, config);
        writeFileAtomic(argv.out, agesCsv(videoId, rows));
        console.log(`wrote ${rows.length} age rows for ${videoId} to ${argv.out}`);
      },
    )
    .command(
      "extract",
      "run detection and age estimation in one pass",
      (y) =>
        y
          .option("video", { type: "string", demandOption: true })
          .option("out-tracks", { type: "string", demandOption: true })
          .option("out-ages", { type: "string", demandOption: true })
          .option("config", { type: "string" })
          .option("video-id", { type: "string" }),
      (argv) => {
        const video = readY4m(argv.video);
        const config = loadConfig(argv.config);
        const videoId = resolveVideoId(argv);
        const trackRows = extractTracks(video, config);
        const ageRows = extractAges(video, trackRows, config);
        writeFileAtomic(argv.outTracks, tracksCsv(videoId, trackRows, video.frameCount, video.fps));
        writeFileAtomic(argv.outAges, agesCsv(videoId, ageRows));
        console.log(
          `wrote ${trackRows.length} track rows and ${ageRows.length} age rows for ${videoId}`,
        );
      },
    )
    .demandCommand(1)
    .strict()
    .fail((msg, err) => {
      console.error(`error: ${err ? err.message : msg}`);
      failed = true;
    })
    .parseAsync();
  return failed ? 1 : 0;
}

main().then(
  (code) => process.exit(code),
  (err) => {
    console.error(`error: ${(err as Error).message}`);
    process.exit(1);
  },
);
