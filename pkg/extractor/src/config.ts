/**
 * Extractor configuration: which backends to run and their thresholds.
 * Loaded from JSON; every field is optional and falls back to the
 * reference backends.
 */

import * as fs from "fs";

import { AgeConfig, DetectorConfig } from "./backends";

export interface ExtractorConfig {
  detector: DetectorConfig;
  age: AgeConfig;
}

export const DEFAULT_CONFIG: ExtractorConfig = {
  detector: { backend: "luma-blob", threshold: 128, minArea: 50 },
  age: { backend: "luma-linear", minAge: 15, maxAge: 40 },
};

function ensureNumber(value: unknown, name: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    throw new Error(`config field ${name} must be a finite number`);
  }
  return value;
}

export function mergeConfig(raw: unknown): ExtractorConfig {
  if (raw === null || typeof raw !== "object") {
    throw new Error("config must be a JSON object");
  }
  const doc = raw as Record<string, Record<string, unknown>>;
  const det = { ...DEFAULT_CONFIG.detector, ...(doc.detector ?? {}) } as DetectorConfig;
  const age = { ...DEFAULT_CONFIG.age, ...(doc.age ?? {}) } as AgeConfig;
  ensureNumber(det.threshold, "detector.threshold");
  ensureNumber(det.minArea, "detector.minArea");
  ensureNumber(age.minAge, "age.minAge");
  ensureNumber(age.maxAge, "age.maxAge");
  if (age.minAge >= age.maxAge) {
    throw new Error("config requires age.minAge < age.maxAge");
  }
  if (typeof det.backend !== "string" || typeof age.backend !== "string") {
    throw new Error("backend names must be strings");
  }
  return { detector: det, age };
}

export function loadConfig(path?: string): ExtractorConfig {
  if (!path) return DEFAULT_CONFIG;
  const text = fs.readFileSync(path, "utf-8");
  return mergeConfig(JSON.parse(text));
}
