/**
 * Pluggable model backends.
 *
 * The extractor never hardcodes a model: a face detector is anything that
 * maps a grayscale frame to candidate boxes with confidences, and an age
 * estimator anything that maps a face crop to years. The bundled
 * reference backends are deliberately simple, deterministic image-statistic
 * models that work on synthetic clips; CNN-based backends plug in behind
 * the same interfaces by registering a factory.
 */

export interface GrayFrame {
  data: Uint8Array;
  width: number;
  height: number;
}

export interface FaceCandidate {
  x: number;
  y: number;
  w: number;
  h: number;
  confidence: number;
}

export interface FaceDetector {
  detect(frame: GrayFrame): FaceCandidate[];
}

export interface AgeEstimator {
  /** Estimated age in years for one face crop. */
  estimate(crop: GrayFrame): number;
}

export interface DetectorConfig {
  backend: string;
  /** Luma threshold separating face pixels from background (luma-blob). */
  threshold: number;
  /** Components smaller than this many pixels are ignored (luma-blob). */
  minArea: number;
}

export interface AgeConfig {
  backend: string;
  minAge: number;
  maxAge: number;
}

/**
 * Reference detector: threshold the luma plane and report each connected
 * bright component as a candidate box. Confidence is the component's fill
 * fraction of its bounding box, so solid face-like blobs outrank speckle.
 */
class LumaBlobDetector implements FaceDetector {
  constructor(private readonly cfg: DetectorConfig) {}

  detect(frame: GrayFrame): FaceCandidate[] {
    const { data, width, height } = frame;
    const visited = new Uint8Array(width * height);
    const stack: number[] = [];
    const candidates: FaceCandidate[] = [];

    for (let start = 0; start < data.length; start++) {
      if (visited[start] || data[start] < this.cfg.threshold) continue;
      let minX = width;
      let maxX = -1;
      let minY = height;
      let maxY = -1;
      let count = 0;
      stack.push(start);
      visited[start] = 1;
      while (stack.length > 0) {
        const idx = stack.pop()!;
        const px = idx % width;
        const py = (idx - px) / width;
        count++;
        if (px < minX) minX = px;
        if (px > maxX) maxX = px;
        if (py < minY) minY = py;
        if (py > maxY) maxY = py;
        const neighbors = [idx - 1, idx + 1, idx - width, idx + width];
        for (const n of neighbors) {
          if (n < 0 || n >= data.length || visited[n] || data[n] < this.cfg.threshold) continue;
          const nx = n % width;
          if (Math.abs(nx - px) > 1) continue; // no row wrap-around
          visited[n] = 1;
          stack.push(n);
        }
      }
      if (count < this.cfg.minArea) continue;
      const w = maxX - minX + 1;
      const h = maxY - minY + 1;
      candidates.push({ x: minX, y: minY, w, h, confidence: count / (w * h) });
    }
    return candidates;
  }
}

/**
 * Reference estimator: map mean crop luma linearly onto the configured
 * age range. Stands in for an ordinal-classification age model, which
 * would plug in behind the same single-number interface.
 */
class LumaLinearAge implements AgeEstimator {
  constructor(private readonly cfg: AgeConfig) {}

  estimate(crop: GrayFrame): number {
    let sum = 0;
    for (const v of crop.data) sum += v;
    const mean = crop.data.length > 0 ? sum / crop.data.length : 0;
    const span = this.cfg.maxAge - this.cfg.minAge;
    const age = this.cfg.minAge + (mean / 255) * span;
    return Math.min(this.cfg.maxAge, Math.max(this.cfg.minAge, age));
  }
}

type DetectorFactory = (cfg: DetectorConfig) => FaceDetector;
type AgeFactory = (cfg: AgeConfig) => AgeEstimator;

const detectorRegistry = new Map<string, DetectorFactory>([
  ["luma-blob", (cfg) => new LumaBlobDetector(cfg)],
]);

const ageRegistry = new Map<string, AgeFactory>([
  ["luma-linear", (cfg) => new LumaLinearAge(cfg)],
]);

export function registerDetector(name: string, factory: DetectorFactory): void {
  detectorRegistry.set(name, factory);
}

export function registerAgeEstimator(name: string, factory: AgeFactory): void {
  ageRegistry.set(name, factory);
}

export function createDetector(cfg: DetectorConfig): FaceDetector {
  const factory = detectorRegistry.get(cfg.backend);
  if (!factory) {
    const known = [...detectorRegistry.keys()].join(", ");
    throw new Error(`unknown detector backend "${cfg.backend}" (known: ${known})`);
  }
  return factory(cfg);
}

export function createAgeEstimator(cfg: AgeConfig): AgeEstimator {
  const factory = ageRegistry.get(cfg.backend);
  if (!factory) {
    const known = [...ageRegistry.keys()].join(", ");
    throw new Error(`unknown age backend "${cfg.backend}" (known: ${known})`);
  }
  return factory(cfg);
}
