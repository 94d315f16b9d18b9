export {
  AgeEstimator,
  AgeConfig,
  DetectorConfig,
  FaceCandidate,
  FaceDetector,
  GrayFrame,
  createAgeEstimator,
  createDetector,
  registerAgeEstimator,
  registerDetector,
} from "./backends";
export { DEFAULT_CONFIG, ExtractorConfig, loadConfig, mergeConfig } from "./config";
export {
  AGE_SAMPLE_COUNT,
  AgeRow,
  NoFacesDetectedError,
  TrackRow,
  agesCsv,
  evenFrameTargets,
  extractAges,
  extractTracks,
  parseTracksCsv,
  tracksCsv,
  videoIdFromPath,
  writeFileAtomic,
} from "./extract";
export { DEFAULT_SAMPLE, SampleOptions, renderBlankClip, renderSampleClip, writeSampleClip } from "./sample";
export { UndecodableVideoError, Y4mVideo, parseY4m, readY4m } from "./y4m";
