#pragma once

#include <cstdint>
#include <string>

#include "hexarep/report.hpp"

namespace hexarep::certify {

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr const char* kArtifactName = "hexarep";
inline constexpr const char* kArtifactVersion = "0.1.0";

struct Options {
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
};

struct TheoremRun {
  Certificate certificate;
  // wall times for the two halves; reported on stdout, never serialized,
  // so certificates stay byte-identical across runs
  double hex81_seconds = 0;
  double hex243_seconds = 0;
  double total_seconds = 0;
};

// Builds both hexagons and their representations from scratch and records
// every verification the toolkit can perform. Deterministic for a fixed
// seed.
TheoremRun run_theorem_certificate(const Options& opts = {});

}  // namespace hexarep::certify
