#pragma once

#include <cstdint>

#include "adapfl/data.hpp"

namespace adapfl {

// Synthetic rain sequences: Gaussian cells with a grow/decay lifecycle
// advect across the frame. Each quadrant carries its own climatology
// (velocity direction/scale and intensity scale derived from the base
// advection velocity), which makes the four zone datasets non-iid.
// Dry episodes produce exactly-blank frames.
struct SyntheticConfig {
  int n_frames = 2000;
  int frame_size = 100;
  double n_blobs_mean = 3.0;          // expected concurrent cells while wet
  double blob_intensity_min = 0.6;    // kg/m^2 peak at mid-life
  double blob_intensity_max = 2.5;
  double blob_sigma_min = 3.0;        // px
  double blob_sigma_max = 7.0;
  double advection_vx = 1.3;          // base px/frame, modulated per zone
  double advection_vy = 0.5;
  double birth_rate = 0.12;           // per-frame cell birth probability
  double death_rate = 0.04;           // per-frame per-cell death probability
  double dry_fraction = 0.15;         // target fraction of blank frames
  std::uint64_t seed = 0;
  std::int64_t start_timestamp = 1459468800;  // 2016-04-01T00:00:00Z
  int frame_interval_s = 300;

  void validate() const;
};

FrameSeries generate_synthetic_sequence(const SyntheticConfig& config);

}  // namespace adapfl
