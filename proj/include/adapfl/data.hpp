#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "adapfl/errors.hpp"
#include "adapfl/grid.hpp"

namespace adapfl {

/// Three predictor frames plus the nowcast target one step later.
struct Sample {
  std::array<VilField, 3> inputs;  // time-ascending, uniform spacing
  VilField target;
  std::int64_t timestamp = 0;  // unix seconds of the target frame
};

// A time-ordered frame sequence with per-frame timestamps.
struct FrameSeries {
  std::vector<VilField> frames;
  std::vector<std::int64_t> timestamps;

  std::size_t size() const { return frames.size(); }
  bool empty() const { return frames.empty(); }
};

struct ClientDataset {
  ZoneId zone = ZoneId::zone1;
  std::vector<Sample> train;
  std::vector<Sample> test;
};

// One expanding-window cross-validation fold. Training indices are
// [0, train_end), validation indices [val_begin, val_end).
struct Fold {
  std::size_t train_end = 0;
  std::size_t val_begin = 0;
  std::size_t val_end = 0;
};

// Sliding-window sample construction: sample i predicts frame i+window
// from the preceding `window` frames. Requires strictly increasing,
// uniformly spaced timestamps.
std::vector<Sample> make_samples(const FrameSeries& series, int window = 3);

// Drops samples whose three inputs each have pixel sum <= eps. Target
// blankness is ignored.
std::vector<Sample> filter_blank(std::vector<Sample> samples, double eps = 0.0);

// First floor(n * train_fraction) items vs the rest, no shuffling.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> temporal_split(
    const std::vector<T>& items, double train_fraction) {
  if (items.empty()) {
    throw DataError("temporal split of an empty sequence");
  }
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
    throw ConfigError("train fraction must lie strictly between 0 and 1");
  }
  const auto n_train = static_cast<std::size_t>(
      std::floor(static_cast<double>(items.size()) * train_fraction));
  std::vector<T> train(items.begin(), items.begin() + n_train);
  std::vector<T> test(items.begin() + n_train, items.end());
  return {std::move(train), std::move(test)};
}

// Expanding-window folds with m = floor(n / (k + 1)); any remainder is
// prepended to the first fold's training window.
std::vector<Fold> timeseries_folds(std::size_t n, int k);

// Splits each 2D-even frame into the four quadrants plus the centered
// half-size crop, preserving frame order.
std::map<ZoneId, std::vector<VilField>> partition_zones(
    const std::vector<VilField>& frames);

// Full preprocessing for all five zones: partition, window, temporal
// split at the frame boundary, then blank-filter each split.
std::map<ZoneId, ClientDataset> build_client_datasets(const FrameSeries& series,
                                                      double train_fraction,
                                                      double blank_eps = 0.0);

}  // namespace adapfl
