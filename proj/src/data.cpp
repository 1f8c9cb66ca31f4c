#include "adapfl/data.hpp"

#include <algorithm>
#include <cmath>

namespace adapfl {

namespace {

void check_series(const FrameSeries& series) {
  if (series.frames.size() != series.timestamps.size()) {
    throw DataError("frame/timestamp count mismatch");
  }
  if (series.size() < 2) return;
  const std::int64_t step = series.timestamps[1] - series.timestamps[0];
  if (step <= 0) {
    throw DataError("frame timestamps must be strictly increasing");
  }
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series.timestamps[i] - series.timestamps[i - 1] != step) {
      throw DataError("frame timestamps must be uniformly spaced");
    }
  }
}

bool all_inputs_blank(const Sample& sample, double eps) {
  for (const VilField& input : sample.inputs) {
    if (pixel_sum(input) > eps) return false;
  }
  return true;
}

}  // namespace

std::vector<Sample> make_samples(const FrameSeries& series, int window) {
  if (window != 3) {
    throw ConfigError("samples carry exactly three predictor frames; window must be 3");
  }
  check_series(series);
  std::vector<Sample> samples;
  if (series.size() <= static_cast<std::size_t>(window)) return samples;
  for (std::size_t i = 0; i + window < series.size(); ++i) {
    Sample s;
    for (int j = 0; j < window; ++j) {
      if (!series.frames[i + j].same_shape(series.frames[i + window])) {
        throw DataError("all frames in a sample must share dimensions");
      }
      s.inputs[j] = series.frames[i + j];
    }
    s.target = series.frames[i + window];
    s.timestamp = series.timestamps[i + window];
    samples.push_back(std::move(s));
  }
  return samples;
}

std::vector<Sample> filter_blank(std::vector<Sample> samples, double eps) {
  if (eps < 0.0) {
    throw ConfigError("blank threshold must be non-negative");
  }
  std::erase_if(samples, [eps](const Sample& s) { return all_inputs_blank(s, eps); });
  return samples;
}

std::vector<Fold> timeseries_folds(std::size_t n, int k) {
  if (k < 2) {
    throw ConfigError("cross validation needs at least 2 folds");
  }
  if (n < static_cast<std::size_t>(k) + 1) {
    throw DataError("not enough samples for the requested fold count");
  }
  const std::size_t m = n / (static_cast<std::size_t>(k) + 1);
  const std::size_t remainder = n - m * (static_cast<std::size_t>(k) + 1);
  std::vector<Fold> folds;
  folds.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    Fold fold;
    fold.train_end = remainder + static_cast<std::size_t>(i) * m;
    fold.val_begin = fold.train_end;
    fold.val_end = fold.val_begin + m;
    folds.push_back(fold);
  }
  return folds;
}

std::map<ZoneId, std::vector<VilField>> partition_zones(
    const std::vector<VilField>& frames) {
  std::map<ZoneId, std::vector<VilField>> zones;
  for (ZoneId zone : kAllZones) zones[zone] = {};
  if (frames.empty()) return zones;

  const VilField& first = frames.front();
  for (const VilField& frame : frames) {
    if (!frame.same_shape(first)) {
      throw DataError("all frames must share dimensions");
    }
    auto quadrants = split_quadrants(frame);
    VilField central = crop_center(frame, frame.width / 2);
    for (int q = 0; q < 4; ++q) {
      zones[kQuadrantZones[q]].push_back(std::move(quadrants[q]));
    }
    zones[ZoneId::central].push_back(std::move(central));
  }
  return zones;
}

std::map<ZoneId, ClientDataset> build_client_datasets(const FrameSeries& series,
                                                      double train_fraction,
                                                      double blank_eps) {
  check_series(series);
  if (series.empty()) {
    throw DataError("cannot build datasets from an empty frame sequence");
  }
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
    throw ConfigError("train fraction must lie strictly between 0 and 1");
  }
  const auto split_frame = static_cast<std::size_t>(
      std::floor(static_cast<double>(series.size()) * train_fraction));

  auto zone_frames = partition_zones(series.frames);
  std::map<ZoneId, ClientDataset> datasets;
  for (ZoneId zone : kAllZones) {
    FrameSeries zone_series{std::move(zone_frames[zone]), series.timestamps};
    auto samples = make_samples(zone_series, 3);

    ClientDataset ds;
    ds.zone = zone;
    std::vector<Sample> train, test;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      // Sample i targets frame i + 3; the 80/20 boundary lives on the
      // frame timeline so it is identical across zones.
      if (i + 3 < split_frame) {
        train.push_back(std::move(samples[i]));
      } else {
        test.push_back(std::move(samples[i]));
      }
    }
    ds.train = filter_blank(std::move(train), blank_eps);
    ds.test = filter_blank(std::move(test), blank_eps);
    datasets[zone] = std::move(ds);
  }
  return datasets;
}

}  // namespace adapfl
