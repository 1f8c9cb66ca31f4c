#include "adapfl/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "adapfl/rng.hpp"

namespace adapfl {

namespace {

struct ZoneClimate {
  double vx, vy;         // px/frame
  double intensity;      // multiplier on cell peaks
};

struct RainCell {
  double x, y;           // center, px
  double vx, vy;         // px/frame
  double sigma;          // px
  double peak;           // kg/m^2 at mid-life
  int age = 0;
  int lifetime;          // frames
  std::uint64_t jitter_seed;
};

// Quadrant climatologies: distinct headings and intensity scales so the
// zones differ in both motion and rainfall amount.
ZoneClimate zone_climate(const SyntheticConfig& cfg, int quadrant) {
  static constexpr double kSpeedScale[4] = {1.0, 0.75, 1.15, 0.55};
  static constexpr double kIntensityScale[4] = {1.25, 0.85, 1.05, 0.60};
  // Heading rotated by a quadrant-specific angle.
  static constexpr double kAngle[4] = {0.0, 1.1, -0.8, 2.3};
  const double c = std::cos(kAngle[quadrant]);
  const double s = std::sin(kAngle[quadrant]);
  ZoneClimate z;
  z.vx = kSpeedScale[quadrant] * (c * cfg.advection_vx - s * cfg.advection_vy);
  z.vy = kSpeedScale[quadrant] * (s * cfg.advection_vx + c * cfg.advection_vy);
  z.intensity = kIntensityScale[quadrant];
  return z;
}

int quadrant_of(double x, double y, int frame_size) {
  const double half = frame_size / 2.0;
  const int col = x < half ? 0 : 1;
  const int row = y < half ? 0 : 1;
  return row * 2 + col;
}

// Smooth grow-then-decay amplitude profile, nonzero over a cell's life.
double lifecycle(int age, int lifetime) {
  const double a = (age + 0.5) / static_cast<double>(lifetime);
  return std::sin(3.14159265358979323846 * std::clamp(a, 0.0, 1.0));
}

RainCell spawn_cell(const SyntheticConfig& cfg, Rng& rng, std::uint64_t cell_id) {
  RainCell cell;
  cell.x = rng.uniform(0.0, cfg.frame_size);
  cell.y = rng.uniform(0.0, cfg.frame_size);
  const ZoneClimate climate =
      zone_climate(cfg, quadrant_of(cell.x, cell.y, cfg.frame_size));
  cell.vx = climate.vx * rng.uniform(0.85, 1.15);
  cell.vy = climate.vy * rng.uniform(0.85, 1.15);
  cell.sigma = rng.uniform(cfg.blob_sigma_min, cfg.blob_sigma_max);
  cell.peak = climate.intensity *
              rng.uniform(cfg.blob_intensity_min, cfg.blob_intensity_max);
  cell.lifetime = 10 + static_cast<int>(rng.below(16));
  cell.jitter_seed = Rng::derive(cfg.seed, {0x11, cell_id});
  return cell;
}

void rasterize(const RainCell& cell, double amplitude, VilField& frame) {
  if (amplitude <= 0.0) return;
  const double reach = 3.5 * cell.sigma;
  const int r0 = std::max(0, static_cast<int>(std::floor(cell.y - reach)));
  const int r1 = std::min(frame.height - 1, static_cast<int>(std::ceil(cell.y + reach)));
  const int c0 = std::max(0, static_cast<int>(std::floor(cell.x - reach)));
  const int c1 = std::min(frame.width - 1, static_cast<int>(std::ceil(cell.x + reach)));
  const double inv2s2 = 1.0 / (2.0 * cell.sigma * cell.sigma);
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      const double dx = c - cell.x;
      const double dy = r - cell.y;
      frame.at(r, c) += static_cast<float>(amplitude * std::exp(-(dx * dx + dy * dy) * inv2s2));
    }
  }
}

}  // namespace

void SyntheticConfig::validate() const {
  if (n_frames < 0) throw ConfigError("n_frames must be non-negative");
  if (frame_size <= 0 || frame_size % 2 != 0) {
    throw ConfigError("frame_size must be positive and even");
  }
  if (n_blobs_mean < 0) throw ConfigError("n_blobs_mean must be non-negative");
  if (blob_intensity_min < 0 || blob_intensity_max < blob_intensity_min) {
    throw ConfigError("blob intensity range must be ordered and non-negative");
  }
  if (blob_sigma_min <= 0 || blob_sigma_max < blob_sigma_min) {
    throw ConfigError("blob sigma range must be ordered and positive");
  }
  for (double p : {birth_rate, death_rate, dry_fraction}) {
    if (p < 0.0 || p > 1.0) throw ConfigError("probabilities must lie in [0, 1]");
  }
  if (frame_interval_s <= 0) throw ConfigError("frame interval must be positive");
}

FrameSeries generate_synthetic_sequence(const SyntheticConfig& cfg) {
  cfg.validate();

  Rng episodes(Rng::derive(cfg.seed, {0x01}));
  Rng births(Rng::derive(cfg.seed, {0x02}));

  // Two-state wet/dry chain with stationary dry probability dry_fraction.
  const double switch_rate = 0.08;
  const double p_wet_to_dry = switch_rate * cfg.dry_fraction;
  const double p_dry_to_wet = switch_rate * (1.0 - cfg.dry_fraction);
  bool dry = episodes.uniform01() < cfg.dry_fraction;

  FrameSeries series;
  series.frames.reserve(static_cast<std::size_t>(cfg.n_frames));
  series.timestamps.reserve(static_cast<std::size_t>(cfg.n_frames));

  std::vector<RainCell> cells;
  std::uint64_t next_cell_id = 0;

  for (int t = 0; t < cfg.n_frames; ++t) {
    const bool was_dry = dry;
    if (dry) {
      if (episodes.uniform01() < p_dry_to_wet) dry = false;
    } else {
      if (episodes.uniform01() < p_wet_to_dry) dry = true;
    }

    VilField frame(cfg.frame_size, cfg.frame_size, 1.0f);
    if (was_dry) {
      cells.clear();
    } else {
      if (cells.empty()) {
        const int n = episodes.poisson(cfg.n_blobs_mean);
        for (int i = 0; i < n; ++i) {
          RainCell cell = spawn_cell(cfg, births, next_cell_id++);
          // Episode-start cells begin mid-life so rain is visible at once.
          cell.age = static_cast<int>(births.below(cell.lifetime / 2 + 1));
          cells.push_back(cell);
        }
      }
      if (births.uniform01() < cfg.birth_rate) {
        cells.push_back(spawn_cell(cfg, births, next_cell_id++));
      }

      for (const RainCell& cell : cells) {
        Rng jitter(Rng::derive(cell.jitter_seed, {static_cast<std::uint64_t>(cell.age)}));
        const double pulse = 1.0 + 0.25 * jitter.uniform(-1.0, 1.0);
        const double a = cell.peak * lifecycle(cell.age, cell.lifetime) * pulse;
        rasterize(cell, a, frame);
      }

      for (RainCell& cell : cells) {
        cell.x += cell.vx;
        cell.y += cell.vy;
        ++cell.age;
      }
      std::erase_if(cells, [&](const RainCell& cell) {
        const bool out = cell.x < -4 * cell.sigma || cell.y < -4 * cell.sigma ||
                         cell.x > cfg.frame_size + 4 * cell.sigma ||
                         cell.y > cfg.frame_size + 4 * cell.sigma;
        return out || cell.age >= cell.lifetime ||
               births.uniform01() < cfg.death_rate;
      });
    }

    for (float& v : frame.values) v = std::max(v, 0.0f);
    series.frames.push_back(std::move(frame));
    series.timestamps.push_back(cfg.start_timestamp +
                                static_cast<std::int64_t>(t) * cfg.frame_interval_s);
  }
  return series;
}

}  // namespace adapfl
