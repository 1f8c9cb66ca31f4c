#include "adapfl/grid.hpp"

#include <cmath>
#include <string>

#include "adapfl/errors.hpp"

namespace adapfl {

std::string_view zone_name(ZoneId zone) {
  switch (zone) {
    case ZoneId::zone1: return "zone1";
    case ZoneId::zone2: return "zone2";
    case ZoneId::zone3: return "zone3";
    case ZoneId::zone4: return "zone4";
    case ZoneId::central: return "central";
  }
  return "unknown";
}

ZoneId zone_from_name(std::string_view name) {
  for (ZoneId zone : kAllZones) {
    if (name == zone_name(zone)) return zone;
  }
  throw ConfigError("unknown zone name: " + std::string(name));
}

VilField::VilField(int width_, int height_, float pixel_size_km_)
    : width(width_), height(height_), pixel_size_km(pixel_size_km_) {
  if (width <= 0 || height <= 0) {
    throw DataError("field dimensions must be positive");
  }
  values.assign(pixel_count(), 0.0f);
}

void VilField::validate(std::string_view context) const {
  if (width <= 0 || height <= 0) {
    throw DataError(std::string(context) + ": dimensions must be positive");
  }
  if (values.size() != pixel_count()) {
    throw DataError(std::string(context) + ": value count does not match dimensions");
  }
  for (float v : values) {
    if (!std::isfinite(v) || v < 0.0f) {
      throw DataError(std::string(context) + ": values must be finite and non-negative");
    }
  }
}

VilField crop_center(const VilField& field, int size) {
  if (size <= 0) {
    throw DataError("crop size must be positive");
  }
  if (size > field.width || size > field.height) {
    throw DataError("crop size exceeds field dimensions");
  }
  const int top = (field.height - size) / 2;
  const int left = (field.width - size) / 2;
  VilField out(size, size, field.pixel_size_km);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      out.at(r, c) = field.at(top + r, left + c);
    }
  }
  return out;
}

std::array<VilField, 4> split_quadrants(const VilField& field) {
  if (field.width % 2 != 0 || field.height % 2 != 0) {
    throw DataError("quadrant split requires even field dimensions");
  }
  const int hh = field.height / 2;
  const int hw = field.width / 2;
  std::array<VilField, 4> out = {
      VilField(hw, hh, field.pixel_size_km), VilField(hw, hh, field.pixel_size_km),
      VilField(hw, hh, field.pixel_size_km), VilField(hw, hh, field.pixel_size_km)};
  for (int r = 0; r < hh; ++r) {
    for (int c = 0; c < hw; ++c) {
      out[0].at(r, c) = field.at(r, c);
      out[1].at(r, c) = field.at(r, c + hw);
      out[2].at(r, c) = field.at(r + hh, c);
      out[3].at(r, c) = field.at(r + hh, c + hw);
    }
  }
  return out;
}

double pixel_sum(const VilField& field) {
  double sum = 0.0;
  for (float v : field.values) sum += v;
  return sum;
}

double mean_vil(const VilField& field) {
  if (field.pixel_count() == 0) {
    throw DataError("mean of an empty field is undefined");
  }
  return pixel_sum(field) / static_cast<double>(field.pixel_count());
}

double accumulated_vil(const VilField& field) {
  if (field.pixel_count() == 0) {
    throw DataError("accumulated VIL of an empty field is undefined");
  }
  const double area_km2 = static_cast<double>(field.width) * field.pixel_size_km *
                          static_cast<double>(field.height) * field.pixel_size_km;
  return pixel_sum(field) / area_km2;
}

}  // namespace adapfl
