#pragma once

#include <array>
#include <string_view>
#include <vector>

namespace adapfl {

// The five client zones: four quadrants of the parent frame plus the
// centered crop that overlaps one corner of each quadrant.
enum class ZoneId : int { zone1 = 0, zone2 = 1, zone3 = 2, zone4 = 3, central = 4 };

inline constexpr std::array<ZoneId, 5> kAllZones = {
    ZoneId::zone1, ZoneId::zone2, ZoneId::zone3, ZoneId::zone4, ZoneId::central};
inline constexpr std::array<ZoneId, 4> kQuadrantZones = {
    ZoneId::zone1, ZoneId::zone2, ZoneId::zone3, ZoneId::zone4};

std::string_view zone_name(ZoneId zone);
ZoneId zone_from_name(std::string_view name);

/// 2D grid of vertically integrated liquid (kg/m^2), row-major storage.
struct VilField {
  int width = 0;
  int height = 0;
  float pixel_size_km = 1.0f;
  std::vector<float> values;

  VilField() = default;
  VilField(int width, int height, float pixel_size_km = 1.0f);

  float& at(int row, int col) {
    return values[static_cast<std::size_t>(row) * width + col];
  }
  float at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * width + col];
  }

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * height;
  }
  bool same_shape(const VilField& other) const {
    return width == other.width && height == other.height;
  }

  // Checks the value invariants (finite, non-negative, size consistent).
  void validate(std::string_view context = "field") const;
};

// Centered size x size window. When the residue is odd, the extra
// row/column stays on the bottom/right side.
VilField crop_center(const VilField& field, int size);

// Quadrants in zone order: top-left, top-right, bottom-left, bottom-right.
// Requires even width and height.
std::array<VilField, 4> split_quadrants(const VilField& field);

double pixel_sum(const VilField& field);
double mean_vil(const VilField& field);

// Pixel sum divided by the covered surface (km^2).
double accumulated_vil(const VilField& field);

}  // namespace adapfl
