#include "adapfl/frame_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace adapfl {

namespace {

constexpr char kMagic[4] = {'V', 'I', 'L', 'F'};

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_f32(std::string& out, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
  }
}

std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

float get_f32(const unsigned char* p) {
  std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                       (static_cast<std::uint32_t>(p[1]) << 8) |
                       (static_cast<std::uint32_t>(p[2]) << 16) |
                       (static_cast<std::uint32_t>(p[3]) << 24);
  float v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yy + (m <= 2));
}

}  // namespace

std::string format_iso8601(std::int64_t unix_seconds) {
  std::int64_t days = unix_seconds / 86400;
  std::int64_t rem = unix_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  int y, m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                static_cast<int>(rem / 3600), static_cast<int>((rem / 60) % 60),
                static_cast<int>(rem % 60));
  return buf;
}

std::int64_t parse_iso8601(const std::string& text) {
  int y, mo, d, h, mi, s;
  char zone = '\0';
  if (std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d%c", &y, &mo, &d, &h, &mi, &s,
                  &zone) != 7 ||
      zone != 'Z' || mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 ||
      s > 60) {
    throw DataError("malformed ISO-8601 timestamp: " + text);
  }
  return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s;
}

void write_frames(const FrameSeries& series, const std::filesystem::path& directory) {
  if (series.frames.size() != series.timestamps.size()) {
    throw DataError("frame/timestamp count mismatch");
  }
  std::filesystem::create_directories(directory);

  std::string manifest;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const VilField& frame = series.frames[i];
    frame.validate("frame " + std::to_string(i));
    if (frame.width > 0xffff || frame.height > 0xffff) {
      throw DataError("frame dimensions exceed the file format limit");
    }

    char name[32];
    std::snprintf(name, sizeof(name), "frame_%06zu.vilf", i);

    std::string blob;
    blob.reserve(16 + frame.values.size() * 4);
    blob.append(kMagic, 4);
    put_u16(blob, kFrameFormatVersion);
    put_u16(blob, static_cast<std::uint16_t>(frame.width));
    put_u16(blob, static_cast<std::uint16_t>(frame.height));
    put_f32(blob, frame.pixel_size_km);
    blob.push_back('\0');
    blob.push_back('\0');
    for (float v : frame.values) put_f32(blob, v);

    std::ofstream out(directory / name, std::ios::binary | std::ios::trunc);
    if (!out.write(blob.data(), static_cast<std::streamsize>(blob.size()))) {
      throw DataError("failed to write " + (directory / name).string());
    }
    manifest += format_iso8601(series.timestamps[i]);
    manifest += '\t';
    manifest += name;
    manifest += '\n';
  }

  std::ofstream idx(directory / kManifestName, std::ios::trunc);
  if (!idx.write(manifest.data(), static_cast<std::streamsize>(manifest.size()))) {
    throw DataError("failed to write " + (directory / kManifestName).string());
  }
}

FrameSeries read_frames(const std::filesystem::path& directory) {
  FrameSeries series;
  const auto manifest_path = directory / kManifestName;
  if (!std::filesystem::exists(manifest_path)) {
    std::cerr << "warning: no " << kManifestName << " in " << directory.string()
              << ", returning no frames\n";
    return series;
  }

  std::ifstream idx(manifest_path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(idx, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(manifest_path.string() + ": line " + std::to_string(line_no) +
                      " is not '<timestamp>\\t<filename>'");
    }
    const std::int64_t ts = parse_iso8601(line.substr(0, tab));
    if (!series.timestamps.empty() && ts <= series.timestamps.back()) {
      throw DataError(manifest_path.string() + ": timestamps must be sorted ascending");
    }
    const std::string name = line.substr(tab + 1);
    const auto path = directory / name;

    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw DataError("missing frame file " + path.string());
    }
    std::string blob((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (blob.size() < 16) {
      throw DataError(path.string() + ": truncated header");
    }
    const auto* p = reinterpret_cast<const unsigned char*>(blob.data());
    if (std::memcmp(p, kMagic, 4) != 0) {
      throw DataError(path.string() + ": bad magic bytes");
    }
    const std::uint16_t version = get_u16(p + 4);
    if (version != kFrameFormatVersion) {
      throw DataError(path.string() + ": unsupported format version " +
                      std::to_string(version));
    }
    const int width = get_u16(p + 6);
    const int height = get_u16(p + 8);
    const float pixel_size = get_f32(p + 10);
    if (width == 0 || height == 0 || !std::isfinite(pixel_size) || pixel_size <= 0) {
      throw DataError(path.string() + ": invalid header fields");
    }
    const std::size_t expected = 16 + static_cast<std::size_t>(width) * height * 4;
    if (blob.size() != expected) {
      throw DataError(path.string() + ": truncated payload");
    }

    VilField frame(width, height, pixel_size);
    for (std::size_t i = 0; i < frame.values.size(); ++i) {
      frame.values[i] = get_f32(p + 16 + i * 4);
    }
    frame.validate(path.string());
    series.frames.push_back(std::move(frame));
    series.timestamps.push_back(ts);
  }
  return series;
}

}  // namespace adapfl
