#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "adapfl/data.hpp"

namespace adapfl {

// Frame files: 16-byte header
//   "VILF" | version u16 LE | width u16 LE | height u16 LE |
//   pixel_size_km f32 LE | 2 reserved zero bytes
// followed by width*height f32 LE values in row-major order.
// A directory manifest `frames.idx` lists one `<ISO-8601>\t<filename>`
// line per frame, sorted ascending by timestamp.

inline constexpr std::uint16_t kFrameFormatVersion = 1;
inline constexpr const char* kManifestName = "frames.idx";

void write_frames(const FrameSeries& series, const std::filesystem::path& directory);

// Returns an empty series (with a warning on stderr) when the directory
// holds no manifest; malformed files raise DataError naming the file.
FrameSeries read_frames(const std::filesystem::path& directory);

std::string format_iso8601(std::int64_t unix_seconds);
std::int64_t parse_iso8601(const std::string& text);

}  // namespace adapfl
