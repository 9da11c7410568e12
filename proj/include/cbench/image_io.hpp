// Copyright 2026 The corruption-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cbench/image.hpp"

namespace cbench {

enum class ImageFormat { png, jpeg };

ImageFormat parse_image_format(const std::string& name);
std::string to_string(ImageFormat format);
/// ".png" or ".jpg".
std::string file_extension(ImageFormat format);

/// Decodes a PNG or JPEG file. Grayscale sources are replicated to three
/// channels; alpha is composited onto black.
///
/// Throws IoError when the file cannot be read and FormatError when the bytes
/// are not a decodable PNG/JPEG (this includes empty files).
ImageBuffer load_image(const std::filesystem::path& path);
ImageBuffer decode_image(std::span<const std::uint8_t> bytes);

/// 8-bit encode. quality (1..100) only affects JPEG but is validated for both.
std::vector<std::uint8_t> encode_image(const ImageBuffer& img, ImageFormat format, int quality = 85);
void save_image(const ImageBuffer& img, const std::filesystem::path& path, ImageFormat format,
                int quality = 85);

/// JPEG encode/decode round trip in memory.
ImageBuffer jpeg_roundtrip(const ImageBuffer& img, int quality);

/// Codec library identities, recorded in manifests because JPEG bytes are
/// only reproducible for a given codec build.
std::string codec_identity();

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace cbench
