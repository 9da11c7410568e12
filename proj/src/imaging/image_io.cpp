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

#include "cbench/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>

#include <jpeglib.h>
#include <png.h>
#include <zlib.h>

#include "cbench/error.hpp"

namespace cbench {
namespace {

std::uint8_t quantize(float v) noexcept {
  const float c = v < 0.0f ? 0.0f : (v > 1.0f ? 1.0f : v);
  return static_cast<std::uint8_t>(c * 255.0f + 0.5f);
}

void validate_quality(int quality) {
  if (quality < 1 || quality > 100) {
    throw ParameterError("quality must be in 1..100, got " + std::to_string(quality));
  }
}

std::vector<std::uint8_t> to_rgb8(const ImageBuffer& img) {
  std::vector<std::uint8_t> out(img.size());
  auto src = img.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = quantize(src[i]);
  return out;
}

ImageBuffer from_rgb8(const std::uint8_t* rgb, int width, int height) {
  ImageBuffer img(width, height);
  auto dst = img.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = static_cast<float>(rgb[i]) / 255.0f;
  return img;
}

// libjpeg reports fatal errors through error_exit, which must not return.
// We longjmp back to the calling frame; the frames in between hold no C++
// objects with destructors.
struct JpegErrorManager {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

void jpeg_silence(j_common_ptr, int) {}

// Returns false and fills `message` on failure.
bool jpeg_decode_raw(const std::uint8_t* bytes, std::size_t size, std::vector<std::uint8_t>& rgb,
                     int& width, int& height, char* message) {
  jpeg_decompress_struct cinfo;
  JpegErrorManager jerr;
  cinfo.err = jpeg_std_error(&jerr.pub);
  jerr.pub.error_exit = jpeg_error_exit;
  jerr.pub.emit_message = jpeg_silence;
  if (setjmp(jerr.jump)) {
    std::strncpy(message, jerr.message, JMSG_LENGTH_MAX);
    jpeg_destroy_decompress(&cinfo);
    return false;
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes, static_cast<unsigned long>(size));
  jpeg_read_header(&cinfo, TRUE);
  if (cinfo.num_components == 1) {
    cinfo.out_color_space = JCS_GRAYSCALE;
  } else {
    cinfo.out_color_space = JCS_RGB;
  }
  jpeg_start_decompress(&cinfo);
  width = static_cast<int>(cinfo.output_width);
  height = static_cast<int>(cinfo.output_height);
  const int comps = cinfo.output_components;
  rgb.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3);
  std::vector<std::uint8_t>& out = rgb;
  std::uint8_t line[65536 * 3];
  while (cinfo.output_scanline < cinfo.output_height) {
    const std::size_t y = cinfo.output_scanline;
    JSAMPROW row = line;
    jpeg_read_scanlines(&cinfo, &row, 1);
    std::uint8_t* dst = out.data() + y * static_cast<std::size_t>(width) * 3;
    if (comps == 1) {
      for (int x = 0; x < width; ++x) dst[3 * x] = dst[3 * x + 1] = dst[3 * x + 2] = line[x];
    } else {
      std::memcpy(dst, line, static_cast<std::size_t>(width) * 3);
    }
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return true;
}

bool jpeg_encode_raw(const std::uint8_t* rgb, int width, int height, int quality,
                     unsigned char*& out, unsigned long& out_size, char* message) {
  jpeg_compress_struct cinfo;
  JpegErrorManager jerr;
  cinfo.err = jpeg_std_error(&jerr.pub);
  jerr.pub.error_exit = jpeg_error_exit;
  jerr.pub.emit_message = jpeg_silence;
  if (setjmp(jerr.jump)) {
    std::strncpy(message, jerr.message, JMSG_LENGTH_MAX);
    jpeg_destroy_compress(&cinfo);
    return false;
  }
  jpeg_create_compress(&cinfo);
  jpeg_mem_dest(&cinfo, &out, &out_size);
  cinfo.image_width = static_cast<JDIMENSION>(width);
  cinfo.image_height = static_cast<JDIMENSION>(height);
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  while (cinfo.next_scanline < cinfo.image_height) {
    auto* row = const_cast<JSAMPROW>(rgb + static_cast<std::size_t>(cinfo.next_scanline) *
                                               static_cast<std::size_t>(width) * 3);
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
  return true;
}

ImageBuffer decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw FormatError(std::string("PNG decode failed: ") + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> rgb(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, rgb.data(), 0, nullptr)) {
    std::string msg = image.message;
    png_image_free(&image);
    throw FormatError("PNG decode failed: " + msg);
  }
  return from_rgb8(rgb.data(), static_cast<int>(image.width), static_cast<int>(image.height));
}

ImageBuffer decode_jpeg(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> rgb;
  int width = 0;
  int height = 0;
  char message[JMSG_LENGTH_MAX] = {};
  if (!jpeg_decode_raw(bytes.data(), bytes.size(), rgb, width, height, message)) {
    throw FormatError(std::string("JPEG decode failed: ") + message);
  }
  if (width > 65536) throw FormatError("JPEG too wide");
  return from_rgb8(rgb.data(), width, height);
}

std::vector<std::uint8_t> encode_png(const ImageBuffer& img) {
  const auto rgb = to_rgb8(img);
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = PNG_FORMAT_RGB;
  image.flags = PNG_IMAGE_FLAG_FAST;
  png_alloc_size_t size = PNG_IMAGE_PNG_SIZE_MAX(image);
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, rgb.data(), 0, nullptr)) {
    throw FormatError(std::string("PNG encode failed: ") + image.message);
  }
  out.resize(size);
  return out;
}

std::vector<std::uint8_t> encode_jpeg(const ImageBuffer& img, int quality) {
  if (img.width() > 65536) throw ParameterError("image too wide for JPEG");
  const auto rgb = to_rgb8(img);
  unsigned char* buffer = nullptr;
  unsigned long size = 0;
  char message[JMSG_LENGTH_MAX] = {};
  const bool ok = jpeg_encode_raw(rgb.data(), img.width(), img.height(), quality, buffer, size,
                                  message);
  if (!ok) {
    std::free(buffer);
    throw FormatError(std::string("JPEG encode failed: ") + message);
  }
  std::vector<std::uint8_t> out(buffer, buffer + size);
  std::free(buffer);
  return out;
}

}  // namespace

ImageFormat parse_image_format(const std::string& name) {
  if (name == "png") return ImageFormat::png;
  if (name == "jpeg" || name == "jpg") return ImageFormat::jpeg;
  throw ParameterError("unknown image format '" + name + "' (expected png or jpeg)");
}

std::string to_string(ImageFormat format) { return format == ImageFormat::png ? "png" : "jpeg"; }

std::string file_extension(ImageFormat format) {
  return format == ImageFormat::png ? ".png" : ".jpg";
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read error on '" + path.string() + "'");
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write error on '" + path.string() + "'");
}

ImageBuffer decode_image(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngMagic, 8) == 0) {
    return decode_png(bytes);
  }
  if (bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF) {
    return decode_jpeg(bytes);
  }
  throw FormatError(bytes.empty() ? "empty image file" : "not a PNG or JPEG stream");
}

ImageBuffer load_image(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return decode_image(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_image(const ImageBuffer& img, ImageFormat format, int quality) {
  validate_quality(quality);
  if (img.empty()) throw ParameterError("cannot encode an empty image");
  return format == ImageFormat::png ? encode_png(img) : encode_jpeg(img, quality);
}

void save_image(const ImageBuffer& img, const std::filesystem::path& path, ImageFormat format,
                int quality) {
  const auto bytes = encode_image(img, format, quality);
  write_file_bytes(path, bytes);
}

ImageBuffer jpeg_roundtrip(const ImageBuffer& img, int quality) {
  validate_quality(quality);
  return decode_jpeg(encode_jpeg(img, quality));
}

std::string codec_identity() {
  std::string id = "libpng " PNG_LIBPNG_VER_STRING "; zlib ";
  id += zlibVersion();
#ifdef LIBJPEG_TURBO_VERSION
#define CBENCH_STR2(x) #x
#define CBENCH_STR(x) CBENCH_STR2(x)
  id += "; libjpeg-turbo " CBENCH_STR(LIBJPEG_TURBO_VERSION);
#undef CBENCH_STR
#undef CBENCH_STR2
#endif
  id += "; jpeglib api " + std::to_string(JPEG_LIB_VERSION);
  return id;
}

}  // namespace cbench
