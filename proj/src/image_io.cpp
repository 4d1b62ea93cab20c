/**
 * Copyright 2026 The fdgst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fdgst/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

namespace fdgst {

namespace {

// Interleaved samples as stored in the file.
struct RawImage {
  std::int64_t height = 0;
  std::int64_t width = 0;
  int channels = 0;
  std::uint32_t maxval = 255;
  std::vector<std::uint16_t> samples;
};

std::string quoted(const std::filesystem::path &path) { return "'" + path.string() + "'"; }

[[noreturn]] void undecodable(const std::filesystem::path &path, const std::string &why) {
  throw Error(ErrorCode::kUndecodableImage, quoted(path) + ": " + why);
}

std::vector<unsigned char> slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + quoted(path));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// --- netpbm -----------------------------------------------------------------

RawImage decode_netpbm(const std::filesystem::path &path, const std::vector<unsigned char> &bytes) {
  std::size_t pos = 2;
  auto next_token = [&]() -> std::uint64_t {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) undecodable(path, "malformed netpbm header");
    std::uint64_t value = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos] - '0');
      if (value > (1u << 30)) undecodable(path, "netpbm header value too large");
      ++pos;
    }
    return value;
  };

  RawImage raw;
  raw.channels = bytes[1] == '6' ? 3 : 1;
  raw.width = static_cast<std::int64_t>(next_token());
  raw.height = static_cast<std::int64_t>(next_token());
  const auto maxval = next_token();
  if (raw.width <= 0 || raw.height <= 0) undecodable(path, "empty netpbm image");
  if (maxval == 0 || maxval > 65535) undecodable(path, "netpbm maxval " + std::to_string(maxval));
  raw.maxval = static_cast<std::uint32_t>(maxval);
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) undecodable(path, "malformed netpbm header");
  ++pos;

  const std::size_t count = static_cast<std::size_t>(raw.width * raw.height * raw.channels);
  const std::size_t bytes_per_sample = raw.maxval > 255 ? 2 : 1;
  if (bytes.size() - pos < count * bytes_per_sample) undecodable(path, "truncated netpbm pixel data");
  raw.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t v = bytes[pos + i * bytes_per_sample];
    if (bytes_per_sample == 2) v = (v << 8) | bytes[pos + i * 2 + 1];
    if (v > raw.maxval) undecodable(path, "sample exceeds maxval");
    raw.samples[i] = static_cast<std::uint16_t>(v);
  }
  return raw;
}

void encode_netpbm(const std::filesystem::path &path, const RawImage &raw) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + quoted(path));
  out << (raw.channels == 3 ? "P6" : "P5") << "\n" << raw.width << " " << raw.height << "\n255\n";
  std::vector<char> bytes(raw.samples.begin(), raw.samples.end());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "short write to " + quoted(path));
}

// --- png --------------------------------------------------------------------

struct PngReadState {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReadState() { png_destroy_read_struct(&png, info ? &info : nullptr, nullptr); }
};

struct MemoryCursor {
  const std::vector<unsigned char> *bytes;
  std::size_t pos;
};

void read_from_memory(png_structp png, png_bytep out, png_size_t length) {
  auto *cursor = static_cast<MemoryCursor *>(png_get_io_ptr(png));
  if (cursor->bytes->size() - cursor->pos < length) png_error(png, "truncated PNG stream");
  std::copy_n(cursor->bytes->data() + cursor->pos, length, out);
  cursor->pos += length;
}

void silent_warning(png_structp, png_const_charp) {}

struct PngHeader {
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int channels = 0;
  int depth = 0;
  std::size_t rowbytes = 0;
};

// libpng reports errors with longjmp, so these two frames hold nothing with
// a destructor; buffers are owned by the caller.
const char *read_png_header(PngReadState &state, MemoryCursor &cursor, PngHeader &header) {
  if (setjmp(png_jmpbuf(state.png))) return "libpng decode failure";
  png_set_read_fn(state.png, &cursor, read_from_memory);
  png_read_info(state.png, state.info);

  const png_byte color = png_get_color_type(state.png, state.info);
  const png_byte depth = png_get_bit_depth(state.png, state.info);
  if ((color & PNG_COLOR_MASK_ALPHA) || png_get_valid(state.png, state.info, PNG_INFO_tRNS)) {
    return "alpha channels are not supported";
  }
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(state.png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(state.png);
  png_read_update_info(state.png, state.info);

  header.width = png_get_image_width(state.png, state.info);
  header.height = png_get_image_height(state.png, state.info);
  header.channels = png_get_channels(state.png, state.info);
  header.depth = png_get_bit_depth(state.png, state.info);
  header.rowbytes = png_get_rowbytes(state.png, state.info);
  if (header.channels != 1 && header.channels != 3) return "unsupported channel count";
  return nullptr;
}

const char *read_png_pixels(PngReadState &state, png_bytepp rows) {
  if (setjmp(png_jmpbuf(state.png))) return "libpng decode failure";
  png_read_image(state.png, rows);
  png_read_end(state.png, nullptr);
  return nullptr;
}

RawImage decode_png(const std::filesystem::path &path, const std::vector<unsigned char> &bytes) {
  PngReadState state;
  state.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, silent_warning);
  if (!state.png) throw Error(ErrorCode::kIo, "libpng initialisation failed");
  state.info = png_create_info_struct(state.png);
  if (!state.info) throw Error(ErrorCode::kIo, "libpng initialisation failed");
  MemoryCursor cursor{&bytes, 0};

  PngHeader header;
  if (const char *error = read_png_header(state, cursor, header)) undecodable(path, error);

  std::vector<png_byte> pixels(header.rowbytes * header.height);
  std::vector<png_bytep> rows(header.height);
  for (png_uint_32 y = 0; y < header.height; ++y) rows[y] = pixels.data() + y * header.rowbytes;
  if (const char *error = read_png_pixels(state, rows.data())) undecodable(path, error);

  RawImage raw;
  raw.width = header.width;
  raw.height = header.height;
  raw.channels = header.channels;
  raw.maxval = header.depth == 16 ? 65535 : 255;
  const std::size_t row_samples = static_cast<std::size_t>(header.width) * static_cast<std::size_t>(header.channels);
  raw.samples.resize(row_samples * header.height);
  for (png_uint_32 y = 0; y < header.height; ++y) {
    const png_byte *row = rows[y];
    for (std::size_t i = 0; i < row_samples; ++i) {
      raw.samples[y * row_samples + i] =
          header.depth == 16 ? static_cast<std::uint16_t>((row[2 * i] << 8) | row[2 * i + 1]) : row[i];
    }
  }
  return raw;
}

void encode_png(const std::filesystem::path &path, const RawImage &raw) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(raw.width);
  image.height = static_cast<png_uint_32>(raw.height);
  image.format = raw.channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<png_byte> bytes(raw.samples.begin(), raw.samples.end());
  if (!png_image_write_to_file(&image, path.c_str(), 0, bytes.data(), 0, nullptr)) {
    const std::string message = image.message;
    png_image_free(&image);
    throw Error(ErrorCode::kIo, "cannot write " + quoted(path) + ": " + message);
  }
}

// --- dispatch ---------------------------------------------------------------

RawImage read_raw(const std::filesystem::path &path) {
  if (!std::filesystem::is_regular_file(path)) throw Error(ErrorCode::kIo, "no such file " + quoted(path));
  const auto bytes = slurp(path);
  static constexpr std::array<unsigned char, 8> kPngMagic = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() >= kPngMagic.size() && std::equal(kPngMagic.begin(), kPngMagic.end(), bytes.begin())) {
    return decode_png(path, bytes);
  }
  if (bytes.size() >= 3 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6')) {
    return decode_netpbm(path, bytes);
  }
  undecodable(path, "not a PNG, PPM or PGM file");
}

bool wants_netpbm(const std::filesystem::path &path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".ppm" || ext == ".pgm";
}

void write_raw(const std::filesystem::path &path, const RawImage &raw) {
  if (wants_netpbm(path)) {
    encode_netpbm(path, raw);
  } else {
    encode_png(path, raw);
  }
}

std::uint16_t to_level(double v) { return static_cast<std::uint16_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)); }

}  // namespace

ImageTensor read_image(const std::filesystem::path &path) {
  const RawImage raw = read_raw(path);
  ImageTensor image(Shape{raw.channels, raw.height, raw.width});
  const auto maxval = static_cast<double>(raw.maxval);
  const auto plane = static_cast<std::size_t>(raw.height * raw.width);
  for (int c = 0; c < raw.channels; ++c) {
    auto dst = image.channel(c);
    for (std::size_t i = 0; i < plane; ++i) {
      dst[i] = raw.samples[i * static_cast<std::size_t>(raw.channels) + static_cast<std::size_t>(c)] / maxval;
    }
  }
  return image;
}

void write_image(const std::filesystem::path &path, const ImageTensor &image) {
  validate(image, PixelRange::kAny);
  if (image.channels() != 1 && image.channels() != 3) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cannot encode " + std::to_string(image.channels()) + " channels to " + quoted(path));
  }
  RawImage raw;
  raw.height = image.height();
  raw.width = image.width();
  raw.channels = static_cast<int>(image.channels());
  const auto plane = image.shape().plane_size();
  raw.samples.resize(plane * static_cast<std::size_t>(raw.channels));
  for (int c = 0; c < raw.channels; ++c) {
    const auto src = image.channel(c);
    for (std::size_t i = 0; i < plane; ++i) raw.samples[i * static_cast<std::size_t>(raw.channels) + static_cast<std::size_t>(c)] = to_level(src[i]);
  }
  write_raw(path, raw);
}

SegmentationMask read_mask(const std::filesystem::path &path, MaskLabel label) {
  const RawImage raw = read_raw(path);
  if (raw.channels != 1) {
    throw Error(ErrorCode::kNonBinaryMask, quoted(path) + " has " + std::to_string(raw.channels) +
                                               " channels; masks must be single-channel");
  }
  std::vector<std::uint8_t> data(raw.samples.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto v = raw.samples[i];
    if (v != 0 && v != raw.maxval) {
      throw Error(ErrorCode::kNonBinaryMask, quoted(path) + " holds level " + std::to_string(v) + " at row " +
                                                 std::to_string(i / static_cast<std::size_t>(raw.width)) + ", col " +
                                                 std::to_string(i % static_cast<std::size_t>(raw.width)));
    }
    data[i] = v != 0 ? 1 : 0;
  }
  return SegmentationMask(raw.height, raw.width, std::move(data), label);
}

void write_mask(const std::filesystem::path &path, const SegmentationMask &mask) {
  validate(mask);
  RawImage raw;
  raw.height = mask.height();
  raw.width = mask.width();
  raw.channels = 1;
  raw.samples.reserve(mask.size());
  for (auto v : mask.data()) raw.samples.push_back(v ? 255 : 0);
  write_raw(path, raw);
}

ImageTensor resize_bilinear(const ImageTensor &image, std::int64_t height, std::int64_t width) {
  validate(image, PixelRange::kAny);
  if (height <= 0 || width <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "resize target " + std::to_string(height) + "x" + std::to_string(width));
  }
  if (height == image.height() && width == image.width()) return image;

  struct Tap {
    std::int64_t lo, hi;
    double frac;
  };
  auto taps = [](std::int64_t out_len, std::int64_t in_len) {
    std::vector<Tap> t(static_cast<std::size_t>(out_len));
    const double scale = static_cast<double>(in_len) / static_cast<double>(out_len);
    for (std::int64_t i = 0; i < out_len; ++i) {
      const double src = std::clamp((static_cast<double>(i) + 0.5) * scale - 0.5, 0.0, static_cast<double>(in_len - 1));
      const auto lo = static_cast<std::int64_t>(std::floor(src));
      t[static_cast<std::size_t>(i)] = {lo, std::min(lo + 1, in_len - 1), src - static_cast<double>(lo)};
    }
    return t;
  };
  const auto rows = taps(height, image.height());
  const auto cols = taps(width, image.width());

  ImageTensor out(Shape{image.channels(), height, width});
  for (std::int64_t c = 0; c < image.channels(); ++c) {
    for (std::int64_t y = 0; y < height; ++y) {
      const Tap &ty = rows[static_cast<std::size_t>(y)];
      for (std::int64_t x = 0; x < width; ++x) {
        const Tap &tx = cols[static_cast<std::size_t>(x)];
        const double top = (1.0 - tx.frac) * image(c, ty.lo, tx.lo) + tx.frac * image(c, ty.lo, tx.hi);
        const double bottom = (1.0 - tx.frac) * image(c, ty.hi, tx.lo) + tx.frac * image(c, ty.hi, tx.hi);
        out(c, y, x) = (1.0 - ty.frac) * top + ty.frac * bottom;
      }
    }
  }
  return out;
}

ImageTensor quantize8(const ImageTensor &image) {
  ImageTensor out = image;
  for (double &v : out.data()) v = to_level(v) / 255.0;
  return out;
}

}  // namespace fdgst
