// Copyright 2026 The slotedit Authors.
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

#include "slotedit/png_io.hpp"

#include <png.h>

#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "slotedit/errors.hpp"

namespace slotedit::png {

namespace {

// png_image plus guaranteed png_image_free.
class PngImage {
 public:
  PngImage() {
    std::memset(&image_, 0, sizeof(image_));
    image_.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image_); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;

  png_image* get() { return &image_; }
  png_image* operator->() { return &image_; }

  [[noreturn]] void fail(const std::string& context) {
    throw ImageIoError(context + ": " + image_.message);
  }

 private:
  png_image image_;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageIoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ImageIoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

// Decodes into `format`, returning the packed buffer and dimensions.
std::vector<std::uint8_t> decode(std::span<const std::uint8_t> bytes, png_uint_32 format,
                                 int& width, int& height) {
  PngImage image;
  if (!png_image_begin_read_from_memory(image.get(), bytes.data(), bytes.size())) {
    image.fail("png decode");
  }
  image->format = format;
  std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(*image.get()));
  if (!png_image_finish_read(image.get(), nullptr, buffer.data(), 0, nullptr)) {
    image.fail("png decode");
  }
  width = static_cast<int>(image->width);
  height = static_cast<int>(image->height);
  return buffer;
}

std::vector<std::uint8_t> encode(const std::uint8_t* data, int width, int height,
                                 png_uint_32 format) {
  PngImage image;
  image->width = static_cast<png_uint_32>(width);
  image->height = static_cast<png_uint_32>(height);
  image->format = format;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(image.get(), nullptr, &size, 0, data, 0, nullptr)) {
    image.fail("png encode");
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(image.get(), out.data(), &size, 0, data, 0, nullptr)) {
    image.fail("png encode");
  }
  out.resize(size);
  return out;
}

}  // namespace

std::vector<std::uint8_t> encode_image(const imaging::Image& image) {
  static_assert(sizeof(imaging::Rgb) == 3);
  if (image.empty()) throw ImageIoError("cannot encode an empty image");
  return encode(reinterpret_cast<const std::uint8_t*>(image.pixels().data()),
                image.width(), image.height(), PNG_FORMAT_RGB);
}

imaging::Image decode_image(std::span<const std::uint8_t> bytes) {
  int width = 0, height = 0;
  const auto buffer = decode(bytes, PNG_FORMAT_RGB, width, height);
  imaging::Image image(width, height);
  std::memcpy(image.pixels().data(), buffer.data(), buffer.size());
  return image;
}

imaging::Image read_image(const std::filesystem::path& path) {
  return decode_image(read_file(path));
}

void write_image(const std::filesystem::path& path, const imaging::Image& image) {
  write_file(path, encode_image(image));
}

Mask read_mask(const std::filesystem::path& path) {
  int width = 0, height = 0;
  const auto buffer = decode(read_file(path), PNG_FORMAT_GRAY, width, height);
  Mask mask;
  mask.width = width;
  mask.height = height;
  mask.membership.resize(buffer.size());
  for (std::size_t i = 0; i < buffer.size(); ++i) mask.membership[i] = buffer[i] ? 1 : 0;
  return mask;
}

void write_mask(const std::filesystem::path& path, const Mask& mask) {
  std::vector<std::uint8_t> gray(mask.membership.size());
  for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = mask.membership[i] ? 255 : 0;
  write_file(path, encode(gray.data(), mask.width, mask.height, PNG_FORMAT_GRAY));
}

}  // namespace slotedit::png
