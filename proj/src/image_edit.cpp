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

#include "slotedit/image_edit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slotedit/errors.hpp"

namespace slotedit::imaging {

namespace {

std::uint8_t to_channel(double c) { return static_cast<std::uint8_t>(quantize(c)); }

void check_dimensions(const Image& image, const Mask& mask) {
  if (image.width() != mask.width || image.height() != mask.height ||
      mask.membership.size() != image.pixels().size()) {
    throw DimensionMismatch("mask is " + std::to_string(mask.width) + "x" +
                            std::to_string(mask.height) + ", image is " +
                            std::to_string(image.width()) + "x" +
                            std::to_string(image.height()));
  }
}

}  // namespace

int quantize(double channel) {
  return static_cast<int>(std::clamp(std::lround(channel), 0L, 255L));
}

Rgb adjust_pixel(Rgb p, Attribute attribute, EditValue value) {
  const double v = value.fraction();
  switch (attribute) {
    case Attribute::kBrightness: {
      const double shift = static_cast<double>(std::lround(v * 255.0));
      return {to_channel(p.r + shift), to_channel(p.g + shift), to_channel(p.b + shift)};
    }
    case Attribute::kContrast: {
      auto stretch = [&](std::uint8_t c) { return to_channel((c - 127.5) * (1.0 + v) + 127.5); };
      return {stretch(p.r), stretch(p.g), stretch(p.b)};
    }
    case Attribute::kHue: {
      HslPixel q = rgb_to_hsl(p);
      q.h = std::fmod(q.h + v * 180.0, 360.0);
      if (q.h < 0.0) q.h += 360.0;
      return hsl_to_rgb(q);
    }
    case Attribute::kSaturation: {
      HslPixel q = rgb_to_hsl(p);
      q.s = std::clamp(q.s * (1.0 + v), 0.0, 1.0);
      return hsl_to_rgb(q);
    }
    case Attribute::kLightness: {
      HslPixel q = rgb_to_hsl(p);
      q.l = v >= 0.0 ? q.l + v * (1.0 - q.l) : q.l * (1.0 + v);
      q.l = std::clamp(q.l, 0.0, 1.0);
      return hsl_to_rgb(q);
    }
  }
  return p;
}

Image adjust(const Image& image, const Mask& mask, Attribute attribute,
             EditValue value) {
  check_dimensions(image, mask);
  Image out = image;
  auto pixels = out.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (mask.membership[i]) pixels[i] = adjust_pixel(pixels[i], attribute, value);
  }
  return out;
}

Image apply(const Image& image, const AdjustRequest& request) {
  return adjust(image, request.mask, request.attribute, request.value);
}

Image render_overlay(const Image& image, const Mask& mask) {
  check_dimensions(image, mask);
  Image out = image;
  auto pixels = out.pixels();
  auto blend = [](std::uint8_t c, std::uint8_t h) {
    return to_channel((1.0 - kHighlightAlpha) * c + kHighlightAlpha * h);
  };
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    if (!mask.membership[i]) continue;
    Rgb& p = pixels[i];
    p = {blend(p.r, kHighlightColor.r), blend(p.g, kHighlightColor.g),
         blend(p.b, kHighlightColor.b)};
  }
  return out;
}

}  // namespace slotedit::imaging
