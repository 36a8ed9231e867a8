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

#include "slotedit/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slotedit::imaging {

Image::Image(int width, int height, Rgb fill) : width_(width), height_(height) {
  if (width < 0 || height < 0) throw std::invalid_argument("negative image size");
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

HslPixel rgb_to_hsl(Rgb p) {
  const double r = p.r / 255.0;
  const double g = p.g / 255.0;
  const double b = p.b / 255.0;
  const double max_c = std::max({r, g, b});
  const double min_c = std::min({r, g, b});
  const double chroma = max_c - min_c;

  HslPixel q;
  q.l = (max_c + min_c) / 2.0;
  if (chroma == 0.0) return q;  // achromatic: h = s = 0

  q.s = chroma / (1.0 - std::abs(2.0 * q.l - 1.0));
  double h;
  if (max_c == r) {
    h = std::fmod((g - b) / chroma, 6.0);
  } else if (max_c == g) {
    h = (b - r) / chroma + 2.0;
  } else {
    h = (r - g) / chroma + 4.0;
  }
  h *= 60.0;
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  q.h = h;
  q.s = std::clamp(q.s, 0.0, 1.0);
  return q;
}

Rgb hsl_to_rgb(const HslPixel& q) {
  const double chroma = (1.0 - std::abs(2.0 * q.l - 1.0)) * q.s;
  const double h_sector = q.h / 60.0;
  const double x = chroma * (1.0 - std::abs(std::fmod(h_sector, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h_sector) % 6) {
    case 0: r = chroma; g = x; break;
    case 1: r = x; g = chroma; break;
    case 2: g = chroma; b = x; break;
    case 3: g = x; b = chroma; break;
    case 4: r = x; b = chroma; break;
    default: r = chroma; b = x; break;
  }
  const double m = q.l - chroma / 2.0;
  auto to_byte = [](double c) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(c * 255.0), 0L, 255L));
  };
  return {to_byte(r + m), to_byte(g + m), to_byte(b + m)};
}

}  // namespace slotedit::imaging
