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

// Masked attribute adjustments and mask highlighting.
//
// With v = value / 100 the member-pixel transfer functions are
//
//   brightness  c' = clamp(c + round(255 v))
//   contrast    c' = clamp(round((c - 127.5)(1 + v) + 127.5))
//   hue         h' = (h + 180 v) mod 360
//   saturation  s' = clamp(s (1 + v), 0, 1)
//   lightness   l' = l + v (1 - l)  for v >= 0,  l (1 + v)  otherwise
//
// Every function is the identity at v = 0. HSL work is done in double
// precision and only quantized when the RGB result is written.

#ifndef SLOTEDIT_IMAGE_EDIT_HPP_
#define SLOTEDIT_IMAGE_EDIT_HPP_

#include "slotedit/image.hpp"
#include "slotedit/ontology.hpp"

namespace slotedit::imaging {

inline constexpr Rgb kHighlightColor{255, 0, 0};
inline constexpr double kHighlightAlpha = 0.4;

// Rounds half away from zero and clamps into [0, 255].
int quantize(double channel);

// Transfer function for one pixel, independent of any mask.
Rgb adjust_pixel(Rgb p, Attribute attribute, EditValue value);

// New image with member pixels adjusted; non-members are copied verbatim.
// Throws DimensionMismatch.
Image adjust(const Image& image, const Mask& mask, Attribute attribute,
             EditValue value);

Image apply(const Image& image, const AdjustRequest& request);

// Member pixels blended toward kHighlightColor: c' = round(0.6 c + 0.4 h).
// Throws DimensionMismatch.
Image render_overlay(const Image& image, const Mask& mask);

}  // namespace slotedit::imaging

#endif  // SLOTEDIT_IMAGE_EDIT_HPP_
