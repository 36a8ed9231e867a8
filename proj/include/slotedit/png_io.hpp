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

// PNG encoding for images (8-bit RGB) and masks (8-bit gray, nonzero =
// member). All failures throw ImageIoError.

#ifndef SLOTEDIT_PNG_IO_HPP_
#define SLOTEDIT_PNG_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "slotedit/image.hpp"
#include "slotedit/ontology.hpp"

namespace slotedit::png {

imaging::Image read_image(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const imaging::Image& image);

std::vector<std::uint8_t> encode_image(const imaging::Image& image);
imaging::Image decode_image(std::span<const std::uint8_t> bytes);

// Membership only; confidence is left at 1.
Mask read_mask(const std::filesystem::path& path);
void write_mask(const std::filesystem::path& path, const Mask& mask);

}  // namespace slotedit::png

#endif  // SLOTEDIT_PNG_IO_HPP_
