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

// Shared helpers for the unit and acceptance tests: fixture paths, small
// hand-built scenes and seeded generators.

#ifndef SLOTEDIT_TESTS_SUPPORT_HPP_
#define SLOTEDIT_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "slotedit/image.hpp"
#include "slotedit/ontology.hpp"
#include "slotedit/vision_engine.hpp"

namespace slotedit::imaging {
inline std::ostream& operator<<(std::ostream& out, const Rgb& p) {
  return out << '(' << int(p.r) << ',' << int(p.g) << ',' << int(p.b) << ')';
}
}  // namespace slotedit::imaging

namespace slotedit::testing {

inline std::filesystem::path fixture_dir() { return SLOTEDIT_FIXTURE_DIR; }

inline std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("slotedit_test_" + name + "_" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  template <typename C>
  const auto& pick(const C& items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<int>(std::size(items)) - 1))];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline imaging::Image random_image(Rng& rng, int width, int height) {
  imaging::Image image(width, height);
  for (auto& p : image.pixels()) {
    p = {static_cast<std::uint8_t>(rng.integer(0, 255)), static_cast<std::uint8_t>(rng.integer(0, 255)),
         static_cast<std::uint8_t>(rng.integer(0, 255))};
  }
  return image;
}

inline Mask random_mask(Rng& rng, int width, int height, double density = 0.5) {
  Mask mask = Mask::filled(width, height, false);
  for (auto& m : mask.membership) m = rng.coin(density) ? 1 : 0;
  return mask;
}

inline Mask rect_mask(int width, int height, int x0, int y0, int x1, int y1) {
  Mask mask = Mask::filled(width, height, false);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) mask.membership[static_cast<std::size_t>(y) * width + x] = 1;
  }
  return mask;
}

inline vision::SceneObject make_object(std::string id, std::vector<std::string> phrases, Mask mask) {
  mask.source_id = id;
  return {std::move(id), std::move(phrases), std::move(mask)};
}

// 8x8 farmyard with two cows, used where the real fixtures would be overkill.
inline vision::Scene tiny_farm() {
  vision::Scene scene;
  scene.image_id = "tiny_farm";
  scene.width = scene.height = 8;
  scene.image = imaging::Image(8, 8, {90, 160, 70});
  scene.objects.push_back(make_object("big_cow", {"bigger cow", "left cow"}, rect_mask(8, 8, 0, 4, 4, 8)));
  scene.objects.push_back(make_object("small_cow", {"smaller cow", "cow on the right"},
                                      rect_mask(8, 8, 5, 5, 8, 8)));
  scene.objects.push_back(make_object("cows", {"the cows", "both cows"}, rect_mask(8, 8, 0, 4, 8, 8)));
  return scene;
}

}  // namespace slotedit::testing

#endif  // SLOTEDIT_TESTS_SUPPORT_HPP_
