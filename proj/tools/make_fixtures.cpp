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

// Renders the synthetic scenes under fixtures/: one directory per scene with
// img.png, one grayscale mask per object and scene.json.
//
//   make_fixtures <output-dir>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slotedit/image.hpp"
#include "slotedit/ontology.hpp"
#include "slotedit/png_io.hpp"

namespace fs = std::filesystem;
using slotedit::Mask;
using slotedit::imaging::Image;
using slotedit::imaging::Rgb;

namespace {

constexpr int kWidth = 96;
constexpr int kHeight = 64;

using Shape = std::function<bool(int, int)>;
using Paint = std::function<Rgb(int, int)>;

struct Region {
  Shape shape;
  Paint paint;
};

struct Object {
  std::string id;
  std::vector<std::string> phrases;
  Shape shape;
};

struct SceneSpec {
  std::string name;
  std::vector<Region> layers;  // painted in order
  std::vector<Object> objects;
};

std::uint8_t clamp_byte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

// Small deterministic texture so flat regions still carry a spread of values.
double grain(int x, int y) {
  const std::uint32_t h = static_cast<std::uint32_t>(x) * 73856093u ^
                          static_cast<std::uint32_t>(y) * 19349663u;
  return static_cast<double>((h >> 7) % 17) - 8.0;
}

Paint textured(Rgb base, double gx = 0.0, double gy = 0.0) {
  return [=](int x, int y) {
    const double g = grain(x, y) + gx * x + gy * y;
    return Rgb{clamp_byte(base.r + g), clamp_byte(base.g + g), clamp_byte(base.b + g)};
  };
}

Shape rect(int x0, int y0, int x1, int y1) {
  return [=](int x, int y) { return x >= x0 && x < x1 && y >= y0 && y < y1; };
}

Shape ellipse(double cx, double cy, double rx, double ry) {
  return [=](int x, int y) {
    const double dx = (x + 0.5 - cx) / rx;
    const double dy = (y + 0.5 - cy) / ry;
    return dx * dx + dy * dy <= 1.0;
  };
}

Shape either(Shape a, Shape b) {
  return [=](int x, int y) { return a(x, y) || b(x, y); };
}

Shape minus(Shape a, Shape b) {
  return [=](int x, int y) { return a(x, y) && !b(x, y); };
}

Shape rows(int y0, int y1) { return rect(0, y0, kWidth, y1); }

SceneSpec farm() {
  const Shape big_cow = either(ellipse(24, 40, 13, 8), ellipse(11, 35, 4, 4));
  const Shape small_cow = either(ellipse(62, 44, 8, 5), ellipse(71, 41, 3, 3));
  const Shape shed = either(rect(72, 14, 90, 32), rect(74, 10, 88, 14));
  const Shape cows = either(big_cow, small_cow);
  const Shape sky = minus(rows(0, 26), shed);
  const Shape grass = minus(minus(rows(26, kHeight), cows), shed);
  return {"farm",
          {{rows(0, 26), textured({110, 170, 235}, 0.0, 1.2)},
           {rows(26, kHeight), textured({70, 150, 60}, 0.2, 0.0)},
           {shed, textured({150, 95, 55})},
           {big_cow, textured({120, 80, 50})},
           {small_cow, textured({205, 190, 175})}},
          {{"cows", {"cows", "the cows", "both cows"}, cows},
           {"big_cow", {"bigger cow", "the big cow", "cow on the left", "left cow"}, big_cow},
           {"small_cow", {"smaller cow", "cow on the right", "right cow"}, small_cow},
           {"shed", {"the small shed", "wooden house"}, shed},
           {"sky", {"sky", "the blue sky"}, sky},
           {"grass", {"grass", "green field"}, grass}}};
}

SceneSpec street() {
  const Shape building = rect(6, 8, 40, 44);
  const Shape car = either(rect(50, 40, 82, 50), rect(56, 33, 76, 40));
  const Shape person = either(rect(86, 30, 91, 50), ellipse(88.5, 27, 3, 3));
  const Shape road = minus(rows(44, kHeight), car);
  const Shape sky = minus(minus(minus(rows(0, 44), building), car), person);
  return {"street",
          {{rows(0, 44), textured({150, 190, 225}, 0.0, 0.8)},
           {rows(44, kHeight), textured({85, 85, 90}, 0.3, 0.0)},
           {building, textured({180, 120, 90})},
           {car, textured({30, 60, 170})},
           {person, textured({220, 180, 40})}},
          {{"building", {"building", "the brick building", "tall building"}, building},
           {"car", {"car", "the blue car"}, car},
           {"person", {"person", "the man on the right", "pedestrian"}, minus(person, car)},
           {"road", {"road", "the street"}, road},
           {"sky", {"sky"}, sky}}};
}

SceneSpec beach() {
  const Shape sea = rows(22, 40);
  const Shape sand = rows(40, kHeight);
  const Shape umbrella = either(ellipse(30, 30, 14, 6), rect(29, 30, 31, 52));
  const Shape ball = ellipse(70, 52, 5, 5);
  return {"beach",
          {{rows(0, 22), textured({120, 185, 250}, 0.0, 1.5)},
           {sea, textured({20, 110, 160}, 0.4, 0.0)},
           {sand, textured({225, 200, 150}, 0.0, -0.5)},
           {umbrella, textured({230, 60, 80})},
           {ball, textured({250, 240, 70})}},
          {{"sea", {"sea", "the ocean", "water"}, minus(sea, umbrella)},
           {"sand", {"sand", "the beach"}, minus(minus(sand, umbrella), ball)},
           {"umbrella", {"umbrella", "the red umbrella"}, umbrella},
           {"ball", {"ball", "the yellow ball"}, ball},
           {"sky", {"sky", "the clear sky"}, minus(rows(0, 22), umbrella)}}};
}

void write_scene(const fs::path& root, const SceneSpec& spec) {
  const fs::path dir = root / spec.name;
  fs::create_directories(dir);

  Image image(kWidth, kHeight);
  for (const auto& layer : spec.layers) {
    for (int y = 0; y < kHeight; ++y) {
      for (int x = 0; x < kWidth; ++x) {
        if (layer.shape(x, y)) image.at(x, y) = layer.paint(x, y);
      }
    }
  }
  slotedit::png::write_image(dir / "img.png", image);

  nlohmann::json objects = nlohmann::json::array();
  for (const auto& object : spec.objects) {
    Mask mask = Mask::filled(kWidth, kHeight, false);
    for (int y = 0; y < kHeight; ++y) {
      for (int x = 0; x < kWidth; ++x) {
        mask.membership[static_cast<std::size_t>(y) * kWidth + x] = object.shape(x, y) ? 1 : 0;
      }
    }
    const std::string file = object.id + "_mask.png";
    slotedit::png::write_mask(dir / file, mask);
    objects.push_back({{"id", object.id}, {"phrases", object.phrases}, {"mask", file}});
  }
  std::ofstream(dir / "scene.json") << nlohmann::json{{"image", "img.png"}, {"objects", objects}}.dump(2)
                                    << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  for (const auto& spec : {farm(), street(), beach()}) {
    write_scene(argv[1], spec);
    std::cout << "wrote " << (fs::path(argv[1]) / spec.name).string() << '\n';
  }
  return 0;
}
