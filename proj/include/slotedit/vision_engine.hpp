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

// Referring-expression grounding against annotated scene fixtures.
//
// A fixture is a directory holding scene.json
//
//   {"image": "img.png",
//    "objects": [{"id": "cow1", "phrases": ["bigger cow"], "mask": "cow1.png"}]}
//
// plus the RGB image and one 8-bit grayscale mask PNG per object (nonzero =
// member). The directory name is the image id.

#ifndef SLOTEDIT_VISION_ENGINE_HPP_
#define SLOTEDIT_VISION_ENGINE_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slotedit/image.hpp"
#include "slotedit/ontology.hpp"

namespace slotedit::vision {

struct SceneObject {
  std::string object_id;
  std::vector<std::string> phrases;
  Mask mask;
};

struct Scene {
  std::string image_id;
  int width = 0;
  int height = 0;
  std::vector<SceneObject> objects;
  imaging::Image image;
};

inline constexpr std::array<std::string_view, 11> kStopWords = {
    "the", "a", "an", "of", "in", "on", "at", "to", "that", "this", "it"};

inline constexpr double kDefaultThreshold = 0.2;

// Lowercased, punctuation-stripped tokens with stop words removed.
std::set<std::string> content_words(std::string_view phrase);

// Max over the object's phrases of the Jaccard similarity of content words.
double score(const Refer& refer, const SceneObject& object);

// Mask of the best-scoring object with confidence = its score, or nullopt
// (no detection) when the best score is below `threshold` or the scene is
// empty. Ties go to the lexicographically smallest object id.
std::optional<Mask> resolve(const Refer& refer, const Scene& scene,
                            double threshold = kDefaultThreshold);

// Seam for swapping in a different grounding model.
class Resolver {
 public:
  virtual ~Resolver() = default;
  virtual std::optional<Mask> resolve(const Refer& refer, const Scene& scene) const = 0;
};

class LexicalResolver final : public Resolver {
 public:
  explicit LexicalResolver(double threshold = kDefaultThreshold) : threshold_(threshold) {}
  std::optional<Mask> resolve(const Refer& refer, const Scene& scene) const override;
  double threshold() const { return threshold_; }

 private:
  double threshold_;
};

// Throws SceneError (missing file, dimension mismatch, empty mask, bad
// manifest).
Scene load_scene(const std::filesystem::path& dir);

// Immutable set of scenes keyed by image id.
class FixtureStore {
 public:
  FixtureStore() = default;

  // Every subdirectory of `root` that contains a scene.json.
  static FixtureStore load(const std::filesystem::path& root);

  void add(Scene scene);
  std::vector<std::string> image_ids() const;
  std::shared_ptr<const Scene> find(std::string_view image_id) const;
  std::size_t size() const { return scenes_.size(); }

 private:
  std::map<std::string, std::shared_ptr<const Scene>, std::less<>> scenes_;
};

}  // namespace slotedit::vision

#endif  // SLOTEDIT_VISION_ENGINE_HPP_
