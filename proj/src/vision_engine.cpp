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

#include "slotedit/vision_engine.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "slotedit/errors.hpp"
#include "slotedit/png_io.hpp"
#include "slotedit/text.hpp"

namespace slotedit::vision {

namespace fs = std::filesystem;
using nlohmann::json;

std::set<std::string> content_words(std::string_view phrase) {
  std::set<std::string> words;
  for (std::string w : text::split_whitespace(text::to_lower(phrase))) {
    std::erase_if(w, [](char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; });
    if (w.empty()) continue;
    if (std::find(kStopWords.begin(), kStopWords.end(), w) != kStopWords.end()) continue;
    words.insert(std::move(w));
  }
  return words;
}

namespace {

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& w : a) common += b.count(w);
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

}  // namespace

double score(const Refer& refer, const SceneObject& object) {
  const auto query = content_words(refer.text());
  double best = 0.0;
  for (const auto& phrase : object.phrases) best = std::max(best, jaccard(query, content_words(phrase)));
  return best;
}

std::optional<Mask> resolve(const Refer& refer, const Scene& scene, double threshold) {
  const SceneObject* best = nullptr;
  double best_score = -1.0;
  for (const auto& object : scene.objects) {
    const double s = score(refer, object);
    if (s > best_score || (s == best_score && best && object.object_id < best->object_id)) {
      best = &object;
      best_score = s;
    }
  }
  if (!best || best_score < threshold) return std::nullopt;
  Mask mask = best->mask;
  mask.confidence = best_score;
  mask.source_id = best->object_id;
  return mask;
}

std::optional<Mask> LexicalResolver::resolve(const Refer& refer, const Scene& scene) const {
  return vision::resolve(refer, scene, threshold_);
}

Scene load_scene(const fs::path& dir) {
  using Kind = SceneError::Kind;
  const fs::path manifest_path = dir / "scene.json";
  std::ifstream in(manifest_path);
  if (!in) throw SceneError(Kind::kMissingFile, "", "missing " + manifest_path.string());

  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw SceneError(Kind::kBadManifest, "", manifest_path.string() + ": " + e.what());
  }

  Scene scene;
  scene.image_id = dir.filename().string();
  if (scene.image_id.empty()) scene.image_id = dir.parent_path().filename().string();

  try {
    const fs::path image_path = dir / manifest.at("image").get<std::string>();
    if (!fs::exists(image_path)) {
      throw SceneError(Kind::kMissingFile, "", "missing image " + image_path.string());
    }
    scene.image = png::read_image(image_path);
    scene.width = scene.image.width();
    scene.height = scene.image.height();

    for (const auto& entry : manifest.at("objects")) {
      SceneObject object;
      object.object_id = entry.at("id").get<std::string>();
      object.phrases = entry.at("phrases").get<std::vector<std::string>>();
      if (object.phrases.empty()) {
        throw SceneError(Kind::kBadManifest, object.object_id,
                         "object '" + object.object_id + "' has no phrases");
      }
      const fs::path mask_path = dir / entry.at("mask").get<std::string>();
      if (!fs::exists(mask_path)) {
        throw SceneError(Kind::kMissingFile, object.object_id,
                         "object '" + object.object_id + "': missing mask " + mask_path.string());
      }
      object.mask = png::read_mask(mask_path);
      object.mask.source_id = object.object_id;
      if (object.mask.width != scene.width || object.mask.height != scene.height) {
        throw SceneError(Kind::kDimensionMismatch, object.object_id,
                         "object '" + object.object_id + "': mask is " +
                             std::to_string(object.mask.width) + "x" +
                             std::to_string(object.mask.height) + ", image is " +
                             std::to_string(scene.width) + "x" + std::to_string(scene.height));
      }
      if (object.mask.member_count() == 0) {
        throw SceneError(Kind::kEmptyMask, object.object_id,
                         "object '" + object.object_id + "' has an empty mask");
      }
      scene.objects.push_back(std::move(object));
    }
  } catch (const json::exception& e) {
    throw SceneError(Kind::kBadManifest, "", manifest_path.string() + ": " + e.what());
  } catch (const ImageIoError& e) {
    throw SceneError(Kind::kBadManifest, "", e.what());
  }
  return scene;
}

FixtureStore FixtureStore::load(const fs::path& root) {
  FixtureStore store;
  if (!fs::is_directory(root)) {
    throw SceneError(SceneError::Kind::kMissingFile, "", "no fixture directory " + root.string());
  }
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory() && fs::exists(entry.path() / "scene.json")) {
      store.add(load_scene(entry.path()));
    }
  }
  return store;
}

void FixtureStore::add(Scene scene) {
  auto id = scene.image_id;
  scenes_[std::move(id)] = std::make_shared<const Scene>(std::move(scene));
}

std::vector<std::string> FixtureStore::image_ids() const {
  std::vector<std::string> ids;
  for (const auto& [id, _] : scenes_) ids.push_back(id);
  return ids;
}

std::shared_ptr<const Scene> FixtureStore::find(std::string_view image_id) const {
  auto it = scenes_.find(image_id);
  return it == scenes_.end() ? nullptr : it->second;
}

}  // namespace slotedit::vision
