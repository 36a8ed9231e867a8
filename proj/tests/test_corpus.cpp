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

#include <doctest.h>

#include <map>
#include <sstream>

#include "slotedit/corpus.hpp"
#include "slotedit/errors.hpp"
#include "support.hpp"

using namespace slotedit;
using namespace slotedit::nlu;

namespace {

vision::Scene left_cow_scene() {
  vision::Scene scene;
  scene.image_id = "left_cow";
  scene.width = scene.height = 2;
  scene.image = imaging::Image(2, 2);
  scene.objects.push_back(testing::make_object("cow", {"the left cow"}, Mask::filled(2, 2, true)));
  return scene;
}

std::vector<Token> as_tokens(const std::vector<std::string>& words) {
  std::vector<Token> tokens;
  for (const auto& w : words) tokens.push_back({w, 0, 0});
  return tokens;
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("a generated request has one span per category") {
  const auto scene = left_cow_scene();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = generate_illc_ier(seed, scene);
    std::map<SpanCategory, int> counts;
    for (const auto& span : extract_spans(s.labels)) ++counts[span.category];
    for (auto c : kAllCategories) CHECK_MESSAGE(counts[c] == 1, s.text);
    CHECK(s.tokens.size() == s.labels.size());
    CHECK(is_valid_bio(s.labels));
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const auto scene = left_cow_scene();
  CHECK(generate_illc_ier(42, scene) == generate_illc_ier(42, scene));
  const std::vector<const vision::Scene*> scenes = {&scene};
  CHECK(generate_corpus(50, 9, scenes) == generate_corpus(50, 9, scenes));
}

TEST_CASE("surface text tokenizes back to the gold tokens") {
  const auto farm = testing::tiny_farm();
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto s = generate_illc_ier(seed, farm);
    std::vector<std::string> words;
    for (const auto& t : tokenize(s.text)) words.push_back(t.text);
    CHECK(words == s.tokens);
  }
}

TEST_CASE("reference tagger reproduces gold on generated requests") {
  const auto farm = testing::tiny_farm();
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto s = generate_illc_ier(seed, farm);
    CHECK_MESSAGE(reference_tagger().tag(as_tokens(s.tokens)) == s.labels, s.text);
  }
}

TEST_CASE("generated values are nonzero and read back in range") {
  const auto farm = testing::tiny_farm();
  std::map<bool, int> signs;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto frame = extract_frame(generate_illc_ier(seed, farm).text);
    REQUIRE(frame.value);
    CHECK(frame.value->magnitude() != 0);
    ++signs[frame.value->magnitude() > 0];
  }
  CHECK(signs[true] > 150);
  CHECK(signs[false] > 150);
}

TEST_CASE("scenes without usable phrases are rejected") {
  vision::Scene empty;
  empty.image_id = "empty";
  CHECK_THROWS_AS(generate_illc_ier(1, empty), EmptyScene);

  vision::Scene odd;
  odd.image_id = "odd";
  odd.objects.push_back(testing::make_object("x", {"the", "brightness", "by 10", "yes"},
                                             Mask::filled(1, 1, true)));
  CHECK_THROWS_AS(generate_illc_ier(1, odd), EmptyScene);
  CHECK_THROWS_AS(generate_corpus(3, 1, std::vector<const vision::Scene*>{}), EmptyScene);
}

TEST_CASE("corpus files round-trip") {
  const auto farm = testing::tiny_farm();
  const std::vector<const vision::Scene*> scenes = {&farm};
  const auto corpus = generate_corpus(40, 3, scenes);
  std::stringstream buffer;
  write_corpus(buffer, corpus);
  CHECK(read_corpus(buffer) == corpus);

  std::istringstream bad("{\"text\": \"x\", \"tokens\": [\"x\"], \"labels\": [\"B-COLOUR\"]}\n");
  CHECK_THROWS_AS(read_corpus(bad), Error);
  std::istringstream misaligned("{\"text\": \"x\", \"tokens\": [\"x\"], \"labels\": []}\n");
  CHECK_THROWS_AS(read_corpus(misaligned), Error);
}

TEST_CASE("uniform_index stays in range and covers it evenly") {
  std::mt19937_64 rng(5);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto k = uniform_index(rng, 7);
    REQUIRE(k < 7);
    ++hits[k];
  }
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);
  CHECK_THROWS(uniform_index(rng, 0));
  CHECK(uniform_index(rng, 1) == 0);
}

}  // TEST_SUITE
