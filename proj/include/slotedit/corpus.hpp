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

// Seeded generator of imperative, complete edit requests (one action,
// attribute, referring expression and value each) with gold BIO tags, and
// the JSON-lines corpus format:
//
//   {"text": "...", "tokens": ["..."], "labels": ["B-ACTION", ...]}

#ifndef SLOTEDIT_CORPUS_HPP_
#define SLOTEDIT_CORPUS_HPP_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slotedit/nlu.hpp"
#include "slotedit/vision_engine.hpp"

namespace slotedit::nlu {

struct TaggedSentence {
  std::string text;
  std::vector<std::string> tokens;
  std::vector<BioLabel> labels;

  friend bool operator==(const TaggedSentence&, const TaggedSentence&) = default;
};

// Sentence templates. Placeholders: {action} {attribute} {refer} {value};
// {det_refer} is a referring expression that starts with a determiner.
std::span<const std::string_view> request_templates();

// Uniform integer in [0, n) by rejection sampling on the raw engine output,
// so sequences are identical across standard library implementations.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n);

// Throws EmptyScene when the scene offers no usable referring phrase.
TaggedSentence generate_illc_ier(std::uint64_t seed, const vision::Scene& scene);

std::vector<TaggedSentence> generate_corpus(std::size_t count, std::uint64_t seed,
                                            std::span<const vision::Scene* const> scenes);

void write_corpus(std::ostream& out, std::span<const TaggedSentence> corpus);
// Throws Error on malformed lines.
std::vector<TaggedSentence> read_corpus(std::istream& in);

}  // namespace slotedit::nlu

#endif  // SLOTEDIT_CORPUS_HPP_
