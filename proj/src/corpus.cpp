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

#include "slotedit/corpus.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "slotedit/errors.hpp"
#include "slotedit/text.hpp"

namespace slotedit::nlu {

namespace {

constexpr std::array<std::string_view, 7> kTemplates = {
    "{action} the {attribute} of {refer} by {value}",
    "{action} {attribute} of {refer} by {value}",
    "please {action} the {attribute} on {refer} by {value}",
    "{action} the {attribute} in {refer} by {value} please",
    "{action} the {attribute} for {refer} by {value}.",
    "{action} {det_refer} {attribute} by {value}",
    "{action} the {attribute} of {refer} to {value}",
};
// Index of the "... to {value}" template, which only takes neutral verbs.
constexpr std::size_t kToTemplate = 6;

constexpr std::array<std::string_view, 3> kPositiveActions = {"increase", "raise", "boost"};
constexpr std::array<std::string_view, 4> kNeutralActions = {"change", "adjust", "modify", "set"};

// A phrase can be a gold REFER span only if every token stays untagged and
// does not stop a referring span.
bool usable_phrase(const std::vector<Token>& tokens) {
  if (tokens.empty()) return false;
  if (std::all_of(tokens.begin(), tokens.end(),
                  [](const Token& t) { return lexicon::is_determiner(t.text); })) {
    return false;
  }
  for (const Token& t : tokens) {
    if (lexicon::is_numeric(t.text) || parse_attribute(t.text) ||
        lexicon::is_function_word(t.text) || lexicon::is_punctuation(t.text) ||
        lexicon::is_action(t.text) || match_intent(t.text) != Intent::kNone) {
      return false;
    }
  }
  return true;
}

template <typename Seq>
std::string_view pick(std::mt19937_64& rng, const Seq& seq) {
  return seq[uniform_index(rng, seq.size())];
}

}  // namespace

std::span<const std::string_view> request_templates() { return kTemplates; }

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index over an empty range");
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

TaggedSentence generate_illc_ier(std::uint64_t seed, const vision::Scene& scene) {
  std::vector<std::vector<Token>> phrases;
  for (const auto& object : scene.objects) {
    for (const auto& phrase : object.phrases) {
      auto tokens = tokenize(phrase);
      if (usable_phrase(tokens)) phrases.push_back(std::move(tokens));
    }
  }
  if (phrases.empty()) {
    throw EmptyScene("scene '" + scene.image_id + "' has no usable referring phrase");
  }

  std::mt19937_64 rng(seed);
  const std::size_t template_index = uniform_index(rng, kTemplates.size());
  const Attribute attribute = kAllAttributes[uniform_index(rng, kAllAttributes.size())];
  int value = static_cast<int>(uniform_index(rng, 200)) - 100;  // [-100, 99]
  if (value >= 0) ++value;                                     // [-100, 100] \ {0}
  const std::vector<Token>& refer = phrases[uniform_index(rng, phrases.size())];

  std::string action;
  std::string value_text;
  if (template_index == kToTemplate) {
    action = pick(rng, std::array<std::string_view, 2>{"set", "change"});
    value_text = std::to_string(value);
  } else if (value > 0) {
    const bool neutral = uniform_index(rng, 2) == 0;
    action = neutral ? pick(rng, kNeutralActions) : pick(rng, kPositiveActions);
    value_text = std::to_string(value);
  } else {
    const bool neutral = uniform_index(rng, 2) == 0;
    if (neutral) {
      action = pick(rng, kNeutralActions);
      value_text = std::to_string(value);
    } else {
      action = pick(rng, lexicon::kNegativeActions);
      value_text = std::to_string(-value);
    }
  }

  TaggedSentence out;
  std::vector<std::string> words;  // surface words, punctuation attached
  auto emit = [&](std::string token, BioLabel label, bool attach) {
    if (attach && !words.empty()) {
      words.back() += token;
    } else {
      words.push_back(token);
    }
    out.tokens.push_back(std::move(token));
    out.labels.push_back(label);
  };
  auto emit_refer = [&](bool need_determiner) {
    bool first = true;
    if (need_determiner && !lexicon::is_determiner(refer.front().text)) {
      emit("the", BioLabel::kBRefer, false);
      first = false;
    }
    for (const Token& t : refer) {
      emit(t.text, first ? BioLabel::kBRefer : BioLabel::kIRefer, false);
      first = false;
    }
  };

  for (std::string word : text::split_whitespace(kTemplates[template_index])) {
    const bool trailing_period = word.size() > 1 && word.back() == '.';
    if (trailing_period) word.pop_back();
    if (word == "{action}") {
      emit(action, BioLabel::kBAction, false);
    } else if (word == "{attribute}") {
      emit(std::string(attribute_name(attribute)), BioLabel::kBAttribute, false);
    } else if (word == "{value}") {
      emit(value_text, BioLabel::kBValue, false);
    } else if (word == "{refer}") {
      emit_refer(false);
    } else if (word == "{det_refer}") {
      emit_refer(true);
    } else {
      emit(word, BioLabel::kO, false);
    }
    if (trailing_period) emit(".", BioLabel::kO, true);
  }
  out.text = text::join(words, " ");
  return out;
}

std::vector<TaggedSentence> generate_corpus(std::size_t count, std::uint64_t seed,
                                            std::span<const vision::Scene* const> scenes) {
  if (scenes.empty()) throw EmptyScene("no scenes to generate from");
  std::mt19937_64 rng(seed);
  std::vector<TaggedSentence> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const vision::Scene& scene = *scenes[uniform_index(rng, scenes.size())];
    corpus.push_back(generate_illc_ier(rng(), scene));
  }
  return corpus;
}

void write_corpus(std::ostream& out, std::span<const TaggedSentence> corpus) {
  for (const auto& s : corpus) {
    nlohmann::json labels = nlohmann::json::array();
    for (BioLabel l : s.labels) labels.push_back(std::string(label_name(l)));
    out << nlohmann::json{{"text", s.text}, {"tokens", s.tokens}, {"labels", labels}}.dump()
        << '\n';
  }
}

std::vector<TaggedSentence> read_corpus(std::istream& in) {
  std::vector<TaggedSentence> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      TaggedSentence s;
      s.text = j.at("text").get<std::string>();
      s.tokens = j.at("tokens").get<std::vector<std::string>>();
      for (const auto& name : j.at("labels")) {
        auto label = parse_label(name.get<std::string>());
        if (!label) throw Error("unknown label " + name.dump());
        s.labels.push_back(*label);
      }
      if (s.labels.size() != s.tokens.size()) throw Error("tokens/labels length differ");
      corpus.push_back(std::move(s));
    } catch (const std::exception& e) {
      throw Error("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

}  // namespace slotedit::nlu
