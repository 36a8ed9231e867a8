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

#include <string>
#include <vector>

#include "slotedit/errors.hpp"
#include "slotedit/nlu.hpp"
#include "slotedit/text.hpp"
#include "support.hpp"

using namespace slotedit;
using namespace slotedit::nlu;
using L = BioLabel;

namespace {

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

std::vector<BioLabel> tag_words(const std::vector<std::string>& words) {
  std::vector<Token> tokens;
  for (const auto& w : words) tokens.push_back({w, 0, 0});
  return reference_tagger().tag(tokens);
}

std::string random_utterance(testing::Rng& rng) {
  static const std::vector<std::string> vocab = {
      "increase", "decrease", "make", "set", "the", "a", "cow", "left", "barn", "of", "on",
      "by", "to", "please", "brightness", "hue", "saturation", "10", "-10", "3.5", "200",
      "yes", "no", ".", "!", ",", "?", "sky", "-", "--5", "0", "blue", "my", "for", "in",
      "CONTRAST", "Lightness", "", "  ", "é", "+7", "brighter"};
  std::string out;
  const int n = rng.integer(0, 12);
  for (int i = 0; i < n; ++i) {
    out += rng.pick(vocab);
    out += rng.coin(0.8) ? " " : "";
  }
  return out;
}

}  // namespace

TEST_SUITE("nlu") {

TEST_CASE("tokenize splits words and terminal punctuation") {
  CHECK(texts(tokenize("Decrease brightness by 10.")) ==
        std::vector<std::string>{"decrease", "brightness", "by", "10", "."});
  CHECK(texts(tokenize("change brightness by -10")) ==
        std::vector<std::string>{"change", "brightness", "by", "-10"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("   ").empty());
  CHECK(texts(tokenize("yes!?")) == std::vector<std::string>{"yes", "!", "?"});
}

TEST_CASE("token offsets point back into the text") {
  const std::string text = "  Make the Cow,  brighter!";
  const auto tokens = tokenize(text);
  std::size_t prev_end = 0;
  for (const auto& t : tokens) {
    CHECK(t.start < t.end);
    CHECK(t.start >= prev_end);
    CHECK(text::to_lower(text.substr(t.start, t.end - t.start)) == t.text);
    prev_end = t.end;
  }
}

TEST_CASE("reference tagger on the documented examples") {
  CHECK(tag_words({"decrease", "brightness", "by", "10"}) ==
        std::vector<L>{L::kBAction, L::kBAttribute, L::kO, L::kBValue});
  CHECK(tag_words({"increase", "the", "saturation", "of", "the", "left", "cow", "by", "30"}) ==
        std::vector<L>{L::kBAction, L::kO, L::kBAttribute, L::kO, L::kBRefer, L::kIRefer,
                       L::kIRefer, L::kO, L::kBValue});
  CHECK(tag_words({"hello"}) == std::vector<L>{L::kO});
  CHECK(tag_words({}).empty());
}

TEST_CASE("reference tagger finds a determiner-led refer") {
  CHECK(tag_words({"make", "the", "cows", "brighter"}) ==
        std::vector<L>{L::kBAction, L::kBRefer, L::kIRefer, L::kO});
  CHECK(tag_words({"lower", "the", "left", "cow", "hue", "by", "5"}) ==
        std::vector<L>{L::kBAction, L::kBRefer, L::kIRefer, L::kIRefer, L::kBAttribute, L::kO,
                       L::kBValue});
  CHECK(tag_words({"the", "left", "cow"}) == std::vector<L>{L::kBRefer, L::kIRefer, L::kIRefer});
  // A lone determiner is not a referring expression.
  CHECK(tag_words({"the"}) == std::vector<L>{L::kO});
}

TEST_CASE("BIO validity") {
  CHECK(is_valid_bio(std::vector<L>{L::kBRefer, L::kIRefer, L::kO}));
  CHECK(is_valid_bio(std::vector<L>{}));
  CHECK_FALSE(is_valid_bio(std::vector<L>{L::kIRefer}));
  CHECK_FALSE(is_valid_bio(std::vector<L>{L::kO, L::kIValue}));
  CHECK_FALSE(is_valid_bio(std::vector<L>{L::kBAction, L::kIRefer}));
  CHECK(is_valid_bio(std::vector<L>{L::kBAction, L::kIAction, L::kBAction}));
}

TEST_CASE("span extraction, including orphan inside labels") {
  const std::vector<L> labels = {L::kBAction, L::kO, L::kBRefer, L::kIRefer, L::kIValue, L::kIValue};
  const auto spans = extract_spans(labels);
  REQUIRE(spans.size() == 3);
  CHECK(spans[0] == Span{SpanCategory::kAction, 0, 1});
  CHECK(spans[1] == Span{SpanCategory::kRefer, 2, 4});
  CHECK(spans[2] == Span{SpanCategory::kValue, 4, 6});
}

TEST_CASE("label names round-trip") {
  for (int i = 0; i <= static_cast<int>(L::kIValue); ++i) {
    const auto l = static_cast<L>(i);
    CHECK(parse_label(label_name(l)) == l);
  }
  CHECK(label_name(L::kBAttribute) == "B-ATTRIBUTE");
  CHECK_FALSE(parse_label("B-COLOUR"));
  for (auto c : kAllCategories) {
    CHECK(label_category(begin_label(c)) == c);
    CHECK(label_category(inside_label(c)) == c);
    CHECK(is_inside(inside_label(c)));
    CHECK_FALSE(is_inside(begin_label(c)));
  }
}

TEST_CASE("normalize_value applies the sign convention") {
  CHECK(normalize_value("10", true).magnitude() == -10);
  CHECK(normalize_value("-10", false).magnitude() == -10);
  CHECK(normalize_value("-10", true).magnitude() == -10);
  CHECK(normalize_value("10", false).magnitude() == 10);
  CHECK(normalize_value("+10", false).magnitude() == 10);
  CHECK(normalize_value("0", true).magnitude() == 0);
  CHECK_THROWS_AS(normalize_value("150", false), ValueOutOfRange);
  CHECK_THROWS_AS(normalize_value("-101", true), ValueOutOfRange);
  CHECK_THROWS_AS(normalize_value("99999999999999999999999", false), ValueOutOfRange);
  CHECK_THROWS_AS(normalize_value("2.5", false), NotAnInteger);
  CHECK_THROWS_AS(normalize_value("ten", false), NotAnInteger);
}

TEST_CASE("match_intent") {
  CHECK(match_intent("yes") == Intent::kAffirm);
  CHECK(match_intent("No") == Intent::kDeny);
  CHECK(match_intent("  Yep. ") == Intent::kAffirm);
  CHECK(match_intent("make the barn darker") == Intent::kNone);
  CHECK(match_intent("yes please") == Intent::kNone);
  CHECK(match_intent("") == Intent::kNone);
  for (auto w : lexicon::kAffirm) CHECK(match_intent(w) == Intent::kAffirm);
  for (auto w : lexicon::kDeny) CHECK(match_intent(w) == Intent::kDeny);
  CHECK(parse_intent(intent_name(Intent::kDeny)) == Intent::kDeny);
}

TEST_CASE("extract_frame on the documented examples") {
  const auto f1 = extract_frame("decrease brightness by 10");
  CHECK(f1.attribute == Attribute::kBrightness);
  REQUIRE(f1.value);
  CHECK(f1.value->magnitude() == -10);
  CHECK(f1.action_negative);
  CHECK_FALSE(f1.refer);

  const auto f2 = extract_frame("yes");
  CHECK(f2.intent == Intent::kAffirm);
  CHECK_FALSE(f2.has_slots());

  const auto f3 = extract_frame("adjust saturation of bigger cow");
  CHECK(f3.attribute == Attribute::kSaturation);
  REQUIRE(f3.refer);
  CHECK(f3.refer->text() == "bigger cow");
  CHECK_FALSE(f3.value);
}

TEST_CASE("extract_frame keeps other slots when the value is bad") {
  const auto f = extract_frame("increase the hue of the sky by 250");
  CHECK(f.attribute == Attribute::kHue);
  REQUIRE(f.refer);
  CHECK(f.refer->text() == "the sky");
  CHECK_FALSE(f.value);
  REQUIRE(f.value_error);
  CHECK(f.value_error->kind == SlotError::Kind::kOutOfRange);
  CHECK(f.value_error->token == "250");

  const auto g = extract_frame("1.5");
  REQUIRE(g.value_error);
  CHECK(g.value_error->kind == SlotError::Kind::kNotAnInteger);
}

TEST_CASE("first span of a category wins") {
  const auto f = extract_frame("set hue to 10 and saturation to 20");
  CHECK(f.attribute == Attribute::kHue);
  REQUIRE(f.value);
  CHECK(f.value->magnitude() == 10);
}

TEST_CASE("slot-only replies") {
  CHECK(extract_frame("brightness").attribute == Attribute::kBrightness);
  CHECK(extract_frame("20").value->magnitude() == 20);
  CHECK(extract_frame("-35").value->magnitude() == -35);
  CHECK(extract_frame("the smaller cow").refer->text() == "the smaller cow");
}

TEST_CASE("property: tagger output is total, aligned and valid BIO") {
  testing::Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    const std::string u = random_utterance(rng);
    const auto tokens = tokenize(u);
    const auto labels = reference_tagger().tag(tokens);
    REQUIRE(labels.size() == tokens.size());
    CHECK_MESSAGE(is_valid_bio(labels), u);
    TurnFrame frame;
    CHECK_NOTHROW(frame = extract_frame(u));
    if (frame.intent != Intent::kNone) CHECK_FALSE(frame.has_slots());
  }
}

TEST_CASE("property: decrease X by k equals change X by -k") {
  for (Attribute a : kAllAttributes) {
    const std::string name(attribute_name(a));
    for (int k = 1; k <= 100; ++k) {
      const auto d = extract_frame("decrease " + name + " by " + std::to_string(k));
      const auto c = extract_frame("change " + name + " by -" + std::to_string(k));
      REQUIRE(d.value);
      CHECK(d.attribute == c.attribute);
      CHECK(d.value == c.value);
      CHECK(d.value->magnitude() == -k);
    }
  }
}

}  // TEST_SUITE
