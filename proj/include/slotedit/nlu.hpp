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

// Utterance understanding: tokenization, BIO tagging of ACTION / REFER /
// ATTRIBUTE / VALUE spans, value sign normalization and yes/no detection.

#ifndef SLOTEDIT_NLU_HPP_
#define SLOTEDIT_NLU_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slotedit/ontology.hpp"

namespace slotedit::nlu {

struct Token {
  std::string text;  // lowercased
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Lowercased whitespace tokens; trailing . , ! ? become their own tokens and a
// leading sign stays attached to a number ("-10").
std::vector<Token> tokenize(std::string_view text);

// Span categories, in report column order.
enum class SpanCategory { kAction, kAttribute, kRefer, kValue };

inline constexpr std::array<SpanCategory, 4> kAllCategories = {
    SpanCategory::kAction, SpanCategory::kAttribute, SpanCategory::kRefer,
    SpanCategory::kValue};

std::string_view category_name(SpanCategory category);  // "ACTION", ...

enum class BioLabel {
  kO,
  kBAction,
  kIAction,
  kBRefer,
  kIRefer,
  kBAttribute,
  kIAttribute,
  kBValue,
  kIValue,
};

std::string_view label_name(BioLabel label);  // "O", "B-ACTION", ...
std::optional<BioLabel> parse_label(std::string_view name);
BioLabel begin_label(SpanCategory category);
BioLabel inside_label(SpanCategory category);
std::optional<SpanCategory> label_category(BioLabel label);
bool is_inside(BioLabel label);

// No I-X after O, after a different category, or at position 0.
bool is_valid_bio(std::span<const BioLabel> labels);

// Half-open token range [begin, end).
struct Span {
  SpanCategory category;
  std::size_t begin;
  std::size_t end;

  friend bool operator==(const Span&, const Span&) = default;
};

// Spans in order of appearance. An orphan I-X opens a new span, so the
// function is total over invalid sequences too.
std::vector<Span> extract_spans(std::span<const BioLabel> labels);

// Pluggable sequence labeler. Implementations must return one label per
// token forming a valid BIO sequence, and must be safe to call concurrently.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<BioLabel> tag(std::span<const Token> tokens) const = 0;
};

// Deterministic grammar tagger over abstracted token forms.
class RuleTagger final : public Tagger {
 public:
  std::vector<BioLabel> tag(std::span<const Token> tokens) const override;
};

const Tagger& reference_tagger();

// Replaces attribute names by "<attribute>" and numeric tokens by "<value>",
// the closed-class abstraction the tagger works on.
std::vector<std::string> abstract_forms(std::span<const Token> tokens);

namespace lexicon {
inline constexpr std::array<std::string_view, 12> kActions = {
    "increase", "decrease", "raise", "lower", "reduce", "boost",
    "change",   "set",      "adjust", "modify", "make",  "turn"};
inline constexpr std::array<std::string_view, 3> kNegativeActions = {
    "decrease", "lower", "reduce"};
inline constexpr std::array<std::string_view, 6> kDeterminers = {
    "the", "a", "an", "this", "that", "my"};
inline constexpr std::array<std::string_view, 4> kReferPrepositions = {
    "of", "on", "in", "for"};
// Words that end a referring expression.
inline constexpr std::array<std::string_view, 7> kFunctionWords = {
    "by", "to", "please", "more", "less", "brighter", "darker"};
inline constexpr std::array<std::string_view, 6> kAffirm = {
    "yes", "y", "yeah", "yep", "correct", "sure"};
inline constexpr std::array<std::string_view, 5> kDeny = {
    "no", "n", "nope", "wrong", "incorrect"};

bool is_action(std::string_view word);
bool is_negative_action(std::string_view word);
bool is_determiner(std::string_view word);
bool is_refer_preposition(std::string_view word);
bool is_function_word(std::string_view word);
bool is_punctuation(std::string_view word);
// Optionally signed digits, optionally with a fractional part.
bool is_numeric(std::string_view word);
}  // namespace lexicon

// Signed value from a VALUE token: -|v| after a negative action, v otherwise.
// Throws NotAnInteger or ValueOutOfRange.
EditValue normalize_value(std::string_view value_token, bool action_negative);

enum class Intent { kNone, kAffirm, kDeny };

std::string_view intent_name(Intent intent);
std::optional<Intent> parse_intent(std::string_view name);

// Whole-utterance match, trimmed and case-insensitive. Terminal punctuation
// is ignored ("Yes." is an affirmation).
Intent match_intent(std::string_view text);

// Why a VALUE span could not become an EditValue.
struct SlotError {
  enum class Kind { kOutOfRange, kNotAnInteger };
  Kind kind;
  std::string token;

  friend bool operator==(const SlotError&, const SlotError&) = default;
};

struct TurnFrame {
  std::optional<Refer> refer;
  std::optional<Attribute> attribute;
  std::optional<EditValue> value;
  bool action_negative = false;
  Intent intent = Intent::kNone;
  std::optional<SlotError> value_error;

  bool has_slots() const { return refer || attribute || value; }

  friend bool operator==(const TurnFrame&, const TurnFrame&) = default;
};

// Total: every input yields a frame. Yes/no replies short-circuit to an
// intent-only frame; otherwise the first span of each category wins.
TurnFrame extract_frame(std::string_view text,
                        const Tagger& tagger = reference_tagger());

}  // namespace slotedit::nlu

#endif  // SLOTEDIT_NLU_HPP_
