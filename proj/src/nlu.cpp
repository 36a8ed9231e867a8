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

#include "slotedit/nlu.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "slotedit/errors.hpp"
#include "slotedit/text.hpp"

namespace slotedit::nlu {

namespace {

bool is_terminal_punct(char c) { return c == '.' || c == ',' || c == '!' || c == '?'; }

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& words, std::string_view w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end == i) break;

    // Peel terminal punctuation off the right edge.
    std::size_t word_end = end;
    while (word_end > i && is_terminal_punct(text[word_end - 1])) --word_end;
    if (word_end > i) {
      tokens.push_back({text::to_lower(text.substr(i, word_end - i)), i, word_end});
    }
    for (std::size_t p = word_end; p < end; ++p) {
      tokens.push_back({std::string(1, text[p]), p, p + 1});
    }
    i = end;
  }
  return tokens;
}

std::string_view category_name(SpanCategory category) {
  switch (category) {
    case SpanCategory::kAction: return "ACTION";
    case SpanCategory::kAttribute: return "ATTRIBUTE";
    case SpanCategory::kRefer: return "REFER";
    case SpanCategory::kValue: return "VALUE";
  }
  return "";
}

std::string_view label_name(BioLabel label) {
  switch (label) {
    case BioLabel::kO: return "O";
    case BioLabel::kBAction: return "B-ACTION";
    case BioLabel::kIAction: return "I-ACTION";
    case BioLabel::kBRefer: return "B-REFER";
    case BioLabel::kIRefer: return "I-REFER";
    case BioLabel::kBAttribute: return "B-ATTRIBUTE";
    case BioLabel::kIAttribute: return "I-ATTRIBUTE";
    case BioLabel::kBValue: return "B-VALUE";
    case BioLabel::kIValue: return "I-VALUE";
  }
  return "";
}

std::optional<BioLabel> parse_label(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(BioLabel::kIValue); ++i) {
    auto label = static_cast<BioLabel>(i);
    if (label_name(label) == name) return label;
  }
  return std::nullopt;
}

BioLabel begin_label(SpanCategory category) {
  switch (category) {
    case SpanCategory::kAction: return BioLabel::kBAction;
    case SpanCategory::kAttribute: return BioLabel::kBAttribute;
    case SpanCategory::kRefer: return BioLabel::kBRefer;
    case SpanCategory::kValue: return BioLabel::kBValue;
  }
  return BioLabel::kO;
}

BioLabel inside_label(SpanCategory category) {
  switch (category) {
    case SpanCategory::kAction: return BioLabel::kIAction;
    case SpanCategory::kAttribute: return BioLabel::kIAttribute;
    case SpanCategory::kRefer: return BioLabel::kIRefer;
    case SpanCategory::kValue: return BioLabel::kIValue;
  }
  return BioLabel::kO;
}

std::optional<SpanCategory> label_category(BioLabel label) {
  switch (label) {
    case BioLabel::kO: return std::nullopt;
    case BioLabel::kBAction:
    case BioLabel::kIAction: return SpanCategory::kAction;
    case BioLabel::kBRefer:
    case BioLabel::kIRefer: return SpanCategory::kRefer;
    case BioLabel::kBAttribute:
    case BioLabel::kIAttribute: return SpanCategory::kAttribute;
    case BioLabel::kBValue:
    case BioLabel::kIValue: return SpanCategory::kValue;
  }
  return std::nullopt;
}

bool is_inside(BioLabel label) {
  return label == BioLabel::kIAction || label == BioLabel::kIRefer ||
         label == BioLabel::kIAttribute || label == BioLabel::kIValue;
}

bool is_valid_bio(std::span<const BioLabel> labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!is_inside(labels[i])) continue;
    if (i == 0) return false;
    if (label_category(labels[i - 1]) != label_category(labels[i])) return false;
  }
  return true;
}

std::vector<Span> extract_spans(std::span<const BioLabel> labels) {
  std::vector<Span> spans;
  std::size_t i = 0;
  while (i < labels.size()) {
    auto category = label_category(labels[i]);
    if (!category) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < labels.size() && labels[end] == inside_label(*category)) ++end;
    spans.push_back({*category, i, end});
    i = end;
  }
  return spans;
}

namespace lexicon {
bool is_action(std::string_view word) { return contains(kActions, word); }
bool is_negative_action(std::string_view word) { return contains(kNegativeActions, word); }
bool is_determiner(std::string_view word) { return contains(kDeterminers, word); }
bool is_refer_preposition(std::string_view word) { return contains(kReferPrepositions, word); }
bool is_function_word(std::string_view word) { return contains(kFunctionWords, word); }

bool is_punctuation(std::string_view word) {
  return word.size() == 1 && is_terminal_punct(word[0]);
}

bool is_numeric(std::string_view word) {
  std::size_t i = 0;
  if (i < word.size() && (word[i] == '-' || word[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == word.size()) return true;
  if (word[i] != '.') return false;
  ++i;
  std::size_t frac = 0;
  while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i]))) ++i, ++frac;
  return frac > 0 && i == word.size();
}
}  // namespace lexicon

std::vector<std::string> abstract_forms(std::span<const Token> tokens) {
  std::vector<std::string> forms;
  forms.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (parse_attribute(t.text)) {
      forms.emplace_back("<attribute>");
    } else if (lexicon::is_numeric(t.text)) {
      forms.emplace_back("<value>");
    } else {
      forms.push_back(t.text);
    }
  }
  return forms;
}

std::vector<BioLabel> RuleTagger::tag(std::span<const Token> tokens) const {
  const std::vector<std::string> forms = abstract_forms(tokens);
  const std::size_t n = forms.size();
  std::vector<BioLabel> labels(n, BioLabel::kO);

  std::optional<std::size_t> first_attribute;
  for (std::size_t i = 0; i < n; ++i) {
    if (forms[i] == "<value>") {
      labels[i] = BioLabel::kBValue;
    } else if (forms[i] == "<attribute>") {
      labels[i] = BioLabel::kBAttribute;
      if (!first_attribute) first_attribute = i;
    }
  }

  std::optional<std::size_t> action;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == BioLabel::kO && lexicon::is_action(forms[i])) {
      labels[i] = BioLabel::kBAction;
      action = i;
      break;
    }
  }

  auto can_extend = [&](std::size_t i) {
    return labels[i] == BioLabel::kO && !lexicon::is_function_word(forms[i]) &&
           !lexicon::is_punctuation(forms[i]);
  };
  auto run_end = [&](std::size_t begin) {
    std::size_t end = begin;
    while (end < n && can_extend(end)) ++end;
    return end;
  };
  auto mark_refer = [&](std::size_t begin, std::size_t end) {
    labels[begin] = BioLabel::kBRefer;
    for (std::size_t i = begin + 1; i < end; ++i) labels[i] = BioLabel::kIRefer;
  };

  // "<attribute> of|on|in|for <refer ...>"
  if (first_attribute && *first_attribute + 2 <= n) {
    const std::size_t prep = *first_attribute + 1;
    if (prep < n && labels[prep] == BioLabel::kO &&
        lexicon::is_refer_preposition(forms[prep]) && prep + 1 < n) {
      const std::size_t end = run_end(prep + 1);
      if (end > prep + 1) {
        mark_refer(prep + 1, end);
        return labels;
      }
    }
  }

  // Otherwise a determiner-led phrase after the action (anywhere when the
  // utterance has no action, e.g. a bare "the left cow" reply).
  std::size_t i = action ? *action + 1 : 0;
  while (i < n) {
    if (labels[i] == BioLabel::kO && lexicon::is_determiner(forms[i])) {
      const std::size_t end = run_end(i);
      if (end - i >= 2) {
        mark_refer(i, end);
        break;
      }
    }
    ++i;
  }
  return labels;
}

const Tagger& reference_tagger() {
  static const RuleTagger tagger;
  return tagger;
}

EditValue normalize_value(std::string_view value_token, bool action_negative) {
  if (!lexicon::is_numeric(value_token)) throw NotAnInteger(std::string(value_token));
  if (value_token.find('.') != std::string_view::npos) {
    throw NotAnInteger(std::string(value_token));
  }
  std::string_view digits = value_token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw ValueOutOfRange(digits.front() == '-' ? std::numeric_limits<std::int64_t>::min()
                                                : std::numeric_limits<std::int64_t>::max());
  }
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw NotAnInteger(std::string(value_token));
  }
  if (action_negative) v = v < 0 ? v : -v;
  return make_edit_value(v);
}

std::string_view intent_name(Intent intent) {
  switch (intent) {
    case Intent::kNone: return "none";
    case Intent::kAffirm: return "affirm";
    case Intent::kDeny: return "deny";
  }
  return "";
}

std::optional<Intent> parse_intent(std::string_view name) {
  for (Intent i : {Intent::kNone, Intent::kAffirm, Intent::kDeny}) {
    if (intent_name(i) == name) return i;
  }
  return std::nullopt;
}

Intent match_intent(std::string_view text) {
  std::string s = text::to_lower(text::trim(text));
  while (!s.empty() && is_terminal_punct(s.back())) s.pop_back();
  s = text::trim(s);
  if (contains(lexicon::kAffirm, s)) return Intent::kAffirm;
  if (contains(lexicon::kDeny, s)) return Intent::kDeny;
  return Intent::kNone;
}

TurnFrame extract_frame(std::string_view text, const Tagger& tagger) {
  TurnFrame frame;
  frame.intent = match_intent(text);
  if (frame.intent != Intent::kNone) return frame;

  const std::vector<Token> tokens = tokenize(text);
  const std::vector<BioLabel> labels = tagger.tag(tokens);
  if (labels.size() != tokens.size()) {
    throw Error("tagger returned " + std::to_string(labels.size()) + " labels for " +
                std::to_string(tokens.size()) + " tokens");
  }

  auto span_text = [&](const Span& s) {
    std::vector<std::string> words;
    for (std::size_t i = s.begin; i < s.end; ++i) words.push_back(tokens[i].text);
    return text::join(words, " ");
  };

  std::optional<Span> first[4];
  for (const Span& s : extract_spans(labels)) {
    auto& slot = first[static_cast<int>(s.category)];
    if (!slot) slot = s;
  }

  if (const auto& s = first[static_cast<int>(SpanCategory::kAction)]) {
    frame.action_negative = lexicon::is_negative_action(tokens[s->begin].text);
  }
  if (const auto& s = first[static_cast<int>(SpanCategory::kRefer)]) {
    const std::string words = span_text(*s);
    if (!text::trim(words).empty()) frame.refer = Refer(words);
  }
  if (const auto& s = first[static_cast<int>(SpanCategory::kAttribute)]) {
    frame.attribute = parse_attribute(span_text(*s));
  }
  if (const auto& s = first[static_cast<int>(SpanCategory::kValue)]) {
    const std::string& token = tokens[s->begin].text;
    try {
      frame.value = normalize_value(token, frame.action_negative);
    } catch (const ValueOutOfRange&) {
      frame.value_error = SlotError{SlotError::Kind::kOutOfRange, token};
    } catch (const NotAnInteger&) {
      frame.value_error = SlotError{SlotError::Kind::kNotAnInteger, token};
    }
  }
  return frame;
}

}  // namespace slotedit::nlu
