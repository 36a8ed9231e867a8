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

#include "slotedit/ontology.hpp"

#include <algorithm>
#include <stdexcept>

#include "slotedit/errors.hpp"
#include "slotedit/text.hpp"

namespace slotedit {

std::string_view attribute_name(Attribute attribute) {
  switch (attribute) {
    case Attribute::kBrightness: return "brightness";
    case Attribute::kContrast: return "contrast";
    case Attribute::kHue: return "hue";
    case Attribute::kSaturation: return "saturation";
    case Attribute::kLightness: return "lightness";
  }
  return "";
}

std::optional<Attribute> parse_attribute(std::string_view word) {
  const std::string folded = text::to_lower(word);
  for (Attribute a : kAllAttributes) {
    if (folded == attribute_name(a)) return a;
  }
  return std::nullopt;
}

EditValue::EditValue(std::int64_t magnitude) {
  if (magnitude < kMin || magnitude > kMax) throw ValueOutOfRange(magnitude);
  magnitude_ = static_cast<int>(magnitude);
}

EditValue make_edit_value(std::int64_t n) { return EditValue(n); }

Refer::Refer(std::string_view text) : text_(text::trim(text)) {
  if (text_.empty()) throw std::invalid_argument("empty referring expression");
}

bool Refer::same_as(const Refer& other) const {
  return text::to_lower(text_) == text::to_lower(other.text_);
}

std::string_view slot_name(SlotName slot) {
  switch (slot) {
    case SlotName::kRefer: return "refer";
    case SlotName::kMask: return "mask";
    case SlotName::kAttribute: return "attribute";
    case SlotName::kValue: return "value";
  }
  return "";
}

std::optional<SlotName> parse_slot_name(std::string_view name) {
  for (SlotName s : {SlotName::kRefer, SlotName::kMask, SlotName::kAttribute,
                     SlotName::kValue}) {
    if (name == slot_name(s)) return s;
  }
  return std::nullopt;
}

std::string DialogueAct::to_string() const {
  switch (kind) {
    case Kind::kRequest:
      return "Request(" + std::string(slot_name(slot.value())) + ")";
    case Kind::kConfirm:
      return "Confirm(" + std::string(slot_name(slot.value())) + ")";
    case Kind::kQuery: return "Query";
    case Kind::kExecute: return "Execute";
  }
  return "";
}

std::optional<DialogueAct> DialogueAct::parse(std::string_view text) {
  if (text == "Query") return query();
  if (text == "Execute") return execute();
  auto with_slot = [&](std::string_view prefix) -> std::optional<SlotName> {
    if (!text.starts_with(prefix) || !text.ends_with(")")) return std::nullopt;
    return parse_slot_name(
        text.substr(prefix.size(), text.size() - prefix.size() - 1));
  };
  if (auto s = with_slot("Request(")) return request(*s);
  if (auto s = with_slot("Confirm(")) return confirm(*s);
  return std::nullopt;
}

Mask Mask::filled(int width, int height, bool value) {
  Mask m;
  m.width = width;
  m.height = height;
  m.membership.assign(static_cast<std::size_t>(width) * height, value ? 1 : 0);
  return m;
}

std::size_t Mask::member_count() const {
  return static_cast<std::size_t>(
      std::count_if(membership.begin(), membership.end(),
                    [](std::uint8_t v) { return v != 0; }));
}

bool Mask::well_formed() const {
  return width > 0 && height > 0 &&
         membership.size() == static_cast<std::size_t>(width) * height &&
         confidence >= 0.0 && confidence <= 1.0;
}

bool DialogueState::invariants_hold() const {
  if (mask_confirmed && !mask) return false;
  if (mask && !refer) return false;
  if (query_count < 0 || execute_count < 0 || turn_index < 0) return false;
  return execute_count <= query_count;
}

std::optional<AdjustRequest> complete_request(const DialogueState& state) {
  if (!state.mask || !state.mask_confirmed || !state.attribute || !state.value) {
    return std::nullopt;
  }
  return AdjustRequest{*state.mask, *state.attribute, *state.value};
}

}  // namespace slotedit
