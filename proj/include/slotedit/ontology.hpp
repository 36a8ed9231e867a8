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

// Domain types of the adjust-only editing ontology. An ADJUST edit needs a
// mask (which depends on a referring expression), an attribute, and a value.

#ifndef SLOTEDIT_ONTOLOGY_HPP_
#define SLOTEDIT_ONTOLOGY_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slotedit {

enum class Attribute { kBrightness, kContrast, kHue, kSaturation, kLightness };

inline constexpr std::array<Attribute, 5> kAllAttributes = {
    Attribute::kBrightness, Attribute::kContrast, Attribute::kHue,
    Attribute::kSaturation, Attribute::kLightness};

// Canonical lowercase spelling used on the wire, in logs and in fixtures.
std::string_view attribute_name(Attribute attribute);

// Case-insensitive exact match against the five attribute names.
std::optional<Attribute> parse_attribute(std::string_view word);

// Signed, unit-free degree of manipulation in [-100, 100].
class EditValue {
 public:
  static constexpr int kMin = -100;
  static constexpr int kMax = 100;

  // Throws ValueOutOfRange.
  explicit EditValue(std::int64_t magnitude);

  int magnitude() const { return magnitude_; }
  double fraction() const { return magnitude_ / 100.0; }

  friend auto operator<=>(const EditValue&, const EditValue&) = default;

 private:
  int magnitude_;
};

EditValue make_edit_value(std::int64_t n);

// A referring expression. Stored trimmed; never empty.
class Refer {
 public:
  // Throws std::invalid_argument when `text` is blank.
  explicit Refer(std::string_view text);

  const std::string& text() const { return text_; }

  // Equality after trimming and case-folding; this is what "a new refer"
  // means to the state tracker.
  bool same_as(const Refer& other) const;

  friend bool operator==(const Refer&, const Refer&) = default;

 private:
  std::string text_;
};

enum class SlotName { kRefer, kMask, kAttribute, kValue };

std::string_view slot_name(SlotName slot);
std::optional<SlotName> parse_slot_name(std::string_view name);

struct DialogueAct {
  enum class Kind { kRequest, kConfirm, kQuery, kExecute };

  Kind kind = Kind::kRequest;
  // Present exactly for Request and Confirm.
  std::optional<SlotName> slot;

  static DialogueAct request(SlotName slot) { return {Kind::kRequest, slot}; }
  static DialogueAct confirm(SlotName slot) { return {Kind::kConfirm, slot}; }
  static DialogueAct query() { return {Kind::kQuery, std::nullopt}; }
  static DialogueAct execute() { return {Kind::kExecute, std::nullopt}; }

  // "Request(refer)", "Confirm(mask)", "Query", "Execute".
  std::string to_string() const;
  // Inverse of to_string(); nullopt on malformed input.
  static std::optional<DialogueAct> parse(std::string_view text);

  friend bool operator==(const DialogueAct&, const DialogueAct&) = default;
};

// Binary pixel-membership raster (row-major, 1 = selected) with the
// confidence the resolver assigned to it.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> membership;
  double confidence = 1.0;
  // Scene object the mask was taken from; informational only.
  std::string source_id;

  static Mask filled(int width, int height, bool value);

  bool contains(int x, int y) const {
    return membership[static_cast<std::size_t>(y) * width + x] != 0;
  }
  std::size_t member_count() const;
  bool well_formed() const;

  friend bool operator==(const Mask&, const Mask&) = default;
};

struct DialogueState {
  std::optional<Refer> refer;
  std::optional<Mask> mask;
  bool mask_confirmed = false;
  std::optional<Attribute> attribute;
  std::optional<EditValue> value;

  int query_count = 0;
  int execute_count = 0;
  int turn_index = 0;

  // confirmed -> mask -> refer, and execute_count <= query_count.
  bool invariants_hold() const;

  friend bool operator==(const DialogueState&, const DialogueState&) = default;
};

struct AdjustRequest {
  Mask mask;
  Attribute attribute;
  EditValue value;
};

// Builds the edit arguments when the state holds a confirmed mask plus an
// attribute and a value.
std::optional<AdjustRequest> complete_request(const DialogueState& state);

}  // namespace slotedit

#endif  // SLOTEDIT_ONTOLOGY_HPP_
