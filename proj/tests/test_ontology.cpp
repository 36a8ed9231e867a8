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

#include "slotedit/errors.hpp"
#include "slotedit/ontology.hpp"
#include "support.hpp"

using namespace slotedit;

TEST_SUITE("ontology") {

TEST_CASE("parse_attribute accepts the five names case-insensitively") {
  CHECK(parse_attribute("hue") == Attribute::kHue);
  CHECK(parse_attribute("Brightness") == Attribute::kBrightness);
  CHECK(parse_attribute("LIGHTNESS") == Attribute::kLightness);
  CHECK_FALSE(parse_attribute("sharpness"));
  CHECK_FALSE(parse_attribute(""));
  CHECK_FALSE(parse_attribute("hues"));
}

TEST_CASE("attribute names round-trip") {
  for (Attribute a : kAllAttributes) CHECK(parse_attribute(attribute_name(a)) == a);
  CHECK(attribute_name(Attribute::kContrast) == "contrast");
  CHECK(attribute_name(Attribute::kSaturation) == "saturation");
}

TEST_CASE("make_edit_value enforces the range") {
  CHECK(make_edit_value(0).magnitude() == 0);
  CHECK(make_edit_value(-100).magnitude() == -100);
  CHECK(make_edit_value(100).magnitude() == 100);
  CHECK_THROWS_AS(make_edit_value(150), ValueOutOfRange);
  CHECK_THROWS_AS(make_edit_value(-101), ValueOutOfRange);
  try {
    make_edit_value(150);
  } catch (const ValueOutOfRange& e) {
    CHECK(e.value() == 150);
  }
  CHECK(make_edit_value(-25).fraction() == doctest::Approx(-0.25));
}

TEST_CASE("Refer is trimmed and never blank") {
  CHECK(Refer("  the cow ").text() == "the cow");
  CHECK_THROWS_AS(Refer("   "), std::invalid_argument);
  CHECK_THROWS_AS(Refer(""), std::invalid_argument);
  CHECK(Refer("The Cow").same_as(Refer("the cow ")));
  CHECK_FALSE(Refer("the cow").same_as(Refer("the barn")));
}

TEST_CASE("dialogue acts print and parse") {
  const DialogueAct acts[] = {DialogueAct::request(SlotName::kRefer),
                              DialogueAct::request(SlotName::kAttribute),
                              DialogueAct::request(SlotName::kValue),
                              DialogueAct::confirm(SlotName::kMask),
                              DialogueAct::query(), DialogueAct::execute()};
  CHECK(acts[0].to_string() == "Request(refer)");
  CHECK(acts[3].to_string() == "Confirm(mask)");
  CHECK(acts[4].to_string() == "Query");
  for (const auto& a : acts) CHECK(DialogueAct::parse(a.to_string()) == a);
  CHECK_FALSE(DialogueAct::parse("Request"));
  CHECK_FALSE(DialogueAct::parse("Query(mask)"));
  CHECK_FALSE(DialogueAct::parse("Request(colour)"));
}

TEST_CASE("slot names round-trip") {
  for (SlotName s : {SlotName::kRefer, SlotName::kMask, SlotName::kAttribute, SlotName::kValue}) {
    CHECK(parse_slot_name(slot_name(s)) == s);
  }
  CHECK_FALSE(parse_slot_name("image"));
}

TEST_CASE("mask helpers") {
  Mask m = Mask::filled(3, 2, false);
  CHECK(m.well_formed());
  CHECK(m.member_count() == 0);
  m.membership[4] = 1;
  CHECK(m.contains(1, 1));
  CHECK(m.member_count() == 1);
  m.confidence = 1.5;
  CHECK_FALSE(m.well_formed());
  m.confidence = 0.5;
  m.membership.pop_back();
  CHECK_FALSE(m.well_formed());
}

TEST_CASE("dialogue state invariants") {
  DialogueState s;
  CHECK(s.invariants_hold());
  s.mask = Mask::filled(2, 2, true);
  CHECK_FALSE(s.invariants_hold());  // mask without refer
  s.refer = Refer("the cow");
  CHECK(s.invariants_hold());
  s.mask_confirmed = true;
  CHECK(s.invariants_hold());
  s.mask.reset();
  CHECK_FALSE(s.invariants_hold());  // confirmed without mask
  s = {};
  s.execute_count = 1;
  CHECK_FALSE(s.invariants_hold());
  s.query_count = 1;
  CHECK(s.invariants_hold());
}

TEST_CASE("complete_request needs a confirmed mask, an attribute and a value") {
  DialogueState s;
  s.refer = Refer("the cow");
  s.mask = Mask::filled(2, 2, true);
  s.attribute = Attribute::kHue;
  s.value = make_edit_value(10);
  CHECK_FALSE(complete_request(s));
  s.mask_confirmed = true;
  auto r = complete_request(s);
  REQUIRE(r);
  CHECK(r->attribute == Attribute::kHue);
  CHECK(r->value.magnitude() == 10);
  s.value.reset();
  CHECK_FALSE(complete_request(s));
}

}  // TEST_SUITE
