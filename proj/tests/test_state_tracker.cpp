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

#include <algorithm>

#include "slotedit/errors.hpp"
#include "slotedit/state_tracker.hpp"
#include "support.hpp"

using namespace slotedit;
using namespace slotedit::tracker;
using nlu::Intent;
using nlu::TurnFrame;

namespace {

Mask some_mask() { return Mask::filled(4, 4, true); }

TurnFrame refer_frame(const char* text) {
  TurnFrame f;
  f.refer = Refer(text);
  return f;
}

TurnFrame intent_frame(Intent intent) {
  TurnFrame f;
  f.intent = intent;
  return f;
}

bool has_rule(const StateTransition& t, const char* rule) {
  return std::find(t.rules_fired.begin(), t.rules_fired.end(), rule) != t.rules_fired.end();
}

TurnFrame random_frame(testing::Rng& rng) {
  static const char* refers[] = {"the cow", "The Cow", "the barn", "left cow", "sky"};
  TurnFrame f;
  if (rng.coin(0.25)) {
    f.intent = rng.coin() ? Intent::kAffirm : Intent::kDeny;
    return f;
  }
  if (rng.coin(0.5)) f.refer = Refer(rng.pick(refers));
  if (rng.coin(0.4)) f.attribute = rng.pick(kAllAttributes);
  if (rng.coin(0.4)) f.value = make_edit_value(rng.integer(-100, 100));
  return f;
}

// Stands in for the dialogue manager between user turns: a Query attaches a
// mask to a pending refer, an Execute clears a complete frame.
DialogueState environment(const DialogueState& s, testing::Rng& rng) {
  DialogueState next = s;
  if (next.refer && !next.mask && rng.coin(0.7)) {
    next.mask = some_mask();
    ++next.query_count;
  }
  if (complete_request(next)) {
    ++next.execute_count;
    next = reset_after_execute(next);
  }
  return next;
}

}  // namespace

TEST_SUITE("state_tracker") {

TEST_CASE("a new refer drops the mask") {
  DialogueState s;
  s.refer = Refer("the cow");
  s.mask = some_mask();
  s.mask_confirmed = true;
  const auto t = transition(s, refer_frame("the barn"));
  CHECK(t.after.refer->text() == "the barn");
  CHECK_FALSE(t.after.mask);
  CHECK_FALSE(t.after.mask_confirmed);
  CHECK(has_rule(t, rule::kDropMaskOnNewRefer));
  CHECK(t.after == update(s, refer_frame("the barn")));
}

TEST_CASE("filling an empty slot") {
  TurnFrame f;
  f.attribute = Attribute::kBrightness;
  const auto after = update({}, f);
  CHECK(after.attribute == Attribute::kBrightness);
  CHECK(after.turn_index == 1);
  CHECK_FALSE(after.refer);
}

TEST_CASE("the same refer keeps the mask") {
  DialogueState s;
  s.refer = Refer("the cow");
  s.mask = some_mask();
  const auto after = update(s, refer_frame("the cow"));
  CHECK(after.mask);
  CHECK(update(s, refer_frame("  THE COW ")).mask);
}

TEST_CASE("confirmation") {
  DialogueState s;
  s.refer = Refer("the cow");
  s.mask = some_mask();
  const auto yes = apply_confirmation(s, Intent::kAffirm);
  CHECK(yes.mask_confirmed);
  CHECK(yes.mask);
  const auto no = apply_confirmation(s, Intent::kDeny);
  CHECK_FALSE(no.refer);
  CHECK_FALSE(no.mask);
  CHECK_FALSE(no.mask_confirmed);
  CHECK_THROWS_AS(apply_confirmation(DialogueState{}, Intent::kAffirm), InvalidContext);
  CHECK_THROWS_AS(apply_confirmation(yes, Intent::kAffirm), InvalidContext);
  CHECK_THROWS_AS(apply_confirmation(s, Intent::kNone), InvalidContext);
  CHECK_THROWS_AS(update(s, intent_frame(Intent::kAffirm)), InvalidContext);
}

TEST_CASE("yes or no with nothing to confirm only advances the turn") {
  DialogueState s;
  s.attribute = Attribute::kHue;
  const auto t = transition(s, intent_frame(Intent::kAffirm));
  DialogueState expected = s;
  expected.turn_index = 1;
  CHECK(t.after == expected);
}

TEST_CASE("reset after execute") {
  DialogueState s;
  s.refer = Refer("the cow");
  s.mask = some_mask();
  s.mask_confirmed = true;
  s.attribute = Attribute::kHue;
  s.value = make_edit_value(30);
  s.query_count = 3;
  s.execute_count = 2;
  s.turn_index = 9;
  const auto r = reset_after_execute(s);
  CHECK_FALSE(r.refer);
  CHECK_FALSE(r.mask);
  CHECK_FALSE(r.attribute);
  CHECK_FALSE(r.value);
  CHECK_FALSE(r.mask_confirmed);
  CHECK(r.query_count == 3);
  CHECK(r.execute_count == 2);
  CHECK(r.turn_index == 9);
  CHECK(reset_after_execute(r) == r);
}

TEST_CASE("property: random turns keep invariants, never lose unmentioned slots, replay") {
  testing::Rng rng(2024);
  for (int run = 0; run < 300; ++run) {
    DialogueState s;
    std::vector<StateTransition> log;
    const int turns = rng.integer(1, 25);
    for (int i = 0; i < turns; ++i) {
      s = environment(s, rng);
      const TurnFrame f = random_frame(rng);
      const auto t = transition(s, f);
      REQUIRE(t.after.invariants_hold());
      CHECK(t.after.turn_index == s.turn_index + 1);
      if (f.intent == Intent::kNone) {
        if (!f.attribute) CHECK(t.after.attribute == s.attribute);
        if (!f.value) CHECK(t.after.value == s.value);
        if (!f.refer) {
          CHECK(t.after.refer == s.refer);
          CHECK(t.after.mask == s.mask);
        }
      }
      log.push_back(t);
      s = t.after;
    }
    CHECK(replay(log) == s);
  }
}

TEST_CASE("replay rejects a tampered transition") {
  std::vector<StateTransition> log = {transition({}, refer_frame("the cow"))};
  CHECK(replay(log).refer->text() == "the cow");
  log[0].after.attribute = Attribute::kHue;
  CHECK_THROWS_AS(replay(log), InvalidContext);
  CHECK(replay({}, log[0].before) == log[0].before);
}

}  // TEST_SUITE
