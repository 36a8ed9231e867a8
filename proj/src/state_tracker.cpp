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

#include "slotedit/state_tracker.hpp"

#include "slotedit/errors.hpp"

namespace slotedit::tracker {

namespace {

DialogueState update_impl(const DialogueState& state, const nlu::TurnFrame& frame,
                          std::vector<std::string>* rules) {
  if (frame.intent != nlu::Intent::kNone) {
    throw InvalidContext("update() given a yes/no frame; use apply_confirmation()");
  }
  auto fired = [&](const char* r) {
    if (rules) rules->emplace_back(r);
  };

  DialogueState next = state;
  if (frame.refer) {
    if (!state.refer || !state.refer->same_as(*frame.refer)) {
      if (next.mask) fired(rule::kDropMaskOnNewRefer);
      next.mask.reset();
      next.mask_confirmed = false;
    }
    next.refer = frame.refer;
    fired(rule::kFillRefer);
  }
  if (frame.attribute) {
    next.attribute = frame.attribute;
    fired(rule::kFillAttribute);
  }
  if (frame.value) {
    next.value = frame.value;
    fired(rule::kFillValue);
  }
  ++next.turn_index;
  fired(rule::kAdvanceTurn);
  return next;
}

DialogueState confirm_impl(const DialogueState& state, nlu::Intent intent,
                           std::vector<std::string>* rules) {
  if (!awaiting_mask_confirmation(state)) {
    throw InvalidContext("no unconfirmed mask to confirm");
  }
  DialogueState next = state;
  switch (intent) {
    case nlu::Intent::kAffirm:
      next.mask_confirmed = true;
      if (rules) rules->emplace_back(rule::kAffirmMask);
      break;
    case nlu::Intent::kDeny:
      next.mask.reset();
      next.refer.reset();
      next.mask_confirmed = false;
      if (rules) rules->emplace_back(rule::kDenyMask);
      break;
    case nlu::Intent::kNone:
      throw InvalidContext("apply_confirmation() needs a yes or no");
  }
  ++next.turn_index;
  if (rules) rules->emplace_back(rule::kAdvanceTurn);
  return next;
}

}  // namespace

DialogueState update(const DialogueState& state, const nlu::TurnFrame& frame) {
  return update_impl(state, frame, nullptr);
}

DialogueState apply_confirmation(const DialogueState& state, nlu::Intent intent) {
  return confirm_impl(state, intent, nullptr);
}

DialogueState reset_after_execute(const DialogueState& state) {
  DialogueState next = state;
  next.refer.reset();
  next.mask.reset();
  next.mask_confirmed = false;
  next.attribute.reset();
  next.value.reset();
  return next;
}

bool awaiting_mask_confirmation(const DialogueState& state) {
  return state.mask.has_value() && !state.mask_confirmed;
}

StateTransition transition(const DialogueState& state, const nlu::TurnFrame& frame) {
  StateTransition t{state, frame, state, {}};
  if (frame.intent == nlu::Intent::kNone) {
    t.after = update_impl(state, frame, &t.rules_fired);
  } else if (awaiting_mask_confirmation(state)) {
    t.after = confirm_impl(state, frame.intent, &t.rules_fired);
  } else {
    ++t.after.turn_index;
    t.rules_fired.emplace_back(rule::kAdvanceTurn);
  }
  return t;
}

DialogueState replay(std::span<const StateTransition> transitions, const DialogueState& initial) {
  DialogueState last = initial;
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const StateTransition& recorded = transitions[i];
    const StateTransition again = transition(recorded.before, recorded.frame);
    if (!(again.after == recorded.after) || again.rules_fired != recorded.rules_fired) {
      throw InvalidContext("transition " + std::to_string(i) + " does not replay");
    }
    last = again.after;
  }
  return last;
}

}  // namespace slotedit::tracker
