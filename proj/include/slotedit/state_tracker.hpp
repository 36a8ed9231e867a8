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

// Aggregation of per-turn NLU frames into the dialogue state.
//
// Rules:
//   * a slot present in the frame overwrites the tracked slot;
//   * a refer that differs from the tracked one (trimmed, case-folded)
//     drops the mask and its confirmation;
//   * affirming a pending mask confirms it, denying drops mask and refer;
//   * after an Execute all four slots are cleared, counters are kept.

#ifndef SLOTEDIT_STATE_TRACKER_HPP_
#define SLOTEDIT_STATE_TRACKER_HPP_

#include <span>
#include <string>
#include <vector>

#include "slotedit/nlu.hpp"
#include "slotedit/ontology.hpp"

namespace slotedit::tracker {

namespace rule {
inline constexpr const char* kFillRefer = "fill_refer";
inline constexpr const char* kFillAttribute = "fill_attribute";
inline constexpr const char* kFillValue = "fill_value";
inline constexpr const char* kDropMaskOnNewRefer = "drop_mask_on_new_refer";
inline constexpr const char* kAffirmMask = "affirm_mask";
inline constexpr const char* kDenyMask = "deny_mask";
inline constexpr const char* kAdvanceTurn = "advance_turn";
}  // namespace rule

struct StateTransition {
  DialogueState before;
  nlu::TurnFrame frame;
  DialogueState after;
  std::vector<std::string> rules_fired;
};

// Slot aggregation for a frame without a yes/no intent. Throws
// InvalidContext if the frame carries an intent.
DialogueState update(const DialogueState& state, const nlu::TurnFrame& frame);

// Resolution of a pending Confirm(mask). Throws InvalidContext unless the
// state holds an unconfirmed mask and `intent` is Affirm or Deny.
DialogueState apply_confirmation(const DialogueState& state, nlu::Intent intent);

// Clears refer, mask, attribute and value; keeps the counters.
DialogueState reset_after_execute(const DialogueState& state);

// True when the state is waiting for a yes/no about its mask.
bool awaiting_mask_confirmation(const DialogueState& state);

// Dispatches to apply_confirmation or update and records the rules fired.
// A yes/no reply with no mask pending changes nothing but the turn index.
StateTransition transition(const DialogueState& state, const nlu::TurnFrame& frame);

// Re-derives every recorded transition from its `before` state and frame and
// returns the last `after` (or `initial` for an empty log). Throws
// InvalidContext on the first transition that does not reproduce.
DialogueState replay(std::span<const StateTransition> transitions,
                     const DialogueState& initial = {});

}  // namespace slotedit::tracker

#endif  // SLOTEDIT_STATE_TRACKER_HPP_
