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

// Rule-based policy, template responses and the per-session turn loop.
//
// The policy fills slots in a fixed order: refer, mask (Query the vision
// engine, then Confirm the mask with the user), attribute, value, and then
// Executes the adjustment. Query and the Confirm that follows it are answered
// in a single system turn; the log records both acts.

#ifndef SLOTEDIT_DIALOGUE_MANAGER_HPP_
#define SLOTEDIT_DIALOGUE_MANAGER_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slotedit/dialogue_log.hpp"
#include "slotedit/errors.hpp"
#include "slotedit/image.hpp"
#include "slotedit/nlu.hpp"
#include "slotedit/ontology.hpp"
#include "slotedit/state_tracker.hpp"
#include "slotedit/vision_engine.hpp"

namespace slotedit::dialogue {

// First unmet requirement in the order refer, mask, mask confirmation,
// attribute, value; Execute once everything is in place.
DialogueAct next_act(const DialogueState& state);

// Response templates keyed by act ("request.refer", "confirm.mask", "query",
// "execute", ...) or by situation ("greeting", "no_detection", ...).
// Placeholders: {refer} {attribute} {value} {attributes} {range} {token}.
class TemplateSet {
 public:
  static TemplateSet defaults();

  // key=template lines; blank lines and lines starting with '#' are skipped.
  // Entries override `base`. Throws Error on malformed lines or unknown keys.
  static TemplateSet parse(std::string_view content, TemplateSet base = defaults());
  static TemplateSet load(const std::filesystem::path& path, TemplateSet base = defaults());

  void set(std::string key, std::string text) { templates_[std::move(key)] = std::move(text); }
  bool has(const std::string& key) const { return templates_.count(key) != 0; }
  // Throws MissingTemplate.
  const std::string& get(const std::string& key) const;

  static const std::vector<std::string>& known_keys();

 private:
  std::map<std::string, std::string> templates_;
};

inline constexpr std::string_view kValueRangeText = "(-100 to 100)";
inline constexpr std::string_view kConfirmMaskPrompt =
    "Is the current detected region correct? (yes/no)";

std::string template_key(const DialogueAct& act);

// Fills the act's template from `state`. Throws MissingTemplate.
std::string render_response(const DialogueAct& act, const DialogueState& state,
                            const TemplateSet& templates);

// Fills a situation template; `extra` supplies additional placeholders.
std::string render_named(const std::string& key, const DialogueState& state,
                         const TemplateSet& templates,
                         const std::map<std::string, std::string>& extra = {});

struct SystemTurn {
  DialogueAct act;                // outward act of this turn
  std::vector<DialogueAct> acts;  // all acts, e.g. {Query, Confirm(mask)}
  std::string utterance;
  bool mask_overlay_present = false;  // only with Confirm(mask)
  bool image_updated = false;         // only with Execute
  bool session_closed = false;
};

class SessionClosed : public Error {
 public:
  SessionClosed() : Error("session is closed") {}
};

struct SessionConfig {
  std::shared_ptr<const nlu::Tagger> tagger;
  std::shared_ptr<const vision::Resolver> resolver;
  std::shared_ptr<const TemplateSet> templates;
  // Close the session after this many user turns; unlimited when empty.
  std::optional<int> max_user_turns;

  // Reference tagger, lexical resolver at the default threshold and the
  // embedded templates for any member left empty.
  SessionConfig with_defaults() const;
};

// One editing dialogue over one scene. Not thread-safe: turns of a session
// must be processed one at a time.
class Session {
 public:
  Session(std::string session_id, std::shared_ptr<const vision::Scene> scene,
          SessionConfig config = {});

  const std::string& id() const { return log_.session_id; }
  const vision::Scene& scene() const { return *scene_; }

  // Opening Request(refer) turn, already in the log.
  const SystemTurn& greeting() const { return greeting_; }

  // Processes one user utterance. Throws SessionClosed.
  SystemTurn step(std::string_view user_text);

  void close() { closed_ = true; }
  bool closed() const { return closed_; }

  const DialogueState& state() const { return state_; }
  const imaging::Image& working_image() const { return working_; }
  const imaging::Image& original_image() const { return scene_->image; }
  // Working image with the tracked mask highlighted, if a mask is tracked.
  std::optional<imaging::Image> overlay_image() const;

  const metrics::DialogueLog& log() const { return log_; }
  metrics::DialogueLog& mutable_log() { return log_; }
  const std::vector<tracker::StateTransition>& transitions() const { return transitions_; }
  int user_turns() const { return user_turns_; }

 private:
  void record_system(const SystemTurn& turn);

  std::shared_ptr<const vision::Scene> scene_;
  SessionConfig config_;
  DialogueState state_;
  imaging::Image working_;
  metrics::DialogueLog log_;
  std::vector<tracker::StateTransition> transitions_;
  SystemTurn greeting_;
  int user_turns_ = 0;
  int confirm_reprompts_ = 0;
  bool closed_ = false;
};

inline SystemTurn step(Session& session, std::string_view user_text) {
  return session.step(user_text);
}

}  // namespace slotedit::dialogue

#endif  // SLOTEDIT_DIALOGUE_MANAGER_HPP_
