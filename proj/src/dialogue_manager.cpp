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

#include "slotedit/dialogue_manager.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "slotedit/image_edit.hpp"
#include "slotedit/text.hpp"

namespace slotedit::dialogue {

DialogueAct next_act(const DialogueState& state) {
  if (!state.refer) return DialogueAct::request(SlotName::kRefer);
  if (!state.mask) return DialogueAct::query();
  if (!state.mask_confirmed) return DialogueAct::confirm(SlotName::kMask);
  if (!state.attribute) return DialogueAct::request(SlotName::kAttribute);
  if (!state.value) return DialogueAct::request(SlotName::kValue);
  return DialogueAct::execute();
}

// ---------------------------------------------------------------------------
// Templates

TemplateSet TemplateSet::defaults() {
  TemplateSet t;
  t.set("greeting",
        "Hi! I can adjust the {attributes} of objects in this image.");
  t.set("request.refer",
        "Which object would you like to edit? Describe it in words, "
        "e.g. \"the person on the left\".");
  t.set("request.mask", "Please describe the region you want to edit again.");
  t.set("request.attribute",
        "Which attribute of {refer} would you like to adjust? Options: {attributes}.");
  t.set("request.value",
        "How much should I change the {attribute}? Enter a value (-100 to 100).");
  t.set("confirm.mask", std::string(kConfirmMaskPrompt));
  t.set("query", "I highlighted {refer} in red.");
  t.set("execute",
        "Done! I changed the {attribute} of {refer} by {value}. "
        "What would you like to edit next?");
  t.set("no_detection", "Sorry, I could not find \"{refer}\" in the image.");
  t.set("bad_value",
        "Sorry, \"{token}\" is not a value I can use. Values are whole numbers (-100 to 100).");
  t.set("mask_rejected", "Sorry about that.");
  t.set("confirm_fallback", "Let's pick the object again.");
  t.set("edit_failed", "Sorry, I could not apply that edit.");
  t.set("farewell", "We have reached the end of this session. Thanks, goodbye!");
  return t;
}

const std::vector<std::string>& TemplateSet::known_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [key, _] : defaults().templates_) k.push_back(key);
    return k;
  }();
  return keys;
}

TemplateSet TemplateSet::parse(std::string_view content, TemplateSet base) {
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  const auto& keys = known_keys();
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw Error("template line " + std::to_string(line_no) + ": expected key=template");
    }
    std::string key = text::trim(trimmed.substr(0, eq));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw Error("template line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    base.set(std::move(key), text::trim(trimmed.substr(eq + 1)));
  }
  return base;
}

TemplateSet TemplateSet::load(const std::filesystem::path& path, TemplateSet base) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read templates from " + path.string());
  std::ostringstream content;
  content << in.rdbuf();
  return parse(content.str(), std::move(base));
}

const std::string& TemplateSet::get(const std::string& key) const {
  auto it = templates_.find(key);
  if (it == templates_.end()) throw MissingTemplate(key);
  return it->second;
}

std::string template_key(const DialogueAct& act) {
  switch (act.kind) {
    case DialogueAct::Kind::kRequest:
      return "request." + std::string(slot_name(act.slot.value()));
    case DialogueAct::Kind::kConfirm:
      return "confirm." + std::string(slot_name(act.slot.value()));
    case DialogueAct::Kind::kQuery: return "query";
    case DialogueAct::Kind::kExecute: return "execute";
  }
  return "";
}

namespace {

std::string attribute_list() {
  std::vector<std::string> names;
  for (Attribute a : kAllAttributes) names.emplace_back(attribute_name(a));
  return text::join(names, ", ");
}

std::string signed_value(const EditValue& v) {
  return (v.magnitude() > 0 ? "+" : "") + std::to_string(v.magnitude());
}

std::string fill(std::string tmpl, const DialogueState& state,
                 const std::map<std::string, std::string>& extra) {
  tmpl = text::replace_all(std::move(tmpl), "{attributes}", attribute_list());
  tmpl = text::replace_all(std::move(tmpl), "{range}", kValueRangeText);
  tmpl = text::replace_all(std::move(tmpl), "{refer}",
                           state.refer ? state.refer->text() : "the region");
  tmpl = text::replace_all(std::move(tmpl), "{attribute}",
                           state.attribute ? std::string(attribute_name(*state.attribute))
                                           : "attribute");
  tmpl = text::replace_all(std::move(tmpl), "{value}",
                           state.value ? signed_value(*state.value) : "some amount");
  for (const auto& [key, value] : extra) {
    tmpl = text::replace_all(std::move(tmpl), "{" + key + "}", value);
  }
  return tmpl;
}

}  // namespace

std::string render_response(const DialogueAct& act, const DialogueState& state,
                            const TemplateSet& templates) {
  return fill(templates.get(template_key(act)), state, {});
}

std::string render_named(const std::string& key, const DialogueState& state,
                         const TemplateSet& templates,
                         const std::map<std::string, std::string>& extra) {
  return fill(templates.get(key), state, extra);
}

// ---------------------------------------------------------------------------
// Session

SessionConfig SessionConfig::with_defaults() const {
  SessionConfig c = *this;
  if (!c.tagger) {
    c.tagger = std::shared_ptr<const nlu::Tagger>(&nlu::reference_tagger(),
                                                  [](const nlu::Tagger*) {});
  }
  if (!c.resolver) c.resolver = std::make_shared<vision::LexicalResolver>();
  if (!c.templates) c.templates = std::make_shared<TemplateSet>(TemplateSet::defaults());
  return c;
}

Session::Session(std::string session_id, std::shared_ptr<const vision::Scene> scene,
                 SessionConfig config)
    : scene_(std::move(scene)), config_(config.with_defaults()) {
  if (!scene_) throw Error("session needs a scene");
  working_ = scene_->image;
  log_.session_id = std::move(session_id);
  log_.image_id = scene_->image_id;

  greeting_.act = next_act(state_);
  greeting_.acts = {greeting_.act};
  greeting_.utterance = render_named("greeting", state_, *config_.templates) + " " +
                        render_response(greeting_.act, state_, *config_.templates);
  record_system(greeting_);
}

std::optional<imaging::Image> Session::overlay_image() const {
  if (!state_.mask) return std::nullopt;
  return imaging::render_overlay(working_, *state_.mask);
}

void Session::record_system(const SystemTurn& turn) {
  metrics::TurnRecord r;
  r.speaker = metrics::Speaker::kSystem;
  r.text = turn.utterance;
  r.acts = turn.acts;
  r.state_after = state_;
  log_.append(std::move(r));
}

SystemTurn Session::step(std::string_view user_text) {
  if (closed_) throw SessionClosed();
  const TemplateSet& templates = *config_.templates;
  ++user_turns_;

  const nlu::TurnFrame frame = nlu::extract_frame(user_text, *config_.tagger);
  const bool was_awaiting = tracker::awaiting_mask_confirmation(state_);
  const bool new_refer = frame.refer && (!state_.refer || !state_.refer->same_as(*frame.refer));

  transitions_.push_back(tracker::transition(state_, frame));
  state_ = transitions_.back().after;

  {
    metrics::TurnRecord r;
    r.speaker = metrics::Speaker::kUser;
    r.text = std::string(user_text);
    r.frame = frame;
    r.state_after = state_;
    log_.append(std::move(r));
  }

  std::vector<std::string> parts;
  if (frame.value_error) {
    parts.push_back(
        render_named("bad_value", state_, templates, {{"token", frame.value_error->token}}));
  }
  if (was_awaiting && frame.intent == nlu::Intent::kDeny) {
    parts.push_back(render_named("mask_rejected", state_, templates));
  }

  // Replies to a pending Confirm(mask) that are neither yes/no nor a new
  // refer get the prompt once more, then the object is asked for afresh.
  if (was_awaiting && frame.intent == nlu::Intent::kNone && !new_refer) {
    if (++confirm_reprompts_ >= 2) {
      state_.refer.reset();
      state_.mask.reset();
      state_.mask_confirmed = false;
      confirm_reprompts_ = 0;
      parts.push_back(render_named("confirm_fallback", state_, templates));
    }
  } else {
    confirm_reprompts_ = 0;
  }

  SystemTurn turn;
  DialogueAct act = next_act(state_);

  if (act.kind == DialogueAct::Kind::kQuery) {
    turn.acts.push_back(act);
    ++state_.query_count;
    const Refer refer = *state_.refer;
    if (auto mask = config_.resolver->resolve(refer, *scene_)) {
      state_.mask = std::move(*mask);
      state_.mask_confirmed = false;
      parts.push_back(render_response(act, state_, templates));
      act = next_act(state_);
      parts.push_back(render_response(act, state_, templates));
    } else {
      parts.push_back(render_named("no_detection", state_, templates));
      state_.refer.reset();
      act = next_act(state_);
      parts.push_back(render_response(act, state_, templates));
    }
    turn.acts.push_back(act);
  } else if (act.kind == DialogueAct::Kind::kExecute) {
    const auto request = complete_request(state_);
    try {
      working_ = imaging::apply(working_, request.value());
      ++state_.execute_count;
      turn.acts.push_back(act);
      turn.image_updated = true;
      parts.push_back(render_response(act, state_, templates));
      state_ = tracker::reset_after_execute(state_);
    } catch (const Error&) {
      state_.refer.reset();
      state_.mask.reset();
      state_.mask_confirmed = false;
      act = next_act(state_);
      turn.acts.push_back(act);
      parts.push_back(render_named("edit_failed", state_, templates));
      parts.push_back(render_response(act, state_, templates));
    }
  } else {
    turn.acts.push_back(act);
    parts.push_back(render_response(act, state_, templates));
  }

  turn.act = act;
  turn.mask_overlay_present = act == DialogueAct::confirm(SlotName::kMask);
  if (config_.max_user_turns && user_turns_ >= *config_.max_user_turns) {
    closed_ = true;
    turn.session_closed = true;
    parts.push_back(render_named("farewell", state_, templates));
  }
  turn.utterance = text::join(parts, " ");
  record_system(turn);
  return turn;
}

}  // namespace slotedit::dialogue
