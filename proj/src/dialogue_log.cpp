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

#include "slotedit/dialogue_log.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "slotedit/errors.hpp"
#include "slotedit/text.hpp"

namespace slotedit::metrics {

using nlohmann::json;

bool TurnRecord::has_act(DialogueAct::Kind kind) const {
  return std::any_of(acts.begin(), acts.end(),
                     [kind](const DialogueAct& a) { return a.kind == kind; });
}

void DialogueLog::append(TurnRecord record) {
  record.turn_index = records.empty() ? 0 : records.back().turn_index + 1;
  for (const auto& act : record.acts) {
    if (act.kind == DialogueAct::Kind::kQuery) ++query_count;
    if (act.kind == DialogueAct::Kind::kExecute) ++execute_count;
  }
  records.push_back(std::move(record));
}

int DialogueLog::counted_queries() const {
  int n = 0;
  for (const auto& r : records) {
    n += static_cast<int>(std::count_if(r.acts.begin(), r.acts.end(), [](const DialogueAct& a) {
      return a.kind == DialogueAct::Kind::kQuery;
    }));
  }
  return n;
}

int DialogueLog::counted_executes() const {
  int n = 0;
  for (const auto& r : records) {
    n += static_cast<int>(std::count_if(r.acts.begin(), r.acts.end(), [](const DialogueAct& a) {
      return a.kind == DialogueAct::Kind::kExecute;
    }));
  }
  return n;
}

bool DialogueLog::consistent() const {
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].turn_index <= records[i - 1].turn_index) return false;
  }
  return query_count == counted_queries() && execute_count == counted_executes() &&
         execute_count <= query_count;
}

json to_json(const DialogueAct& act) { return act.to_string(); }

DialogueAct act_from_json(const json& j) {
  auto act = DialogueAct::parse(j.get<std::string>());
  if (!act) throw Error("unknown dialogue act " + j.dump());
  return *act;
}

json to_json(const Mask& mask) {
  json rle = json::array();
  std::uint8_t current = 0;
  std::size_t run = 0;
  for (std::uint8_t v : mask.membership) {
    const std::uint8_t bit = v ? 1 : 0;
    if (bit != current) {
      rle.push_back(run);
      run = 0;
      current = bit;
    }
    ++run;
  }
  rle.push_back(run);
  return {{"width", mask.width},
          {"height", mask.height},
          {"confidence", mask.confidence},
          {"source_id", mask.source_id},
          {"member_count", mask.member_count()},
          {"rle", rle}};
}

Mask mask_from_json(const json& j) {
  Mask mask;
  mask.width = j.at("width").get<int>();
  mask.height = j.at("height").get<int>();
  mask.confidence = j.at("confidence").get<double>();
  mask.source_id = j.value("source_id", "");
  std::uint8_t bit = 0;
  for (const auto& run : j.at("rle")) {
    mask.membership.insert(mask.membership.end(), run.get<std::size_t>(), bit);
    bit ^= 1;
  }
  if (mask.membership.size() != static_cast<std::size_t>(mask.width) * mask.height) {
    throw Error("mask run lengths do not cover the raster");
  }
  return mask;
}

json to_json(const DialogueState& state) {
  json j;
  j["refer"] = state.refer ? json(state.refer->text()) : json(nullptr);
  j["mask"] = state.mask ? to_json(*state.mask) : json(nullptr);
  j["mask_confirmed"] = state.mask_confirmed;
  j["attribute"] = state.attribute ? json(std::string(attribute_name(*state.attribute))) : json(nullptr);
  j["value"] = state.value ? json(state.value->magnitude()) : json(nullptr);
  j["query_count"] = state.query_count;
  j["execute_count"] = state.execute_count;
  j["turn_index"] = state.turn_index;
  return j;
}

namespace {

std::optional<Attribute> attribute_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  auto a = parse_attribute(j.get<std::string>());
  if (!a) throw Error("unknown attribute " + j.dump());
  return a;
}

}  // namespace

DialogueState state_from_json(const json& j) {
  DialogueState s;
  if (!j.at("refer").is_null()) s.refer = Refer(j.at("refer").get<std::string>());
  if (!j.at("mask").is_null()) s.mask = mask_from_json(j.at("mask"));
  s.mask_confirmed = j.at("mask_confirmed").get<bool>();
  s.attribute = attribute_from_json(j.at("attribute"));
  if (!j.at("value").is_null()) s.value = EditValue(j.at("value").get<std::int64_t>());
  s.query_count = j.at("query_count").get<int>();
  s.execute_count = j.at("execute_count").get<int>();
  s.turn_index = j.at("turn_index").get<int>();
  return s;
}

json to_json(const nlu::TurnFrame& frame) {
  json j;
  j["refer"] = frame.refer ? json(frame.refer->text()) : json(nullptr);
  j["attribute"] = frame.attribute ? json(std::string(attribute_name(*frame.attribute))) : json(nullptr);
  j["value"] = frame.value ? json(frame.value->magnitude()) : json(nullptr);
  j["action_negative"] = frame.action_negative;
  j["intent"] = std::string(nlu::intent_name(frame.intent));
  if (frame.value_error) {
    j["value_error"] = {
        {"kind", frame.value_error->kind == nlu::SlotError::Kind::kOutOfRange ? "out_of_range"
                                                                              : "not_an_integer"},
        {"token", frame.value_error->token}};
  } else {
    j["value_error"] = nullptr;
  }
  return j;
}

nlu::TurnFrame frame_from_json(const json& j) {
  nlu::TurnFrame f;
  if (!j.at("refer").is_null()) f.refer = Refer(j.at("refer").get<std::string>());
  f.attribute = attribute_from_json(j.at("attribute"));
  if (!j.at("value").is_null()) f.value = EditValue(j.at("value").get<std::int64_t>());
  f.action_negative = j.at("action_negative").get<bool>();
  auto intent = nlu::parse_intent(j.at("intent").get<std::string>());
  if (!intent) throw Error("unknown intent " + j.at("intent").dump());
  f.intent = *intent;
  if (j.contains("value_error") && !j.at("value_error").is_null()) {
    const auto& e = j.at("value_error");
    f.value_error = nlu::SlotError{e.at("kind").get<std::string>() == "out_of_range"
                                       ? nlu::SlotError::Kind::kOutOfRange
                                       : nlu::SlotError::Kind::kNotAnInteger,
                                   e.at("token").get<std::string>()};
  }
  return f;
}

json to_json(const TurnRecord& record) {
  json acts = json::array();
  for (const auto& a : record.acts) acts.push_back(to_json(a));
  return {{"type", "turn"},
          {"turn_index", record.turn_index},
          {"speaker", record.speaker == Speaker::kUser ? "user" : "system"},
          {"text", record.text},
          {"frame", record.frame ? to_json(*record.frame) : json(nullptr)},
          {"acts", acts},
          {"state_after", to_json(record.state_after)}};
}

TurnRecord record_from_json(const json& j) {
  TurnRecord r;
  r.turn_index = j.at("turn_index").get<int>();
  const auto speaker = j.at("speaker").get<std::string>();
  if (speaker == "user") {
    r.speaker = Speaker::kUser;
  } else if (speaker == "system") {
    r.speaker = Speaker::kSystem;
  } else {
    throw Error("unknown speaker " + speaker);
  }
  r.text = j.at("text").get<std::string>();
  if (!j.at("frame").is_null()) r.frame = frame_from_json(j.at("frame"));
  for (const auto& a : j.at("acts")) r.acts.push_back(act_from_json(a));
  r.state_after = state_from_json(j.at("state_after"));
  return r;
}

namespace {

json header_json(const DialogueLog& log) {
  return {{"type", "session"},         {"session_id", log.session_id},
          {"image_id", log.image_id},  {"query_count", log.query_count},
          {"execute_count", log.execute_count}, {"created", log.created},
          {"closed", log.closed}};
}

void read_header(const json& j, DialogueLog& log) {
  log.session_id = j.at("session_id").get<std::string>();
  log.image_id = j.at("image_id").get<std::string>();
  log.query_count = j.at("query_count").get<int>();
  log.execute_count = j.at("execute_count").get<int>();
  log.created = j.value("created", "");
  log.closed = j.value("closed", "");
}

}  // namespace

json to_json(const DialogueLog& log) {
  json j = header_json(log);
  j.erase("type");
  j["records"] = json::array();
  for (const auto& r : log.records) j["records"].push_back(to_json(r));
  return j;
}

DialogueLog log_from_json(const json& j) {
  DialogueLog log;
  read_header(j, log);
  for (const auto& r : j.at("records")) log.records.push_back(record_from_json(r));
  return log;
}

void write_jsonl(std::ostream& out, const DialogueLog& log) {
  out << header_json(log).dump() << '\n';
  for (const auto& r : log.records) out << to_json(r).dump() << '\n';
}

DialogueLog read_jsonl(std::istream& in) {
  DialogueLog log;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      const json j = json::parse(line);
      const auto type = j.value("type", "");
      if (!have_header) {
        if (type != "session") throw Error("first line is not a session header");
        read_header(j, log);
        have_header = true;
      } else if (type == "turn") {
        log.records.push_back(record_from_json(j));
      } else {
        throw Error("unexpected record type '" + type + "'");
      }
    } catch (const std::exception& e) {
      throw Error("log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw Error("dialogue log has no session header");
  return log;
}

std::vector<DialogueLog> read_log_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<DialogueLog> logs;
  for (const auto& f : files) {
    std::ifstream in(f);
    try {
      logs.push_back(read_jsonl(in));
    } catch (const Error& e) {
      throw Error(f.string() + ": " + e.what());
    }
  }
  return logs;
}

}  // namespace slotedit::metrics
