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

// Dialogue logs and their JSON encodings.
//
// On disk a log is JSON-lines: one session header
//
//   {"type": "session", "session_id": "...", "image_id": "...",
//    "query_count": 3, "execute_count": 2, "created": "...", "closed": "..."}
//
// followed by one {"type": "turn", ...} object per TurnRecord. Masks inside
// state snapshots are run-length encoded ("rle": alternating run lengths,
// starting with a run of non-members).

#ifndef SLOTEDIT_DIALOGUE_LOG_HPP_
#define SLOTEDIT_DIALOGUE_LOG_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slotedit/nlu.hpp"
#include "slotedit/ontology.hpp"

namespace slotedit::metrics {

enum class Speaker { kUser, kSystem };

struct TurnRecord {
  int turn_index = 0;
  Speaker speaker = Speaker::kUser;
  std::string text;
  std::optional<nlu::TurnFrame> frame;  // user turns
  std::vector<DialogueAct> acts;        // system turns; a fused turn lists Query first
  DialogueState state_after;

  bool has_act(DialogueAct::Kind kind) const;

  friend bool operator==(const TurnRecord&, const TurnRecord&) = default;
};

struct DialogueLog {
  std::string session_id;
  std::string image_id;
  std::vector<TurnRecord> records;
  int query_count = 0;
  int execute_count = 0;
  std::string created;
  std::string closed;

  // Assigns the next turn index and keeps the act counters in step.
  void append(TurnRecord record);

  // Counters recomputed from the records.
  int counted_queries() const;
  int counted_executes() const;

  // Counters match the records, indices strictly increase and
  // execute_count <= query_count.
  bool consistent() const;

  friend bool operator==(const DialogueLog&, const DialogueLog&) = default;
};

nlohmann::json to_json(const DialogueAct& act);
DialogueAct act_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Mask& mask);
Mask mask_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DialogueState& state);
DialogueState state_from_json(const nlohmann::json& j);
nlohmann::json to_json(const nlu::TurnFrame& frame);
nlu::TurnFrame frame_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TurnRecord& record);
TurnRecord record_from_json(const nlohmann::json& j);

// Header plus records in a single object, as served over HTTP.
nlohmann::json to_json(const DialogueLog& log);
DialogueLog log_from_json(const nlohmann::json& j);

void write_jsonl(std::ostream& out, const DialogueLog& log);
// Throws Error on a missing header or malformed line.
DialogueLog read_jsonl(std::istream& in);

// Every *.jsonl file in `dir`, sorted by file name.
std::vector<DialogueLog> read_log_dir(const std::filesystem::path& dir);

}  // namespace slotedit::metrics

#endif  // SLOTEDIT_DIALOGUE_LOG_HPP_
