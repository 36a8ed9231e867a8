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

#include <fstream>
#include <sstream>

#include "slotedit/dialogue_log.hpp"
#include "slotedit/dialogue_manager.hpp"
#include "slotedit/errors.hpp"
#include "support.hpp"

using namespace slotedit;
using namespace slotedit::metrics;

TEST_SUITE("dialogue_log") {

TEST_CASE("append numbers records and counts acts") {
  DialogueLog log;
  TurnRecord sys;
  sys.speaker = Speaker::kSystem;
  sys.acts = {DialogueAct::query(), DialogueAct::confirm(SlotName::kMask)};
  log.append(sys);
  log.append(TurnRecord{});
  sys.acts = {DialogueAct::execute()};
  log.append(sys);
  CHECK(log.records[2].turn_index == 2);
  CHECK(log.query_count == 1);
  CHECK(log.execute_count == 1);
  CHECK(log.consistent());
  log.execute_count = 2;
  CHECK_FALSE(log.consistent());
}

TEST_CASE("masks serialize run-length encoded") {
  testing::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    Mask m = testing::random_mask(rng, rng.integer(1, 20), rng.integer(1, 20), rng.real(0.0, 1.0));
    m.confidence = rng.real(0.0, 1.0);
    m.source_id = "x";
    CHECK(mask_from_json(to_json(m)) == m);
  }
  Mask empty = Mask::filled(0, 0, false);
  CHECK(mask_from_json(to_json(empty)) == empty);
}

TEST_CASE("frames and states round-trip") {
  nlu::TurnFrame f = nlu::extract_frame("decrease the hue of the left cow by 250");
  CHECK(frame_from_json(to_json(f)) == f);
  f = nlu::extract_frame("No");
  CHECK(frame_from_json(to_json(f)) == f);

  DialogueState s;
  s.refer = Refer("the cow");
  s.mask = Mask::filled(3, 3, true);
  s.mask_confirmed = true;
  s.attribute = Attribute::kLightness;
  s.value = make_edit_value(-7);
  s.query_count = 4;
  s.execute_count = 2;
  s.turn_index = 11;
  CHECK(state_from_json(to_json(s)) == s);
  CHECK(to_json(s)["attribute"] == "lightness");
}

TEST_CASE("session logs round-trip through JSON lines") {
  auto scene = std::make_shared<const vision::Scene>(testing::tiny_farm());
  dialogue::Session session("abc", scene);
  for (const char* line : {"increase the hue of the bigger cow by 30", "yes", "the barn", "the cows", "no"}) {
    session.step(line);
  }
  auto log = session.log();
  log.created = "2026-01-01T00:00:00Z";
  log.closed = "2026-01-01T00:05:00Z";
  std::stringstream buffer;
  write_jsonl(buffer, log);
  std::string header;
  std::getline(std::istringstream(buffer.str()) >> std::ws, header);
  CHECK(nlohmann::json::parse(header)["type"] == "session");
  const auto back = read_jsonl(buffer);
  CHECK(back == log);
  CHECK(back.consistent());
}

TEST_CASE("malformed logs are rejected") {
  std::istringstream no_header(R"({"type": "turn", "turn_index": 0})");
  CHECK_THROWS_AS(read_jsonl(no_header), Error);
  std::istringstream garbage("not json\n");
  CHECK_THROWS_AS(read_jsonl(garbage), Error);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_jsonl(empty), Error);
}

TEST_CASE("read_log_dir loads every jsonl file") {
  const auto dir = testing::temp_dir("logs");
  for (int i = 0; i < 3; ++i) {
    DialogueLog log;
    log.session_id = "s" + std::to_string(i);
    log.image_id = "farm";
    std::ofstream out(dir / (log.session_id + ".jsonl"));
    write_jsonl(out, log);
  }
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto logs = read_log_dir(dir);
  CHECK(logs.size() == 3);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
