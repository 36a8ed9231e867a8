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

// In-memory session store behind the HTTP API.
//
// Sessions are independent; each carries its own lock, so turns of one
// session are serialized (a second utterance waits for the first) while
// different sessions proceed concurrently. The fixture store is read-only
// after construction. Closing a session writes <log_dir>/<session_id>.jsonl.

#ifndef SLOTEDIT_SERVICE_HPP_
#define SLOTEDIT_SERVICE_HPP_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "slotedit/dialogue_manager.hpp"
#include "slotedit/errors.hpp"
#include "slotedit/vision_engine.hpp"

namespace slotedit::service {

class ServiceError : public Error {
 public:
  enum class Kind {
    kUnknownImage,
    kUnknownSession,
    kSessionClosed,
    kEmptyUtterance,
    kNoMask,
    kBadRequest,
  };

  ServiceError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }
  int http_status() const;
  std::string_view code() const;  // "unknown_session", ...

 private:
  Kind kind_;
};

enum class ImageVariant { kCurrent, kOverlay, kOriginal };

std::optional<ImageVariant> parse_variant(std::string_view name);

struct ServiceOptions {
  std::optional<std::filesystem::path> log_dir;
  dialogue::SessionConfig session;
};

struct SessionDescriptor {
  std::string session_id;
  std::string image_id;
  dialogue::SystemTurn greeting;
  DialogueState state;
};

struct UtteranceResult {
  dialogue::SystemTurn turn;
  DialogueState state;
  bool overlay_available = false;
};

class SessionManager {
 public:
  explicit SessionManager(vision::FixtureStore store, ServiceOptions options = {});

  std::vector<std::string> list_images() const;

  // Throws ServiceError(kUnknownImage).
  SessionDescriptor create_session(std::string_view image_id);

  // Throws ServiceError: kUnknownSession, kSessionClosed, kEmptyUtterance.
  UtteranceResult post_utterance(std::string_view session_id, std::string_view text);

  // PNG bytes. Throws ServiceError: kUnknownSession, kNoMask (overlay
  // without a tracked mask).
  std::vector<std::uint8_t> get_image(std::string_view session_id, ImageVariant variant);

  DialogueState get_state(std::string_view session_id);
  bool is_closed(std::string_view session_id);
  metrics::DialogueLog get_log(std::string_view session_id);

  // Idempotent; the first call stamps and flushes the log.
  metrics::DialogueLog close_session(std::string_view session_id);
  // Closes every open session; returns how many were still open.
  std::size_t close_all();

  std::size_t session_count() const;

 private:
  struct Entry {
    explicit Entry(dialogue::Session s) : session(std::move(s)) {}
    std::mutex mutex;
    dialogue::Session session;
    bool finalized = false;
  };

  std::shared_ptr<Entry> find(std::string_view session_id) const;
  std::string next_session_id();
  // Caller holds entry.mutex.
  void finalize(Entry& entry);

  vision::FixtureStore store_;
  ServiceOptions options_;

  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Entry>, std::less<>> sessions_;

  std::mutex id_mutex_;
  std::mt19937_64 id_rng_;
  std::uint64_t id_counter_ = 0;
};

// Current UTC time as ISO-8601 ("2026-01-01T12:00:00Z").
std::string utc_timestamp();

}  // namespace slotedit::service

#endif  // SLOTEDIT_SERVICE_HPP_
