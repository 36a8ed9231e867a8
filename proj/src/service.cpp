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

#include "slotedit/service.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "slotedit/png_io.hpp"
#include "slotedit/text.hpp"

namespace slotedit::service {

int ServiceError::http_status() const {
  switch (kind_) {
    case Kind::kUnknownImage:
    case Kind::kUnknownSession: return 404;
    case Kind::kSessionClosed:
    case Kind::kNoMask: return 409;
    case Kind::kEmptyUtterance:
    case Kind::kBadRequest: return 400;
  }
  return 500;
}

std::string_view ServiceError::code() const {
  switch (kind_) {
    case Kind::kUnknownImage: return "unknown_image";
    case Kind::kUnknownSession: return "unknown_session";
    case Kind::kSessionClosed: return "session_closed";
    case Kind::kEmptyUtterance: return "empty_utterance";
    case Kind::kNoMask: return "no_mask";
    case Kind::kBadRequest: return "bad_request";
  }
  return "error";
}

std::optional<ImageVariant> parse_variant(std::string_view name) {
  if (name.empty() || name == "current") return ImageVariant::kCurrent;
  if (name == "overlay") return ImageVariant::kOverlay;
  if (name == "original") return ImageVariant::kOriginal;
  return std::nullopt;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

SessionManager::SessionManager(vision::FixtureStore store, ServiceOptions options)
    : store_(std::move(store)), options_(std::move(options)), id_rng_(std::random_device{}()) {
  options_.session = options_.session.with_defaults();
  if (options_.log_dir) std::filesystem::create_directories(*options_.log_dir);
}

std::vector<std::string> SessionManager::list_images() const { return store_.image_ids(); }

std::string SessionManager::next_session_id() {
  std::lock_guard lock(id_mutex_);
  std::ostringstream out;
  out << 's' << std::hex << std::setw(12) << std::setfill('0')
      << (id_rng_() & 0xffffffffffffULL) << '-' << std::dec << ++id_counter_;
  return out.str();
}

SessionDescriptor SessionManager::create_session(std::string_view image_id) {
  auto scene = store_.find(image_id);
  if (!scene) {
    throw ServiceError(ServiceError::Kind::kUnknownImage,
                       "unknown image '" + std::string(image_id) + "'");
  }
  auto entry = std::make_shared<Entry>(
      dialogue::Session(next_session_id(), std::move(scene), options_.session));
  entry->session.mutable_log().created = utc_timestamp();

  SessionDescriptor d{entry->session.id(), entry->session.scene().image_id,
                      entry->session.greeting(), entry->session.state()};
  std::unique_lock lock(sessions_mutex_);
  sessions_.emplace(d.session_id, std::move(entry));
  return d;
}

std::shared_ptr<SessionManager::Entry> SessionManager::find(std::string_view session_id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    throw ServiceError(ServiceError::Kind::kUnknownSession,
                       "unknown session '" + std::string(session_id) + "'");
  }
  return it->second;
}

UtteranceResult SessionManager::post_utterance(std::string_view session_id,
                                               std::string_view text) {
  auto entry = find(session_id);
  if (text::trim(text).empty()) {
    throw ServiceError(ServiceError::Kind::kEmptyUtterance, "utterance is empty");
  }
  std::lock_guard lock(entry->mutex);
  if (entry->session.closed()) {
    throw ServiceError(ServiceError::Kind::kSessionClosed,
                       "session '" + std::string(session_id) + "' is closed");
  }
  UtteranceResult result;
  result.turn = entry->session.step(text);
  result.state = entry->session.state();
  result.overlay_available = entry->session.state().mask.has_value();
  if (entry->session.closed()) finalize(*entry);
  return result;
}

std::vector<std::uint8_t> SessionManager::get_image(std::string_view session_id,
                                                    ImageVariant variant) {
  auto entry = find(session_id);
  std::lock_guard lock(entry->mutex);
  const auto& session = entry->session;
  switch (variant) {
    case ImageVariant::kCurrent: return png::encode_image(session.working_image());
    case ImageVariant::kOriginal: return png::encode_image(session.original_image());
    case ImageVariant::kOverlay: {
      auto overlay = session.overlay_image();
      if (!overlay) {
        throw ServiceError(ServiceError::Kind::kNoMask, "no mask is being tracked");
      }
      return png::encode_image(*overlay);
    }
  }
  return {};
}

DialogueState SessionManager::get_state(std::string_view session_id) {
  auto entry = find(session_id);
  std::lock_guard lock(entry->mutex);
  return entry->session.state();
}

bool SessionManager::is_closed(std::string_view session_id) {
  auto entry = find(session_id);
  std::lock_guard lock(entry->mutex);
  return entry->session.closed();
}

metrics::DialogueLog SessionManager::get_log(std::string_view session_id) {
  auto entry = find(session_id);
  std::lock_guard lock(entry->mutex);
  return entry->session.log();
}

metrics::DialogueLog SessionManager::close_session(std::string_view session_id) {
  auto entry = find(session_id);
  std::lock_guard lock(entry->mutex);
  entry->session.close();
  finalize(*entry);
  return entry->session.log();
}

std::size_t SessionManager::close_all() {
  std::vector<std::shared_ptr<Entry>> entries;
  {
    std::shared_lock lock(sessions_mutex_);
    for (const auto& [_, entry] : sessions_) entries.push_back(entry);
  }
  std::size_t closed = 0;
  for (const auto& entry : entries) {
    std::lock_guard lock(entry->mutex);
    if (entry->finalized) continue;
    entry->session.close();
    finalize(*entry);
    ++closed;
  }
  return closed;
}

void SessionManager::finalize(Entry& entry) {
  if (entry.finalized) return;
  entry.finalized = true;
  auto& log = entry.session.mutable_log();
  log.closed = utc_timestamp();
  if (options_.log_dir) {
    const auto path = *options_.log_dir / (log.session_id + ".jsonl");
    std::ofstream out(path);
    if (!out) throw Error("cannot write log " + path.string());
    metrics::write_jsonl(out, log);
  }
}

std::size_t SessionManager::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

}  // namespace slotedit::service
