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

// JSON-over-HTTP routes for the session store.
//
//   GET    /images
//   POST   /sessions                      {"image_id": "..."}
//   POST   /sessions/:id/utterances       {"text": "..."}
//   GET    /sessions/:id/image?variant=current|overlay|original
//   GET    /sessions/:id/state
//   GET    /sessions/:id/log
//   DELETE /sessions/:id
//
// Errors come back as {"error": "<code>", "message": "..."}.

#ifndef SLOTEDIT_HTTP_API_HPP_
#define SLOTEDIT_HTTP_API_HPP_

#include <nlohmann/json.hpp>

#include "slotedit/service.hpp"

namespace httplib {
class Server;
}

namespace slotedit::service {

void register_routes(httplib::Server& server, SessionManager& manager);

nlohmann::json to_json(const dialogue::SystemTurn& turn);
nlohmann::json to_json(const SessionDescriptor& descriptor);
nlohmann::json to_json(const std::string& session_id, const UtteranceResult& result);

}  // namespace slotedit::service

#endif  // SLOTEDIT_HTTP_API_HPP_
