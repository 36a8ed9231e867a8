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

#include "slotedit/http_api.hpp"

#include <httplib.h>

#include <functional>

#include "slotedit/dialogue_log.hpp"

namespace slotedit::service {

using nlohmann::json;

json to_json(const dialogue::SystemTurn& turn) {
  json acts = json::array();
  for (const auto& a : turn.acts) acts.push_back(a.to_string());
  return {{"act", turn.act.to_string()},
          {"acts", acts},
          {"utterance", turn.utterance},
          {"mask_overlay_present", turn.mask_overlay_present},
          {"image_updated", turn.image_updated},
          {"session_closed", turn.session_closed}};
}

json to_json(const SessionDescriptor& d) {
  return {{"session_id", d.session_id},
          {"image_id", d.image_id},
          {"system", to_json(d.greeting)},
          {"state", metrics::to_json(d.state)}};
}

json to_json(const std::string& session_id, const UtteranceResult& r) {
  json j = to_json(r.turn);
  j["state"] = metrics::to_json(r.state);
  j["image_url"] = "/sessions/" + session_id + "/image?variant=current";
  j["overlay_url"] = r.overlay_available
                         ? json("/sessions/" + session_id + "/image?variant=overlay")
                         : json(nullptr);
  return j;
}

namespace {

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view code,
                const std::string& message) {
  send_json(res, status, {{"error", code}, {"message", message}});
}

using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

Handler guarded(Handler inner) {
  return [inner = std::move(inner)](const httplib::Request& req, httplib::Response& res) {
    try {
      inner(req, res);
    } catch (const ServiceError& e) {
      send_error(res, e.http_status(), e.code(), e.what());
    } catch (const json::exception& e) {
      send_error(res, 400, "bad_request", e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, "internal", e.what());
    }
  };
}

json parse_body(const httplib::Request& req) {
  json body = json::parse(req.body, nullptr, /*allow_exceptions=*/false);
  if (!body.is_object()) {
    throw ServiceError(ServiceError::Kind::kBadRequest, "request body must be a JSON object");
  }
  return body;
}

std::string string_field(const json& body, const char* name) {
  auto it = body.find(name);
  if (it == body.end() || !it->is_string()) {
    throw ServiceError(ServiceError::Kind::kBadRequest,
                       std::string("missing string field '") + name + "'");
  }
  return it->get<std::string>();
}

}  // namespace

void register_routes(httplib::Server& server, SessionManager& manager) {
  server.Get("/images", guarded([&manager](const httplib::Request&, httplib::Response& res) {
               send_json(res, 200, {{"images", manager.list_images()}});
             }));

  server.Post("/sessions", guarded([&manager](const httplib::Request& req, httplib::Response& res) {
                const json body = parse_body(req);
                send_json(res, 201, to_json(manager.create_session(string_field(body, "image_id"))));
              }));

  server.Post("/sessions/:id/utterances",
              guarded([&manager](const httplib::Request& req, httplib::Response& res) {
                const std::string& id = req.path_params.at("id");
                const json body = parse_body(req);
                const auto result = manager.post_utterance(id, string_field(body, "text"));
                send_json(res, 200, to_json(id, result));
              }));

  server.Get("/sessions/:id/image",
             guarded([&manager](const httplib::Request& req, httplib::Response& res) {
               const std::string name = req.get_param_value("variant");
               const auto variant = parse_variant(name);
               if (!variant) {
                 throw ServiceError(ServiceError::Kind::kBadRequest,
                                    "unknown image variant '" + name + "'");
               }
               const auto bytes = manager.get_image(req.path_params.at("id"), *variant);
               res.status = 200;
               res.set_content(reinterpret_cast<const char*>(bytes.data()), bytes.size(),
                               "image/png");
             }));

  server.Get("/sessions/:id/state",
             guarded([&manager](const httplib::Request& req, httplib::Response& res) {
               const std::string& id = req.path_params.at("id");
               json j = metrics::to_json(manager.get_state(id));
               send_json(res, 200, {{"session_id", id},
                                    {"closed", manager.is_closed(id)},
                                    {"state", j}});
             }));

  server.Get("/sessions/:id/log",
             guarded([&manager](const httplib::Request& req, httplib::Response& res) {
               send_json(res, 200, metrics::to_json(manager.get_log(req.path_params.at("id"))));
             }));

  server.Delete("/sessions/:id",
                guarded([&manager](const httplib::Request& req, httplib::Response& res) {
                  const auto log = manager.close_session(req.path_params.at("id"));
                  send_json(res, 200, {{"session_id", log.session_id},
                                       {"closed", true},
                                       {"query_count", log.query_count},
                                       {"execute_count", log.execute_count}});
                }));
}

}  // namespace slotedit::service
