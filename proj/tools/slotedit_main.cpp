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

// slotedit command line: serve, chat, replay, eval and gen-corpus.

#include <CLI11.hpp>
#include <httplib.h>

#include <csignal>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slotedit/corpus.hpp"
#include "slotedit/dialogue_log.hpp"
#include "slotedit/dialogue_manager.hpp"
#include "slotedit/http_api.hpp"
#include "slotedit/metrics.hpp"
#include "slotedit/png_io.hpp"
#include "slotedit/service.hpp"
#include "slotedit/text.hpp"

namespace fs = std::filesystem;
using namespace slotedit;

namespace {

struct SessionFlags {
  std::string fixtures = "fixtures";
  std::optional<int> max_turns;
  std::string templates;
  double threshold = vision::kDefaultThreshold;
};

void add_session_flags(CLI::App* app, SessionFlags& f) {
  app->add_option("--fixtures", f.fixtures, "Fixture directory (one sub-directory per scene)")
      ->envname("SLOTEDIT_FIXTURES")
      ->capture_default_str();
  app->add_option("--max-turns", f.max_turns, "Close a session after N user turns")
      ->envname("SLOTEDIT_MAX_TURNS")
      ->check(CLI::PositiveNumber);
  app->add_option("--templates", f.templates, "Response template file (key=template lines)")
      ->envname("SLOTEDIT_TEMPLATES");
  app->add_option("--threshold", f.threshold, "Minimum resolver score for a detection")
      ->envname("SLOTEDIT_THRESHOLD")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
}

dialogue::SessionConfig session_config(const SessionFlags& f) {
  dialogue::SessionConfig config;
  config.resolver = std::make_shared<vision::LexicalResolver>(f.threshold);
  if (!f.templates.empty()) {
    config.templates = std::make_shared<dialogue::TemplateSet>(dialogue::TemplateSet::load(f.templates));
  }
  config.max_user_turns = f.max_turns;
  return config.with_defaults();
}

std::shared_ptr<const vision::Scene> find_scene(const vision::FixtureStore& store,
                                                const std::string& image_id) {
  auto scene = store.find(image_id);
  if (!scene) {
    std::string known = text::join(store.image_ids(), ", ");
    throw Error("unknown image '" + image_id + "' (known: " + known + ")");
  }
  return scene;
}

std::string describe_acts(const dialogue::SystemTurn& turn) {
  std::vector<std::string> names;
  for (const auto& a : turn.acts) names.push_back(a.to_string());
  return text::join(names, ", ");
}

// ---------------------------------------------------------------------------

httplib::Server* g_server = nullptr;

extern "C" void handle_signal(int) {
  if (g_server) g_server->stop();
}

int run_serve(const SessionFlags& flags, const std::string& host, int port,
              const std::string& logs) {
  service::ServiceOptions options;
  options.log_dir = fs::path(logs);
  options.session = session_config(flags);
  service::SessionManager manager(vision::FixtureStore::load(flags.fixtures), options);

  httplib::Server server;
  service::register_routes(server, manager);
  g_server = &server;
  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);

  std::cerr << "serving " << manager.list_images().size() << " images on http://" << host << ':'
            << port << " (logs in " << logs << ")\n";
  const bool ok = server.listen(host, port);
  g_server = nullptr;
  const std::size_t flushed = manager.close_all();
  if (flushed) std::cerr << "closed " << flushed << " open sessions\n";
  if (!ok) {
    std::cerr << "error: could not listen on " << host << ':' << port << '\n';
    return 1;
  }
  return 0;
}

int run_chat(const SessionFlags& flags, const std::string& image_id, const std::string& logs) {
  const auto store = vision::FixtureStore::load(flags.fixtures);
  dialogue::Session session("chat", find_scene(store, image_id), session_config(flags));
  std::cout << "system> " << session.greeting().utterance << '\n';
  std::string line;
  while (!session.closed() && (std::cout << "user> " << std::flush, std::getline(std::cin, line))) {
    if (text::trim(line).empty()) continue;
    const auto turn = session.step(line);
    std::cout << "system> " << turn.utterance << "  [" << describe_acts(turn) << "]\n";
  }
  session.close();
  if (!logs.empty()) {
    fs::create_directories(logs);
    std::ofstream out(fs::path(logs) / "chat.jsonl");
    metrics::write_jsonl(out, session.log());
  }
  return 0;
}

int run_replay(const SessionFlags& flags, const std::string& image_id, const std::string& script,
               const std::string& out_path, const std::string& image_path, bool quiet) {
  std::ifstream in(script);
  if (!in) throw Error("cannot read script " + script);
  const auto store = vision::FixtureStore::load(flags.fixtures);
  dialogue::Session session(fs::path(script).stem().string(), find_scene(store, image_id),
                            session_config(flags));
  if (!quiet) std::cout << "system> " << session.greeting().utterance << '\n';
  std::string line;
  while (std::getline(in, line)) {
    if (text::trim(line).empty()) continue;
    if (session.closed()) break;
    const auto turn = session.step(line);
    if (!quiet) {
      std::cout << "user>   " << line << '\n'
                << "system> " << turn.utterance << "  [" << describe_acts(turn) << "]\n";
    }
  }
  session.close();
  if (out_path.empty()) {
    metrics::write_jsonl(std::cout, session.log());
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    metrics::write_jsonl(out, session.log());
  }
  if (!image_path.empty()) png::write_image(image_path, session.working_image());
  return 0;
}

int run_eval_dialogues(const std::string& logs, const std::string& json_out) {
  const auto dialogues = metrics::read_log_dir(logs);
  const auto stats = metrics::turn_stats(dialogues);
  std::cout << metrics::format_turn_stats(stats);
  if (!json_out.empty()) std::ofstream(json_out) << metrics::to_json(stats).dump(2) << '\n';
  return 0;
}

int run_eval_nlu(const std::string& corpus_path, const std::string& json_out,
                 const std::string& dataset) {
  std::ifstream in(corpus_path);
  if (!in) throw Error("cannot read corpus " + corpus_path);
  const auto corpus = nlu::read_corpus(in);
  std::vector<std::vector<nlu::BioLabel>> gold, pred;
  const auto& tagger = nlu::reference_tagger();
  for (const auto& sentence : corpus) {
    std::vector<nlu::Token> tokens;
    for (const auto& t : sentence.tokens) tokens.push_back({t, 0, 0});
    gold.push_back(sentence.labels);
    pred.push_back(tagger.tag(tokens));
  }
  const auto report = metrics::span_f1(gold, pred);
  std::cout << metrics::format_f1_table(report, dataset);
  if (!json_out.empty()) std::ofstream(json_out) << metrics::to_json(report).dump(2) << '\n';
  return 0;
}

int run_gen_corpus(std::size_t n, std::uint64_t seed, const std::string& scenes_dir,
                   const std::string& out_path) {
  const auto store = vision::FixtureStore::load(scenes_dir);
  std::vector<std::shared_ptr<const vision::Scene>> owned;
  std::vector<const vision::Scene*> scenes;
  for (const auto& id : store.image_ids()) {
    owned.push_back(store.find(id));
    scenes.push_back(owned.back().get());
  }
  const auto corpus = nlu::generate_corpus(n, seed, scenes);
  if (out_path.empty() || out_path == "-") {
    nlu::write_corpus(std::cout, corpus);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    nlu::write_corpus(out, corpus);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dialogue-driven image editing"};
  app.require_subcommand(1);

  SessionFlags flags;

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string logs = "logs";
  serve->add_option("--host", host, "Bind address")->envname("SLOTEDIT_HOST")->capture_default_str();
  serve->add_option("--port", port, "Port")
      ->envname("SLOTEDIT_PORT")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  serve->add_option("--logs", logs, "Directory for closed-session logs")
      ->envname("SLOTEDIT_LOGS")
      ->capture_default_str();
  add_session_flags(serve, flags);

  auto* chat = app.add_subcommand("chat", "Talk to the editor in the terminal");
  std::string image_id;
  std::string chat_logs;
  chat->add_option("--image", image_id, "Scene id")->envname("SLOTEDIT_IMAGE")->required();
  chat->add_option("--logs", chat_logs, "Write the session log here on exit")->envname("SLOTEDIT_LOGS");
  add_session_flags(chat, flags);

  auto* replay = app.add_subcommand("replay", "Run a script of user utterances");
  std::string script, replay_out, save_image;
  bool quiet = false;
  replay->add_option("--script", script, "File with one user utterance per line")
      ->envname("SLOTEDIT_SCRIPT")
      ->required()
      ->check(CLI::ExistingFile);
  replay->add_option("--image", image_id, "Scene id")->envname("SLOTEDIT_IMAGE")->required();
  replay->add_option("--out", replay_out, "Log file (JSON lines); stdout when omitted")
      ->envname("SLOTEDIT_OUT");
  replay->add_option("--save-image", save_image, "Write the final image as PNG")
      ->envname("SLOTEDIT_SAVE_IMAGE");
  replay->add_flag("--quiet", quiet, "Do not print the transcript");
  add_session_flags(replay, flags);

  auto* eval = app.add_subcommand("eval", "Evaluation metrics");
  eval->require_subcommand(1);
  std::string json_out;
  auto* eval_dialogues = eval->add_subcommand("dialogues", "Turn statistics and vision accuracy");
  std::string eval_logs;
  eval_dialogues->add_option("--logs", eval_logs, "Directory of *.jsonl session logs")
      ->envname("SLOTEDIT_LOGS")
      ->required()
      ->check(CLI::ExistingDirectory);
  eval_dialogues->add_option("--json", json_out, "Also write the report as JSON")
      ->envname("SLOTEDIT_JSON");
  auto* eval_nlu = eval->add_subcommand("nlu", "Span F1 of the tagger on a corpus");
  std::string corpus_path, dataset = "corpus";
  eval_nlu->add_option("--corpus", corpus_path, "Corpus file (JSON lines)")
      ->envname("SLOTEDIT_CORPUS")
      ->required()
      ->check(CLI::ExistingFile);
  eval_nlu->add_option("--name", dataset, "Row label in the table")->capture_default_str();
  eval_nlu->add_option("--json", json_out, "Also write the report as JSON")->envname("SLOTEDIT_JSON");

  auto* gen = app.add_subcommand("gen-corpus", "Generate tagged edit requests");
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  std::string scenes_dir = "fixtures", gen_out;
  gen->add_option("--n", n, "Number of sentences")->envname("SLOTEDIT_N")->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->envname("SLOTEDIT_SEED")->capture_default_str();
  gen->add_option("--scenes", scenes_dir, "Fixture directory supplying referring phrases")
      ->envname("SLOTEDIT_SCENES")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "Output file; stdout when omitted")->envname("SLOTEDIT_OUT");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) return run_serve(flags, host, port, logs);
    if (*chat) return run_chat(flags, image_id, chat_logs);
    if (*replay) return run_replay(flags, image_id, script, replay_out, save_image, quiet);
    if (*eval_dialogues) return run_eval_dialogues(eval_logs, json_out);
    if (*eval_nlu) return run_eval_nlu(corpus_path, json_out, dataset);
    if (*gen) return run_gen_corpus(n, seed, scenes_dir, gen_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
