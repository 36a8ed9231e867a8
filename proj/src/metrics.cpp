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

#include "slotedit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "slotedit/errors.hpp"

namespace slotedit::metrics {

std::optional<double> vision_accuracy(int execute_count, int query_count) {
  if (execute_count < 0 || execute_count > query_count) {
    throw std::invalid_argument("need 0 <= executes <= queries, got " +
                                std::to_string(execute_count) + "/" +
                                std::to_string(query_count));
  }
  if (query_count == 0) return std::nullopt;
  return static_cast<double>(execute_count) / query_count;
}

std::optional<double> vision_accuracy(const DialogueLog& log) {
  return vision_accuracy(log.execute_count, log.query_count);
}

F1Report span_f1(std::span<const std::vector<nlu::BioLabel>> gold,
                 std::span<const std::vector<nlu::BioLabel>> pred) {
  if (gold.size() != pred.size()) {
    throw LengthMismatch("gold has " + std::to_string(gold.size()) + " sentences, prediction " +
                         std::to_string(pred.size()));
  }
  F1Report report;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size()) {
      throw LengthMismatch("sentence " + std::to_string(s) + ": gold has " +
                           std::to_string(gold[s].size()) + " labels, prediction " +
                           std::to_string(pred[s].size()));
    }
    using Key = std::tuple<int, std::size_t, std::size_t>;
    std::set<Key> gold_spans;
    for (const auto& span : nlu::extract_spans(gold[s])) {
      gold_spans.emplace(static_cast<int>(span.category), span.begin, span.end);
      ++report.categories[static_cast<int>(span.category)].gold;
    }
    for (const auto& span : nlu::extract_spans(pred[s])) {
      auto& c = report.categories[static_cast<int>(span.category)];
      ++c.predicted;
      if (gold_spans.count({static_cast<int>(span.category), span.begin, span.end})) {
        ++c.true_positives;
      }
    }
  }

  double sum = 0.0;
  for (auto& c : report.categories) {
    c.precision = c.predicted > 0 ? static_cast<double>(c.true_positives) / c.predicted
                                  : (c.gold == 0 ? 1.0 : 0.0);
    c.recall = c.gold > 0 ? static_cast<double>(c.true_positives) / c.gold
                          : (c.predicted == 0 ? 1.0 : 0.0);
    if (c.gold == 0 && c.predicted == 0) {
      c.f1 = 1.0;
    } else if (c.precision + c.recall == 0.0) {
      c.f1 = 0.0;
    } else {
      c.f1 = 2.0 * c.precision * c.recall / (c.precision + c.recall);
    }
    sum += c.f1;
  }
  report.mean = sum / static_cast<double>(report.categories.size());
  return report;
}

std::string format_f1_table(const F1Report& report, const std::string& dataset) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "Dataset";
  for (auto c : nlu::kAllCategories) out << std::right << std::setw(11) << nlu::category_name(c);
  out << std::setw(9) << "Mean" << '\n';
  out << std::left << std::setw(12) << dataset << std::right << std::fixed << std::setprecision(2);
  for (const auto& c : report.categories) out << std::setw(11) << 100.0 * c.f1;
  out << std::setw(9) << 100.0 * report.mean << '\n';
  return out.str();
}

nlohmann::json to_json(const F1Report& report) {
  nlohmann::json j;
  for (auto c : nlu::kAllCategories) {
    const auto& s = report[c];
    j[std::string(nlu::category_name(c))] = {{"precision", s.precision}, {"recall", s.recall},
                                             {"f1", s.f1}, {"true_positives", s.true_positives},
                                             {"predicted", s.predicted}, {"gold", s.gold}};
  }
  j["mean"] = report.mean;
  return j;
}

namespace {

double mean_of(const std::vector<int>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

TurnStats turn_stats(std::span<const DialogueLog> logs) {
  if (logs.empty()) throw EmptyInput("turn statistics need at least one dialogue");
  TurnStats stats;
  stats.dialogues = logs.size();

  std::vector<int> turns, user_turns, edit_turns, edit_user_turns;
  std::vector<double> accuracies;
  for (const auto& log : logs) {
    turns.push_back(static_cast<int>(log.records.size()));
    int users = 0;
    int segment = 0, segment_users = 0, edits = 0;
    for (const auto& r : log.records) {
      ++segment;
      if (r.speaker == Speaker::kUser) ++users, ++segment_users;
      if (r.has_act(DialogueAct::Kind::kExecute)) {
        ++edits;
        edit_turns.push_back(segment);
        edit_user_turns.push_back(segment_users);
        if (edits == 1) {
          stats.first_edit_turns.push_back(segment);
          stats.first_edit_user_turns.push_back(segment_users);
        } else if (edits == 2) {
          stats.second_edit_turns.push_back(segment);
          stats.second_edit_user_turns.push_back(segment_users);
        }
        segment = segment_users = 0;
      }
    }
    user_turns.push_back(users);
    stats.edits_per_dialogue.push_back(edits);
    ++stats.edits_histogram[edits];
    if (auto va = vision_accuracy(log)) accuracies.push_back(*va);
  }

  stats.mean_turns_per_dialogue = mean_of(turns);
  stats.mean_user_turns_per_dialogue = mean_of(user_turns);
  if (!edit_turns.empty()) {
    stats.mean_turns_per_edit = mean_of(edit_turns);
    stats.mean_user_turns_per_edit = mean_of(edit_user_turns);
  }
  if (!accuracies.empty()) {
    stats.mean_vision_accuracy =
        std::accumulate(accuracies.begin(), accuracies.end(), 0.0) / accuracies.size();
  }
  return stats;
}

namespace {

std::string fmt_optional(const std::optional<double>& v) {
  if (!v) return "undefined";
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << *v;
  return out.str();
}

std::string fmt_list(const std::vector<int>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << ']';
  return out.str();
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_turn_stats(const TurnStats& s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "dialogues                     " << s.dialogues << '\n'
      << "mean turns / dialogue         " << s.mean_turns_per_dialogue << " (all), "
      << s.mean_user_turns_per_dialogue << " (user)\n"
      << "mean turns / edit             " << fmt_optional(s.mean_turns_per_edit) << " (all), "
      << fmt_optional(s.mean_user_turns_per_edit) << " (user)\n"
      << "edits per dialogue            ";
  bool first = true;
  for (const auto& [edits, n] : s.edits_histogram) {
    out << (first ? "" : ", ") << edits << " edits: " << n;
    first = false;
  }
  out << '\n'
      << "1st edit turns                " << fmt_list(s.first_edit_turns) << '\n'
      << "2nd edit turns                " << fmt_list(s.second_edit_turns) << '\n'
      << "mean vision accuracy          " << fmt_optional(s.mean_vision_accuracy) << '\n';
  return out.str();
}

nlohmann::json to_json(const TurnStats& s) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [edits, n] : s.edits_histogram) hist[std::to_string(edits)] = n;
  return {{"dialogues", s.dialogues},
          {"mean_turns_per_dialogue", s.mean_turns_per_dialogue},
          {"mean_user_turns_per_dialogue", s.mean_user_turns_per_dialogue},
          {"mean_turns_per_edit", optional_json(s.mean_turns_per_edit)},
          {"mean_user_turns_per_edit", optional_json(s.mean_user_turns_per_edit)},
          {"edits_per_dialogue", s.edits_per_dialogue},
          {"edits_histogram", hist},
          {"first_edit_turns", s.first_edit_turns},
          {"second_edit_turns", s.second_edit_turns},
          {"first_edit_user_turns", s.first_edit_user_turns},
          {"second_edit_user_turns", s.second_edit_user_turns},
          {"mean_vision_accuracy", optional_json(s.mean_vision_accuracy)}};
}

std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw LengthMismatch("pearson needs two equal-length sequences of at least 2 points");
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw EmptyInput("KS statistic needs two non-empty samples");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= t) ++i;
    while (j < y.size() && y[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / x.size() - static_cast<double>(j) / y.size()));
  }
  return d;
}

}  // namespace slotedit::metrics
