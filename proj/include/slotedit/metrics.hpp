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

// Dialogue and tagging metrics.
//
// Vision accuracy is #Execute / #Query over one dialogue: every Execute is
// preceded by an accepted mask, so the ratio is the share of mask attempts
// the user carried through to an edit. It is undefined for dialogues that
// never queried; such dialogues are left out of aggregates.

#ifndef SLOTEDIT_METRICS_HPP_
#define SLOTEDIT_METRICS_HPP_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slotedit/dialogue_log.hpp"
#include "slotedit/nlu.hpp"

namespace slotedit::metrics {

// nullopt when query_count == 0. Throws std::invalid_argument when the
// counts violate 0 <= executes <= queries.
std::optional<double> vision_accuracy(int execute_count, int query_count);
std::optional<double> vision_accuracy(const DialogueLog& log);

struct CategoryScore {
  int true_positives = 0;
  int predicted = 0;
  int gold = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
};

struct F1Report {
  std::array<CategoryScore, 4> categories;  // nlu::kAllCategories order
  double mean = 1.0;

  const CategoryScore& operator[](nlu::SpanCategory c) const {
    return categories[static_cast<int>(c)];
  }
};

// Exact span matching (category and token boundaries), counts pooled over
// the corpus per category. A category with no gold and no predicted spans
// scores 1; the mean is unweighted over the four categories. Throws
// LengthMismatch.
F1Report span_f1(std::span<const std::vector<nlu::BioLabel>> gold,
                 std::span<const std::vector<nlu::BioLabel>> pred);

// Rows laid out as: dataset, ACTION, ATTRIBUTE, REFER, VALUE, Mean (percent).
std::string format_f1_table(const F1Report& report, const std::string& dataset);
nlohmann::json to_json(const F1Report& report);

struct TurnStats {
  std::size_t dialogues = 0;
  // Turns counted over all records (both speakers) and over user records.
  double mean_turns_per_dialogue = 0.0;
  double mean_user_turns_per_dialogue = 0.0;
  std::optional<double> mean_turns_per_edit;
  std::optional<double> mean_user_turns_per_edit;
  std::vector<int> edits_per_dialogue;
  std::map<int, int> edits_histogram;  // edits -> number of dialogues
  std::vector<int> first_edit_turns;
  std::vector<int> second_edit_turns;
  std::vector<int> first_edit_user_turns;
  std::vector<int> second_edit_user_turns;
  std::optional<double> mean_vision_accuracy;  // over dialogues where defined
};

// An edit spans the records from the one after the previous Execute (or the
// first record) through its Execute record, inclusive. Throws EmptyInput.
TurnStats turn_stats(std::span<const DialogueLog> logs);

std::string format_turn_stats(const TurnStats& stats);
nlohmann::json to_json(const TurnStats& stats);

// Sample Pearson correlation; nullopt when either input has zero variance.
// Throws LengthMismatch for unequal lengths or fewer than two points.
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys);

// Two-sample Kolmogorov-Smirnov statistic sup |F1(x) - F2(x)|. Throws
// EmptyInput if either sample is empty.
double ks_statistic(std::span<const double> a, std::span<const double> b);

}  // namespace slotedit::metrics

#endif  // SLOTEDIT_METRICS_HPP_
