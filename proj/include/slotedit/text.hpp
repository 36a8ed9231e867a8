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

// Small ASCII string helpers.

#ifndef SLOTEDIT_TEXT_HPP_
#define SLOTEDIT_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace slotedit::text {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Replaces every occurrence of `from`.
std::string replace_all(std::string s, std::string_view from, std::string_view to);

}  // namespace slotedit::text

#endif  // SLOTEDIT_TEXT_HPP_
