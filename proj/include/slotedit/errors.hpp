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

#ifndef SLOTEDIT_ERRORS_HPP_
#define SLOTEDIT_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slotedit {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edit value outside [-100, 100].
class ValueOutOfRange : public Error {
 public:
  explicit ValueOutOfRange(std::int64_t value)
      : Error("value " + std::to_string(value) + " is outside -100..100"),
        value_(value) {}
  std::int64_t value() const { return value_; }

 private:
  std::int64_t value_;
};

// Numeric token that is not a plain integer ("10.5").
class NotAnInteger : public Error {
 public:
  explicit NotAnInteger(const std::string& token)
      : Error("'" + token + "' is not an integer"), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// A state transition was requested in a state that does not allow it.
class InvalidContext : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Fixture loading failures. object_id() names the offending object when one
// is involved, and is empty for scene-level problems.
class SceneError : public Error {
 public:
  enum class Kind { kMissingFile, kDimensionMismatch, kEmptyMask, kBadManifest };

  SceneError(Kind kind, std::string object_id, const std::string& what)
      : Error(what), kind_(kind), object_id_(std::move(object_id)) {}

  Kind kind() const { return kind_; }
  const std::string& object_id() const { return object_id_; }

 private:
  Kind kind_;
  std::string object_id_;
};

class EmptyScene : public Error {
 public:
  using Error::Error;
};

class MissingTemplate : public Error {
 public:
  explicit MissingTemplate(const std::string& key)
      : Error("no response template for '" + key + "'") {}
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ImageIoError : public Error {
 public:
  using Error::Error;
};

}  // namespace slotedit

#endif  // SLOTEDIT_ERRORS_HPP_
