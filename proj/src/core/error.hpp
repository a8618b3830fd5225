// Copyright 2026 The magnon-entangle Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace magnon {

enum class ErrorCode {
  InvalidArgument,
  SingularMatrix,
  NoConvergence,
  UnstableDrift,
  MeanFieldDivergence,
  PhysicalityViolation,
  MonogamyViolation,
  AllUnstable,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; the C API maps it onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures that describe the input configuration rather than the numerics.
  bool is_config_error() const noexcept { return code_ == ErrorCode::InvalidArgument; }

 private:
  ErrorCode code_;
};

}  // namespace magnon
