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

#include "error.hpp"

namespace magnon {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::UnstableDrift: return "UnstableDrift";
    case ErrorCode::MeanFieldDivergence: return "MeanFieldDivergence";
    case ErrorCode::PhysicalityViolation: return "PhysicalityViolation";
    case ErrorCode::MonogamyViolation: return "MonogamyViolation";
    case ErrorCode::AllUnstable: return "AllUnstable";
  }
  return "Unknown";
}

}  // namespace magnon
