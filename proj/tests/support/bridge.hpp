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

// Conversions between oracle dense storage and library matrices.

#pragma once

#include "matkernel.hpp"
#include "oracles.hpp"

inline magnon::Mat to_mat(const oracle::Dense& d, std::size_t n) { return magnon::Mat::real(n, n, d); }

inline oracle::Dense to_dense(const magnon::Mat& m) {
  oracle::Dense d(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i * m.cols() + j] = m(i, j).real();
  return d;
}
