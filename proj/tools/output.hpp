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

// CSV and graymap writers. CSV layout:
//
//   # magnon-entangle csv v1
//   delta_c,delta_m,stable,e_am1,e_am2
//   -10,-10,1,0.0123,0.0123
//
// Numbers use the shortest round-trip decimal form; absent values are empty fields.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "magnon_entangle/magnon_entangle.h"

namespace magnon::cli {

inline constexpr std::string_view kCsvMagic = "# magnon-entangle csv v1";

std::string format_number(double v);
std::string format_optional(const std::optional<double>& v);

struct GridTable {
  std::string x_name;
  std::string y_name;
  std::vector<me_quantity> quantities;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<me_record> records;

  std::optional<double> value(std::size_t i, me_quantity q) const;
};

void write_grid_csv(std::ostream& out, const GridTable& table);

/// 8-bit binary PGM of one quantity; rows follow grid order, absent cells are 0,
/// finite values scaled linearly between their min and max.
void write_pgm(std::ostream& out, const GridTable& table, me_quantity q);

void write_key_values(std::ostream& out,
                      const std::vector<std::pair<std::string, std::optional<double>>>& rows);

}  // namespace magnon::cli
