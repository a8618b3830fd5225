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

#include "output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

namespace magnon::cli {

std::string format_number(double v) {
  if (!std::isfinite(v)) return "";
  if (v == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string format_optional(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

std::optional<double> GridTable::value(std::size_t i, me_quantity q) const {
  const me_record& r = records[i];
  if ((r.present_mask & (1u << q)) == 0) return std::nullopt;
  return r.values[q];
}

void write_grid_csv(std::ostream& out, const GridTable& table) {
  out << kCsvMagic << '\n' << table.x_name << ',' << table.y_name << ",stable";
  for (auto q : table.quantities) out << ',' << me_quantity_name(q);
  out << '\n';
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    const me_record& r = table.records[i];
    out << format_number(r.x) << ',' << format_number(r.y) << ',' << r.stable;
    for (auto q : table.quantities) out << ',' << format_optional(table.value(i, q));
    out << '\n';
  }
}

void write_pgm(std::ostream& out, const GridTable& table, me_quantity q) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    if (auto v = table.value(i, q); v && std::isfinite(*v)) {
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
    }
  }
  out << "P5\n" << table.nx << ' ' << table.ny << "\n255\n";
  for (std::size_t i = 0; i < table.records.size(); ++i) {
    unsigned char px = 0;
    if (auto v = table.value(i, q); v && std::isfinite(*v) && hi > lo) {
      px = static_cast<unsigned char>(std::lround(255.0 * (*v - lo) / (hi - lo)));
    }
    out.put(static_cast<char>(px));
  }
}

void write_key_values(std::ostream& out,
                      const std::vector<std::pair<std::string, std::optional<double>>>& rows) {
  out << kCsvMagic << "\nkey,value\n";
  for (const auto& [k, v] : rows) out << k << ',' << format_optional(v) << '\n';
}

}  // namespace magnon::cli
