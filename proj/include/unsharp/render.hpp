// Copyright 2026 The unsharp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic plain-text rendering of tables and reports.
//
// A table has a label column, " | ", then one column per header cell. Cells
// are left-justified to their column width and separated by one space. Under
// the header is a rule of dashes with "-+-" at the bar. Trailing spaces are
// stripped. Widths count code points, so the UTF-8 operator symbols occupy one
// column each.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unsharp/effect_algebra.hpp"
#include "unsharp/report.hpp"
#include "unsharp/tense.hpp"

namespace unsharp {

struct TextTable {
  std::string corner;
  std::vector<std::string> header;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
};

std::string render(const TextTable &table);

enum class TableOp { kPlus, kOdot, kImpArrow, kImpSquig, kImpDouble, kOtimes };

/// Parses the CLI spelling (plus, odot, imp-arrow, imp-squig, imp-double, otimes).
std::optional<TableOp> table_op_from_name(std::string_view name);
/// The operator symbol used as the table corner.
const char *symbol(TableOp op);

/// Row x, column y holds x op y; undefined cells are '-'.
TextTable operation_table(const EffectAlgebra &ea, TableOp op);

/// Rows of set propositions, one column per time point, corner "t".
TextTable proposition_table(const EffectAlgebra &ea, const TimeFrame &frame,
                            const std::vector<std::pair<std::string, SetProposition>> &rows);

/// Cover pairs "x < y", in canonical order.
std::string render_covers(const EffectAlgebra &ea);

/// One "s t" line per pair.
std::string render_pairs(const std::vector<std::string> &names,
                         const std::vector<std::pair<std::size_t, std::size_t>> &pairs);

/// One line per check, then a summary line.
std::string render_report(const Report &report);
/// One JSON object per line with keys id, status, witness (plus cases, failures, sampled).
std::string render_report_lines(const Report &report);

std::size_t display_width(const std::string &s);

}  // namespace unsharp
