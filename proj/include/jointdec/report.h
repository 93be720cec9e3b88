// Copyright 2026 jointdec contributors
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

#include "jointdec/eval.h"

namespace jointdec {

enum class ReportFormat { kCsv, kJson, kMarkdown };

ReportFormat report_format_from_string(const std::string& name);

/// Renders a report document. Column order is fixed: context set, alpha,
/// CER, sub/ins/del, then precision/recall/F1 for the common and rare
/// subsets. CSV and markdown show CER as a percentage and all scores with
/// two decimals; the JSON format keeps full precision plus run metadata
/// and can be reloaded with report_from_json. Throws ValidationError on
/// an empty report.
std::string render_report(const MetricsReport& report, ReportFormat format);

/// Parses a JSON report document (the render_report kJson output).
MetricsReport report_from_json(const std::string& text);

MetricsReport load_report(const std::string& path);

/// One parsed CSV data row, in rendered (display-rounded) units.
struct CsvRow {
  std::string context_set;
  double alpha = 0.0;
  double cer_percent = 0.0;
  double sub_percent = 0.0;
  double ins_percent = 0.0;
  double del_percent = 0.0;
  double common_precision = 0.0;
  double common_recall = 0.0;
  double common_f1 = 0.0;
  double rare_precision = 0.0;
  double rare_recall = 0.0;
  double rare_f1 = 0.0;
};

/// Parses the CSV rendering back into rows (header validated).
std::vector<CsvRow> parse_report_csv(const std::string& text);

/// Display rounding used by the CSV and markdown renderings.
double round2(double value);

void write_text_file(const std::string& text, const std::string& path);

}  // namespace jointdec
