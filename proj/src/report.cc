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

#include "jointdec/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jointdec/error.h"

namespace jointdec {

using nlohmann::json;

namespace {

const char* kCsvHeader =
    "context_set,alpha,cer,sub,ins,del,"
    "common_precision,common_recall,common_f1,"
    "rare_precision,rare_recall,rare_f1";

std::string fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

void check_non_empty(const MetricsReport& report) {
  if (report.cells.empty()) {
    throw ValidationError("cannot render an empty report");
  }
}

json entity_score_to_json(const EntityScore& score) {
  return json{{"precision", score.precision},
              {"recall", score.recall},
              {"f1", score.f1},
              {"true_positives", score.true_positives},
              {"hyp_occurrences", score.hyp_occurrences},
              {"ref_occurrences", score.ref_occurrences}};
}

EntityScore entity_score_from_json(const json& doc) {
  return EntityScore::from_counts(doc.at("true_positives").get<int64_t>(),
                                  doc.at("hyp_occurrences").get<int64_t>(),
                                  doc.at("ref_occurrences").get<int64_t>());
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

}  // namespace

double round2(double value) {
  const double rounded = std::round(value * 100.0) / 100.0;
  return rounded == 0.0 ? 0.0 : rounded;  // normalize -0
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown" || name == "md") return ReportFormat::kMarkdown;
  throw UsageError("unknown report format '" + name +
                   "' (expected csv|json|markdown)");
}

std::string render_report(const MetricsReport& report, ReportFormat format) {
  check_non_empty(report);
  std::string out;
  switch (format) {
    case ReportFormat::kCsv: {
      out = kCsvHeader;
      out += "\n";
      for (const ReportCell& cell : report.cells) {
        out += to_string(cell.context_set);
        out += "," + fixed2(cell.alpha);
        out += "," + fixed2(100.0 * cell.cer.cer);
        out += "," + fixed2(100.0 * cell.cer.sub_rate);
        out += "," + fixed2(100.0 * cell.cer.ins_rate);
        out += "," + fixed2(100.0 * cell.cer.del_rate);
        for (const EntityScore* score : {&cell.common_score,
                                         &cell.rare_score}) {
          out += "," + fixed2(score->precision);
          out += "," + fixed2(score->recall);
          out += "," + fixed2(score->f1);
        }
        out += "\n";
      }
      return out;
    }
    case ReportFormat::kMarkdown: {
      out =
          "| Context | Coefficient | CER (%) | sub/insert/del | "
          "NE-Common Precision/Recall/F1-Score | "
          "NE-Rare Precision/Recall/F1-Score |\n"
          "|---|---|---|---|---|---|\n";
      for (const ReportCell& cell : report.cells) {
        out += "| " + to_string(cell.context_set);
        out += " | " + fixed2(cell.alpha);
        out += " | " + fixed2(100.0 * cell.cer.cer);
        out += " | " + fixed2(100.0 * cell.cer.sub_rate) + "/" +
               fixed2(100.0 * cell.cer.ins_rate) + "/" +
               fixed2(100.0 * cell.cer.del_rate);
        for (const EntityScore* score : {&cell.common_score,
                                         &cell.rare_score}) {
          out += " | " + fixed2(score->precision) + "/" +
                 fixed2(score->recall) + "/" + fixed2(score->f1);
        }
        out += " |\n";
      }
      return out;
    }
    case ReportFormat::kJson: {
      json doc;
      doc["meta"] = {{"seed", report.meta.seed},
                     {"model_file", report.meta.model_file},
                     {"dataset_file", report.meta.dataset_file},
                     {"mode", report.meta.mode},
                     {"beam_width", report.meta.beam_width}};
      json cells = json::array();
      for (const ReportCell& cell : report.cells) {
        json c;
        c["context_set"] = to_string(cell.context_set);
        c["alpha"] = cell.alpha;
        c["cer"] = {{"cer", cell.cer.cer},
                    {"sub", cell.cer.sub_rate},
                    {"ins", cell.cer.ins_rate},
                    {"del", cell.cer.del_rate},
                    {"ref_len", cell.cer.ref_len},
                    {"matches", cell.cer.counts.matches},
                    {"substitutions", cell.cer.counts.substitutions},
                    {"insertions", cell.cer.counts.insertions},
                    {"deletions", cell.cer.counts.deletions}};
        c["common"] = entity_score_to_json(cell.common_score);
        c["rare"] = entity_score_to_json(cell.rare_score);
        cells.push_back(std::move(c));
      }
      doc["cells"] = std::move(cells);
      return doc.dump(2) + "\n";
    }
  }
  throw UsageError("unhandled report format");
}

MetricsReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("report is not valid JSON: ") + e.what());
  }
  MetricsReport report;
  try {
    const json& meta = doc.at("meta");
    report.meta.seed = meta.at("seed").get<uint64_t>();
    report.meta.model_file = meta.at("model_file").get<std::string>();
    report.meta.dataset_file = meta.at("dataset_file").get<std::string>();
    report.meta.mode = meta.at("mode").get<std::string>();
    report.meta.beam_width = meta.at("beam_width").get<int>();
    for (const json& c : doc.at("cells")) {
      ReportCell cell;
      cell.context_set =
          context_set_from_string(c.at("context_set").get<std::string>());
      cell.alpha = c.at("alpha").get<double>();
      const json& e = c.at("cer");
      cell.cer.cer = e.at("cer").get<double>();
      cell.cer.sub_rate = e.at("sub").get<double>();
      cell.cer.ins_rate = e.at("ins").get<double>();
      cell.cer.del_rate = e.at("del").get<double>();
      cell.cer.ref_len = e.at("ref_len").get<int64_t>();
      cell.cer.counts.matches = e.at("matches").get<int64_t>();
      cell.cer.counts.substitutions = e.at("substitutions").get<int64_t>();
      cell.cer.counts.insertions = e.at("insertions").get<int64_t>();
      cell.cer.counts.deletions = e.at("deletions").get<int64_t>();
      cell.common_score = entity_score_from_json(c.at("common"));
      cell.rare_score = entity_score_from_json(c.at("rare"));
      report.cells.push_back(std::move(cell));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("report field error: ") + e.what());
  }
  if (report.cells.empty()) throw FormatError("report has no cells");
  return report;
}

MetricsReport load_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open report file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return report_from_json(buf.str());
  } catch (const Error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::vector<CsvRow> parse_report_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw FormatError("unexpected CSV header");
  }
  std::vector<CsvRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() != 12) {
      throw FormatError("CSV line " + std::to_string(line_no) + " has " +
                        std::to_string(fields.size()) +
                        " fields, expected 12");
    }
    CsvRow row;
    row.context_set = fields[0];
    try {
      row.alpha = std::stod(fields[1]);
      row.cer_percent = std::stod(fields[2]);
      row.sub_percent = std::stod(fields[3]);
      row.ins_percent = std::stod(fields[4]);
      row.del_percent = std::stod(fields[5]);
      row.common_precision = std::stod(fields[6]);
      row.common_recall = std::stod(fields[7]);
      row.common_f1 = std::stod(fields[8]);
      row.rare_precision = std::stod(fields[9]);
      row.rare_recall = std::stod(fields[10]);
      row.rare_f1 = std::stod(fields[11]);
    } catch (const std::exception&) {
      throw FormatError("CSV line " + std::to_string(line_no) +
                        " has a non-numeric field");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw FormatError("failed writing '" + path + "'");
}

}  // namespace jointdec
