#include "dutchdraw/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dutchdraw {

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", r.num_str()}, {"den", r.den_str()}};
}

std::string score_decimal(const Measure& measure, const Rational& value) {
  if (!measure.decimal_is_signed_sqrt) return value.decimal(12);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", measure.display_value(value));
  return buf;
}

namespace {

ordered_json score_json(const Measure& measure, const Rational& value) {
  ordered_json j = rational_json(value);
  j["decimal"] = score_decimal(measure, value);
  return j;
}

}  // namespace

ordered_json baseline_report_json(const DutchDrawSpec& spec, const Measure& measure,
                                  const BaselineResult& result, bool include_sweep) {
  ordered_json j;
  j["schema_version"] = "1";
  j["M"] = spec.m;
  j["P"] = spec.positives;
  j["measure"] = measure.name;
  j["objective"] = objective_name(spec.objective);
  j["j_opt"] = result.j_opt;
  j["theta_opt"] = ordered_json::array();
  for (const auto& t : result.theta_opt) j["theta_opt"].push_back(rational_json(t));
  j["score"] = score_json(measure, result.score);
  if (include_sweep) {
    j["sweep"] = ordered_json::array();
    for (std::size_t i = 0; i < result.sweep.size(); ++i) {
      j["sweep"].push_back(
          {{"j", i}, {"score", score_json(measure, result.sweep[i])}});
    }
  }
  j["c_undef"] = result.c_undef_substituted && result.c_undef
                     ? rational_json(*result.c_undef)
                     : ordered_json(nullptr);
  j["c_undef_substituted"] = result.c_undef_substituted;
  return j;
}

ordered_json theorem_report_json(const TheoremReport& report, const Measure& measure) {
  ordered_json j;
  j["schema_version"] = "1";
  j["M"] = report.m;
  j["P"] = report.positives;
  j["measure"] = report.measure;
  j["objective"] = objective_name(report.objective);
  j["dd_score"] = score_json(measure, report.dd_score);
  j["best_ii_score"] = score_json(measure, report.best_ii_score);
  j["witness"] = report.witness ? ordered_json(report.witness->to_string())
                                : ordered_json(nullptr);
  j["bound_holds"] = report.bound_holds;
  j["group_identity_holds"] = report.group_identity_holds;
  j["mixtures_within_bound"] = report.mixtures_within_bound;
  return j;
}

ordered_json sim_report_json(const SimReport& report, const DutchDrawSpec& spec,
                             const Measure& measure) {
  ordered_json j;
  j["schema_version"] = "1";
  j["model"] = report.model;
  j["M"] = spec.m;
  j["P"] = spec.positives;
  j["measure"] = measure.name;
  j["objective"] = objective_name(spec.objective);
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", report.mean_score);
  j["mean_score"] = buf;
  std::snprintf(buf, sizeof(buf), "%.12g", report.std_error);
  j["std_error"] = buf;
  if (report.exact_expectation) {
    j["exact_expectation"] = score_json(measure, *report.exact_expectation);
    std::snprintf(buf, sizeof(buf), "%.12g", report.abs_error);
    j["abs_error"] = buf;
  } else {
    j["exact_expectation"] = nullptr;
  }
  return j;
}

ordered_json measures_json(const MeasureRegistry& registry) {
  ordered_json arr = ordered_json::array();
  for (const auto& m : registry.all()) {
    arr.push_back({{"name", m.name},
                   {"formula", m.formula},
                   {"domain", m.domain},
                   {"decimal_is_signed_sqrt", m.decimal_is_signed_sqrt}});
  }
  return arr;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint8_t parse_label(const std::string& token, std::size_t line_no) {
  if (token == "0") return 0;
  if (token == "1") return 1;
  throw std::invalid_argument("invalid label '" + token + "' at line " +
                              std::to_string(line_no));
}

}  // namespace

LabelVector load_labels(const std::string& path,
                        const std::optional<std::string>& column) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open labels file '" + path + "'");
  std::vector<std::uint8_t> bits;
  std::string line;
  std::size_t line_no = 0;

  if (!column) {
    while (std::getline(in, line)) {
      ++line_no;
      std::string token = trim(line);
      if (token.empty()) continue;
      bits.push_back(parse_label(token, line_no));
    }
  } else {
    std::size_t col_index = 0;
    bool have_index = false;
    // numeric column selector is a zero-based index, no header expected
    try {
      std::size_t pos = 0;
      col_index = std::stoul(*column, &pos);
      have_index = pos == column->size();
    } catch (const std::exception&) {
      have_index = false;
    }
    if (!have_index) {
      if (!std::getline(in, line))
        throw std::invalid_argument("labels file '" + path + "' is empty");
      ++line_no;
      auto header = split_csv(line);
      bool found = false;
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (trim(header[i]) == *column) {
          col_index = i;
          found = true;
          break;
        }
      }
      if (!found)
        throw std::invalid_argument("column '" + *column + "' not found in '" +
                                    path + "'");
    }
    while (std::getline(in, line)) {
      ++line_no;
      if (trim(line).empty()) continue;
      auto cells = split_csv(line);
      if (col_index >= cells.size())
        throw std::invalid_argument("missing column at line " +
                                    std::to_string(line_no));
      bits.push_back(parse_label(trim(cells[col_index]), line_no));
    }
  }
  if (bits.empty())
    throw std::invalid_argument("labels file '" + path + "' holds no labels");
  return LabelVector(std::move(bits));
}

}  // namespace dutchdraw
