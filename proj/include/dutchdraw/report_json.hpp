#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "dutchdraw/baseline.hpp"
#include "dutchdraw/measures.hpp"
#include "dutchdraw/simulate.hpp"
#include "dutchdraw/theorem.hpp"

namespace dutchdraw {

using ordered_json = nlohmann::ordered_json;

/// {"num": "...", "den": "..."} — integers carried as strings so exactness
/// survives the wire at any magnitude.
ordered_json rational_json(const Rational& r);

/// Decimal rendering of a score for a given measure (12 significant digits;
/// signed-sqrt transform for surrogate-valued measures). The JSON decimal
/// fields are always derived from the exact fields through this function.
std::string score_decimal(const Measure& measure, const Rational& value);

ordered_json baseline_report_json(const DutchDrawSpec& spec, const Measure& measure,
                                  const BaselineResult& result, bool include_sweep);

ordered_json theorem_report_json(const TheoremReport& report, const Measure& measure);

ordered_json sim_report_json(const SimReport& report, const DutchDrawSpec& spec,
                             const Measure& measure);

ordered_json measures_json(const MeasureRegistry& registry);

/// Reads a label vector from a file: one 0/1 token per line, or a CSV column
/// (by name or zero-based index) when `column` is given. Malformed tokens are
/// hard errors naming the line number.
LabelVector load_labels(const std::string& path,
                        const std::optional<std::string>& column = std::nullopt);

}  // namespace dutchdraw
