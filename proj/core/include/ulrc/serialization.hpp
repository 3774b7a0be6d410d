#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "ulrc/bounds.hpp"
#include "ulrc/constructions.hpp"
#include "ulrc/linear_code.hpp"
#include "ulrc/simulation.hpp"

namespace ulrc {

/// A stored code: either a bare generator matrix or a construction with
/// its descriptor, so `analyze` can audit a code without re-running the
/// construction. Symbols and coordinates are zero-based canonical indices
/// throughout the format.
using CodeFile = std::variant<LinearCode, PyramidCode, GabidulinLRC>;

const LinearCode& code_of(const CodeFile& file);

nlohmann::json field_to_json(const FieldSpec& field);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const LinearCode& code);
LinearCode code_from_json(const nlohmann::json& j);

nlohmann::json code_file_to_json(const CodeFile& file);
CodeFile code_file_from_json(const nlohmann::json& j);

void save_code_file(const std::string& path, const CodeFile& file);
CodeFile load_code_file(const std::string& path);

nlohmann::json bound_report_to_json(const BoundReport& report);
nlohmann::json witness_to_json(const WitnessSet& witness);
nlohmann::json sim_report_to_json(const SimReport& report);

}  // namespace ulrc
