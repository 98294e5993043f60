#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ppc/code.hpp"
#include "ppc/cyclic.hpp"
#include "ppc/decode.hpp"
#include "ppc/harness.hpp"

namespace ppc {

using json = nlohmann::ordered_json;

/// CodeMatrix file format: CSV, m rows by n columns of serialized elements.
std::string matrix_to_csv(const CodeMatrix& c);
CodeMatrix matrix_from_csv(const FieldCtx& F, const std::string& text);

/// BiPoly file format: CSV grid, row index = x-degree, column = y-degree.
std::string bipoly_to_csv(const BiPoly& f, std::size_t s, std::size_t t);
BiPoly bipoly_from_csv(const FieldCtx& F, const std::string& text);

ExperimentConfig config_from_json(const json& j);
json config_to_json(const ExperimentConfig& cfg);

json bipoly_to_json(const BiPoly& f, std::size_t s, std::size_t t);
json decode_to_json(const PpcCode& C, const DecodeOutput& out, bool with_timings);
json trial_to_json(const TrialRecord& rec, bool with_timings);
json summary_to_json(const std::vector<TrialRecord>& records);
json report_to_json(const CyclicReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ppc
