#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "hsubgrad/solver.hpp"

namespace hsubgrad {

// Fixed CSV header; one row per record, '.' decimals, '\n' line ends.
inline constexpr const char* kTraceCsvHeader = "k,x,y,f,grad_norm,lambda,dist_to_S,drift";

nlohmann::json config_to_json(const SolveConfig& cfg);
SolveConfig config_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const RunTrace& trace);
// Inverse of trace_to_json; the summary is recomputed from the records.
RunTrace trace_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const RunTrace& trace);
std::string trace_to_csv(const RunTrace& trace);

// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hsubgrad
