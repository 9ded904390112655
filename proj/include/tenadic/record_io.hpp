#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tenadic/greedy_engine.hpp"

namespace tenadic {

// Stable RunRecord schema (schema_version 1).  Big integers travel as
// decimal strings; payloads carry no timestamps, so identical runs produce
// byte-identical files.
nlohmann::ordered_json record_to_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& j);

std::string record_to_string(const RunRecord& record);
RunRecord record_from_string(const std::string& text);

void save_record(const RunRecord& record, const std::filesystem::path& path);
RunRecord load_record(const std::filesystem::path& path);

}  // namespace tenadic
