#pragma once

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace apbench::jsonl {

using json = nlohmann::json;

std::vector<json> read_file(const std::filesystem::path& path);

// Overwrites `path` with one compact JSON object per line.
void write_file(const std::filesystem::path& path, const std::vector<json>& rows);

void append_line(const std::filesystem::path& path, const json& row);

}  // namespace apbench::jsonl
