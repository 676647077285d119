#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkpred/split.hpp"

namespace linkpred::cli {

// FNV-1a over the file bytes, as a 16-digit hex string. Used to record
// input identities in run manifests.
std::string fnv1a64_file(const std::filesystem::path& path);

nlohmann::json input_record(const std::filesystem::path& path);

// Accepts "80,10,10" (percentages) or "0.8,0.1,0.1" (fractions); anything
// else raises ConfigError mentioning --ratios.
Ratios parse_ratios(const std::string& text);

// Comma-separated positive integers ("100,100,100"); ConfigError names
// `flag` on bad input.
std::vector<std::size_t> parse_size_list(const std::string& text,
                                         const std::string& flag);

// Relative output paths are resolved under $LINKPRED_OUT_ROOT when set.
std::filesystem::path resolve_out(const std::filesystem::path& path);

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);

nlohmann::json manifest_base(const std::string& command);

}  // namespace linkpred::cli
