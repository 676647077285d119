#include "common.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "linkpred/errors.hpp"
#include "linkpred/version.hpp"

namespace linkpred::cli {

std::string fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx",
                  static_cast<unsigned long long>(h));
    return out;
}

nlohmann::json input_record(const std::filesystem::path& path) {
    return {{"path", path.string()}, {"fnv1a64", fnv1a64_file(path)}};
}

Ratios parse_ratios(const std::string& text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("--ratios: not a number: '" + tok + "'");
        }
    }
    if (parts.size() != 3)
        throw ConfigError("--ratios: expected three comma-separated values");
    double sum = parts[0] + parts[1] + parts[2];
    if (std::abs(sum - 100.0) < 1e-6) {
        for (double& p : parts) p /= 100.0;
        sum = 1.0;
    }
    const Ratios r{parts[0], parts[1], parts[2]};
    try {
        validate_ratios(r);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("--ratios: ") + e.what());
    }
    return r;
}

std::vector<std::size_t> parse_size_list(const std::string& text,
                                         const std::string& flag) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size() || v <= 0)
                throw std::invalid_argument(tok);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ConfigError(flag + ": not a positive integer: '" + tok +
                              "'");
        }
    }
    if (out.empty())
        throw ConfigError(flag + ": expected at least one value");
    return out;
}

std::filesystem::path resolve_out(const std::filesystem::path& path) {
    if (path.is_absolute()) return path;
    const char* root = std::getenv("LINKPRED_OUT_ROOT");
    if (root == nullptr || *root == '\0') return path;
    return std::filesystem::path(root) / path;
}

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw DataError("write failed: " + path.string());
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path.string());
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

nlohmann::json manifest_base(const std::string& command) {
    return {{"version", linkpred::kVersion}, {"command", command}};
}

}  // namespace linkpred::cli
