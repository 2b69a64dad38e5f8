#pragma once

#include <tcc/analysis.hpp>
#include <tcc/classify10.hpp>
#include <tcc/code.hpp>
#include <tcc/extend12.hpp>

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcc::io {

inline constexpr const char* kToolVersion = "1.0.0";

// Generator-matrix text archives: one code per record, k lines of n digits
// from {0,1,2}; records separated by a line containing only '%'. Blank lines
// and lines starting with '#' are ignored. Parse errors carry "<name>:<line>".
std::vector<LinearCode> read_codes(std::istream& in, const std::string& name);
std::vector<LinearCode> read_codes_file(const std::filesystem::path& path);
std::string codes_text(const std::vector<LinearCode>& codes,
                       const std::string& header = "");
void write_codes_file(const std::filesystem::path& path,
                      const std::vector<LinearCode>& codes,
                      const std::string& header = "");

// JSON documents (insertion-ordered keys; byte-stable for fixed inputs).
nlohmann::ordered_json classification_summary(const ClassificationResult& r);
nlohmann::ordered_json extension_summary(const Extend12Result& r);
nlohmann::ordered_json analysis_summary(const std::vector<LinearCode>& codes);

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::ordered_json& doc);
nlohmann::ordered_json read_json_file(const std::filesystem::path& path);

// Rebuild a classification from an output directory written by
// write_classification_outputs: parses reps-10-5-<d>.codes, recomputes all
// per-class metadata, and cross-checks the counts recorded in the summary.
ClassificationResult load_classification(const std::filesystem::path& dir,
                                         int target_d);

// Canonical file names within an output directory.
std::string reps_file_name(int target_d);
std::string classification_summary_name(int target_d);

void write_classification_outputs(const std::filesystem::path& dir,
                                  const ClassificationResult& r);
void write_extension_outputs(const std::filesystem::path& dir,
                             const Extend12Result& r);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);
std::string utc_timestamp();

struct RunManifest {
    std::string command;
    std::string version = kToolVersion;
    std::string started;
    std::string finished;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256

    // Hashes dir/rel and records it under its relative path.
    void add_output(const std::filesystem::path& dir, const std::string& rel);
    nlohmann::ordered_json to_json() const;
};

}  // namespace tcc::io
