// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcp/types.hpp"

namespace lcp {

inline constexpr int kRunSchemaVersion = 1;

// nlohmann ADL hooks for the persisted domain types.
void to_json(nlohmann::json& j, const Prompt& p);
void from_json(const nlohmann::json& j, Prompt& p);
void to_json(nlohmann::json& j, const ScoredPrompt& sp);
void from_json(const nlohmann::json& j, ScoredPrompt& sp);
void to_json(nlohmann::json& j, const EvalRecord& r);
void from_json(const nlohmann::json& j, EvalRecord& r);
void to_json(nlohmann::json& j, const IterationLog& log);
void from_json(const nlohmann::json& j, IterationLog& log);
void to_json(nlohmann::json& j, const BackendSpec& spec);
void from_json(const nlohmann::json& j, BackendSpec& spec);
void to_json(nlohmann::json& j, const OptimizationConfig& c);
void from_json(const nlohmann::json& j, OptimizationConfig& c);

/// A persisted run: runs/<name>/config.json, iterations/<iter>.json,
/// final.json, report.csv. Iteration files are written append-only as the
/// loop progresses, so an aborted run keeps its completed prefix.
class RunWriter {
  public:
    explicit RunWriter(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    void write_config(const nlohmann::json& config);
    void write_iteration(const IterationLog& log);
    void write_final(const nlohmann::json& final_doc);
    void write_report_csv(const std::vector<IterationLog>& history);

  private:
    std::filesystem::path dir_;
};

struct RunArtifact {
    std::filesystem::path dir;
    nlohmann::json config;
    std::vector<IterationLog> history;
    std::optional<nlohmann::json> final_doc;
};

/// Reload of a persisted run; verifies the schema version and layout.
RunArtifact load_run(const std::filesystem::path& dir);

/// Canonical serialization used for every run file: sorted keys, 2-space
/// indent, trailing newline. Keeping one dumper makes runs byte-comparable.
std::string dump_json(const nlohmann::json& j);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace lcp
