// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "lcp/rational.hpp"

namespace lcp {

// ---------------------------------------------------------------------------
// Errors. Exit-code mapping lives in the CLI: ConfigError -> 2,
// BackendError (transport/format exhaustion) -> 3, DataError -> 4.
// ---------------------------------------------------------------------------

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BackendError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TransportError : BackendError {
    using BackendError::BackendError;
};

/// A single malformed generation (missing/unclosed tag). Recoverable; the
/// retry wrapper catches it.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised once the format-retry budget is spent. Keeps every raw output for
/// diagnostics.
struct FormatExhaustedError : BackendError {
    FormatExhaustedError(const std::string& what, std::vector<std::string> outputs)
        : BackendError(what), raw_outputs(std::move(outputs)) {}
    std::vector<std::string> raw_outputs;
};

// ---------------------------------------------------------------------------
// Task data
// ---------------------------------------------------------------------------

struct Sample {
    std::string id;
    std::string input;
    std::string target;
    std::vector<std::string> choices;  // empty = free-form answer
    std::optional<std::string> lang;

    bool has_choices() const { return !choices.empty(); }
};

struct Dataset {
    std::string name;
    std::vector<Sample> samples;

    void validate() const;
};

struct SplitSpec {
    int train_count = 50;
    int test_count = 200;
    std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Prompts
// ---------------------------------------------------------------------------

enum class PromptOrigin { initial, candidate, contrastive, history, baseline, external };

const char* to_string(PromptOrigin origin);
PromptOrigin prompt_origin_from_string(const std::string& s);

struct Prompt {
    std::string text;
    std::string id;
    PromptOrigin origin = PromptOrigin::initial;
    int iteration = 0;
};

struct ScoredPrompt {
    Prompt prompt;
    Rational accuracy;          // correct/total, exact
    std::vector<bool> bitmap;   // per-train-sample correctness, sample order
};

/// Builds a ScoredPrompt from a bitmap; accuracy is derived, never supplied.
ScoredPrompt make_scored(Prompt prompt, std::vector<bool> bitmap);

/// Scored prompts in insertion order, deduplicated on trimmed text.
class PromptPool {
  public:
    /// Returns false when the text was already present (entry dropped).
    bool insert(ScoredPrompt entry);

    const std::vector<ScoredPrompt>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

  private:
    std::vector<ScoredPrompt> entries_;
    std::unordered_set<std::string> seen_;
};

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

enum class Strategy { lcp, lcp_noncontrastive, opro, autohint };
enum class SelectionRule { last, best };
enum class CrossOptimizerScope { all, contrastive };

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);
const char* to_string(SelectionRule r);
SelectionRule selection_from_string(const std::string& s);
const char* to_string(CrossOptimizerScope s);
CrossOptimizerScope scope_from_string(const std::string& s);

struct OptimizationConfig {
    int num_candidates = 10;   // N
    int wrong_samples = 3;     // m
    int contrastive_k = 3;     // K
    double temperature = 1.0;
    double eval_temperature = 0.0;
    int iterations = 50;
    int max_format_retries = 5;
    Strategy strategy = Strategy::lcp;
    SelectionRule selection = SelectionRule::last;
    std::uint64_t seed = 0;
    std::string initial_prompt = "Let's solve the problem.";
    int eval_concurrency = 4;
    // Token caps are not stated anywhere upstream; these are the recorded
    // project defaults.
    int meta_max_tokens = 1024;
    int answer_max_tokens = 256;
    bool prompt_suffix = false;
    CrossOptimizerScope cross_optimizer_scope = CrossOptimizerScope::all;
    bool adapt_flip_only = false;
    std::string pivot_lang = "en";

    void validate() const;  // throws ConfigError
};

// ---------------------------------------------------------------------------
// Evaluation + run records
// ---------------------------------------------------------------------------

struct EvalRecord {
    std::string sample_id;
    std::string raw_output;
    std::string extracted;
    bool correct = false;
};

struct IterationLog {
    int iteration = 0;
    std::vector<std::vector<std::string>> wrong_sample_draws;
    std::vector<std::string> reasons;
    std::vector<std::string> summaries;
    std::vector<ScoredPrompt> candidates;  // this iteration's scored pool
    ScoredPrompt new_prompt;
    std::vector<EvalRecord> new_prompt_records;
    std::vector<int> meta_call_attempts;
    std::vector<std::string> flip_sample_ids;  // adaptation runs only
    std::string rng_state_digest;
};

bool operator==(const Prompt& a, const Prompt& b);
bool operator==(const ScoredPrompt& a, const ScoredPrompt& b);
bool operator==(const EvalRecord& a, const EvalRecord& b);
bool operator==(const IterationLog& a, const IterationLog& b);

// ---------------------------------------------------------------------------
// Backend addressing
// ---------------------------------------------------------------------------

enum class BackendKind { http, sim };

struct BackendSpec {
    BackendKind kind = BackendKind::sim;
    std::string endpoint_or_landscape;  // base URL or landscape file path
    std::string model_id;
    std::map<std::string, std::string> request_defaults;

    /// Parses "sim:<landscape-file>" or "http:<base-url>;model=<id>[;k=v...]".
    static BackendSpec parse(const std::string& text);
    std::string to_string() const;
};

}  // namespace lcp
