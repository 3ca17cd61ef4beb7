// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcp/backend.hpp"
#include "lcp/types.hpp"

namespace lcp {

struct EvalOptions {
    double temperature = 0.0;  // evaluation runs deterministic by default
    int max_tokens = 256;
    bool prompt_suffix = false;  // place the prompt after the query
};

/// Deterministic query template: prompt, blank line, sample input, blank
/// line, answer-format instruction. `prompt_suffix` swaps prompt and input.
std::string render_task_query(const Prompt& prompt, const Sample& sample,
                              bool prompt_suffix = false);

/// With choices: the last parenthesized single token matching a choice label
/// (A, B, ... by position) or a choice text. Otherwise (or with no choices):
/// the last non-empty line. Total; empty input yields "".
std::string extract_answer(const std::string& raw, const std::vector<std::string>& choices);

/// Normalized-equality match against the target, or a label match naming the
/// target's choice position.
bool answer_matches(const std::string& extracted, const Sample& sample);

/// One record per sample, in sample order, fanning out up to `concurrency`
/// in-flight task_answer calls. A failed call marks its record incorrect with
/// the error text as raw_output instead of aborting the run.
std::vector<EvalRecord> run_inference(const Prompt& prompt, const std::vector<Sample>& samples,
                                      Backend& backend, int concurrency,
                                      const EvalOptions& options = {});

struct CachedEval {
    ScoredPrompt scored;
    std::vector<EvalRecord> records;
};

/// Keyed by (prompt text, dataset name, split); safe for concurrent use.
/// Values for identical keys are identical by determinism, so last-writer-wins
/// inserts are sound.
class ScoreCache {
  public:
    const CachedEval* find(const std::string& key) const;
    const CachedEval& put(const std::string& key, CachedEval value);
    static std::string key_for(const std::string& prompt_text, const std::string& split_key);

  private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, CachedEval> map_;
};

/// Scores a prompt on the train split, consulting `cache` first. `split_key`
/// identifies (dataset name, split) so distinct splits never collide.
CachedEval score_prompt(const Prompt& prompt, const std::vector<Sample>& train_samples,
                        Backend& backend, int concurrency, ScoreCache& cache,
                        const std::string& split_key, const EvalOptions& options = {});

}  // namespace lcp
