// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lcp/backend.hpp"
#include "lcp/evaluator.hpp"
#include "lcp/rng.hpp"
#include "lcp/types.hpp"

namespace lcp {

class RunWriter;

/// m distinct incorrect samples drawn uniformly without replacement; all of
/// them when fewer than m exist, empty when nothing is incorrect.
std::vector<Sample> select_wrong_samples(const std::vector<EvalRecord>& records,
                                         const std::vector<Sample>& samples, int m, Rng& rng);

struct MetaText {
    std::string text;
    int attempts = 1;
};

/// Reason-generation call for one failure case. The current prompt travels in
/// the request's sim channel (the simulated model grades hints against it).
MetaText generate_reason(const Sample& sample, const std::string& current_prompt,
                         Backend& backend, const OptimizationConfig& config);

/// Failure summarization over (sample, reason) pairs. Diversity comes from
/// the backend at temperature > 0.
MetaText summarize_failures(const std::vector<std::pair<Sample, std::string>>& pairs,
                            Backend& backend, const OptimizationConfig& config);

/// Draws one batch of failure samples for a candidate repetition.
using SampleSelector = std::function<std::vector<Sample>(Rng&)>;

struct CandidateGeneration {
    std::vector<Prompt> prompts;
    std::vector<std::vector<std::string>> draws;  // sample ids per repetition
    std::vector<std::string> reasons;             // repetition-major order
    std::vector<std::string> summaries;
    std::vector<int> attempts;  // one entry per meta call
};

/// N repetitions of {draw failures -> reason each -> summarize}; each summary
/// becomes one candidate prompt. Failed repetitions are skipped, so fewer
/// than N candidates may come back.
CandidateGeneration generate_candidates(const SampleSelector& select_samples,
                                        const std::string& current_prompt, Backend& backend,
                                        const OptimizationConfig& config, Rng& rng,
                                        int iteration);

/// Spec-shaped convenience: wrong-sample selection from eval records.
CandidateGeneration generate_candidates(const std::vector<EvalRecord>& records,
                                        const std::vector<Sample>& samples,
                                        const std::string& current_prompt, Backend& backend,
                                        const OptimizationConfig& config, Rng& rng,
                                        int iteration);

/// Iteration pool: candidates (insertion order) then the top-`cap` prior
/// entries by accuracy; exact-text dedup keeps the first occurrence. The
/// prior pool is untouched.
PromptPool integrate_history(const std::vector<ScoredPrompt>& candidates,
                             const PromptPool& prior, int cap);

struct NewPromptResult {
    Prompt prompt;
    int attempts = 0;  // 0 = no meta call (autohint passthrough)
};

/// Strategy dispatch over the ranked pool: lcp contrasts top-K vs bottom-K
/// (K clamped to half the pool), the ranked-list strategies feed the top-N
/// list, autohint returns the best candidate summary with no call.
NewPromptResult generate_new_prompt(const std::vector<ScoredPrompt>& ranked, Backend& backend,
                                    const OptimizationConfig& config, int iteration);

struct LoopBackends {
    std::shared_ptr<Backend> eval;
    std::shared_ptr<Backend> optimizer;  // may alias eval
};

struct LoopResult {
    std::vector<IterationLog> history;
    Prompt final_prompt;
    ScoredPrompt final_scored;
};

/// The full optimization loop. Iteration 0 scores the initial prompt; each
/// following iteration generates candidates, scores the integrated pool,
/// synthesizes a new prompt and scores it. Exits early once train accuracy
/// hits 1.0. Writes through `sink` (when given) as iterations complete.
LoopResult optimize_loop(const Dataset& dataset, const SplitSpec& split, LoopBackends backends,
                         const OptimizationConfig& config, RunWriter* sink = nullptr);

}  // namespace lcp
