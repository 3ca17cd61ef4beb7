// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lcp/backend.hpp"
#include "lcp/optimizer.hpp"
#include "lcp/types.hpp"

namespace lcp {

/// Samples the source model answers correctly and the target model does not.
struct FlipSet {
    std::vector<std::string> sample_ids;  // source order preserved
    Rational source_accuracy;
    Rational target_accuracy;
};

/// Requires both record lists to cover the same ids in the same order.
FlipSet compute_flip_set(const std::vector<EvalRecord>& source_records,
                         const std::vector<EvalRecord>& target_records);

/// Draws m without replacement from the flip set, topping up from the
/// remaining target-incorrect samples when the flip set runs short (disabled
/// by `flip_only`). Never returns a sample the target answered correctly.
std::vector<Sample> select_adaptation_samples(const FlipSet& flip,
                                              const std::vector<EvalRecord>& target_records,
                                              const std::vector<Sample>& samples, int m,
                                              Rng& rng, bool flip_only = false);

/// (sample id, pivot) -> translated sample. One backend call per sample.
class TranslationCache {
  public:
    const Sample* find(const std::string& sample_id, const std::string& pivot) const;
    const Sample& put(const std::string& sample_id, const std::string& pivot, Sample value);

  private:
    std::map<std::pair<std::string, std::string>, Sample> map_;
};

/// Copy of the sample with input (and non-label choices) translated into the
/// pivot language. Label-valued fields stay untouched; a choice-text target
/// follows its choice's translation.
Sample translate_sample(const Sample& sample, Backend& backend, const std::string& pivot,
                        TranslationCache& cache, const OptimizationConfig& config);

/// Pivot run vs original run of the same prompt on the same backend: flip =
/// correct when translated, wrong in the original language.
FlipSet compute_cross_lingual_flip_set(const std::vector<Sample>& samples, const Prompt& prompt,
                                       Backend& backend, const std::string& pivot,
                                       TranslationCache& cache, const OptimizationConfig& config);

enum class AdaptMode { cross_model, cross_lingual };

AdaptMode adapt_mode_from_string(const std::string& s);
const char* to_string(AdaptMode m);

struct AdaptBackends {
    std::shared_ptr<Backend> source_eval;
    std::shared_ptr<Backend> target_eval;
    std::shared_ptr<Backend> optimizer;
};

/// optimize_loop with the source prompt as the start and flip-set-driven
/// failure sampling, recomputed each iteration against the current prompt.
/// Ranking always scores on the target backend; the loop exits once the flip
/// set comes back empty.
LoopResult adapt_loop(const Dataset& dataset, const SplitSpec& split, const Prompt& source_prompt,
                      AdaptBackends backends, const OptimizationConfig& config, AdaptMode mode,
                      RunWriter* sink = nullptr);

}  // namespace lcp
