// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lcp/types.hpp"

namespace lcp {

enum class MetaTemplate { reason, summary, contrastive_high, contrastive_low, ranked_list, translate };

/// The stored template body (slots unfilled).
const std::string& meta_prompt_body(MetaTemplate t);

std::string render_reason_prompt(const Sample& sample);

/// Instruction followed by one Input/Expected output/Reason block per pair.
std::string render_summary_prompt(const std::vector<std::pair<Sample, std::string>>& pairs);

/// High-level contrastive meta prompt: good block first, scores as integer
/// percentages (round-half-up). Requires non-empty, text-disjoint sets.
std::string build_contrastive_meta_prompt(const std::vector<ScoredPrompt>& good,
                                          const std::vector<ScoredPrompt>& bad);

/// Low-level pairwise-explanation variant over >= 2 prompts.
std::string build_low_level_contrastive_meta_prompt(const std::vector<ScoredPrompt>& prompts);

/// Ranked-list prompt (best first) for the non-contrastive strategies.
std::string build_ranked_list_meta_prompt(const std::vector<ScoredPrompt>& ranked);

/// One request translating every translatable field of a sample. `choices`
/// holds only the entries that should be translated.
std::string render_translate_prompt(const std::string& input,
                                    const std::vector<std::string>& choices,
                                    const std::string& target, bool include_target);

}  // namespace lcp
