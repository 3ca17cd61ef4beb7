// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lcp/types.hpp"

namespace lcp {

/// Descending accuracy; ties go to the newer prompt (higher iteration), then
/// to insertion order. The pool is left untouched.
std::vector<ScoredPrompt> rank_prompts(const PromptPool& pool);

/// Final-prompt pick over a finished run: `last` takes the closing
/// iteration's prompt, `best` the highest train accuracy (earliest iteration
/// wins ties).
Prompt select_final_prompt(const std::vector<IterationLog>& history, SelectionRule rule);

/// Same selection but returning the full scored entry.
const ScoredPrompt& select_final_scored(const std::vector<IterationLog>& history,
                                        SelectionRule rule);

}  // namespace lcp
