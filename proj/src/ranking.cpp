// SPDX-License-Identifier: Apache-2.0
#include "lcp/ranking.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcp {

std::vector<ScoredPrompt> rank_prompts(const PromptPool& pool) {
    if (pool.empty()) throw std::invalid_argument("rank_prompts: empty pool");
    std::vector<ScoredPrompt> out = pool.entries();
    // stable_sort preserves insertion order across full ties.
    std::stable_sort(out.begin(), out.end(), [](const ScoredPrompt& a, const ScoredPrompt& b) {
        if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
        return a.prompt.iteration > b.prompt.iteration;
    });
    return out;
}

const ScoredPrompt& select_final_scored(const std::vector<IterationLog>& history,
                                        SelectionRule rule) {
    if (history.empty()) throw std::invalid_argument("select_final_prompt: empty history");
    if (rule == SelectionRule::last) return history.back().new_prompt;
    const ScoredPrompt* best = &history.front().new_prompt;
    for (const IterationLog& log : history) {
        if (log.new_prompt.accuracy > best->accuracy) best = &log.new_prompt;  // earliest tie wins
    }
    return *best;
}

Prompt select_final_prompt(const std::vector<IterationLog>& history, SelectionRule rule) {
    return select_final_scored(history, rule).prompt;
}

}  // namespace lcp
