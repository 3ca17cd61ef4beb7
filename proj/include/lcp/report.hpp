// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "lcp/rational.hpp"

namespace lcp {

struct WinRateTable {
    std::vector<std::string> methods;
    std::vector<std::string> tasks;
    std::vector<std::vector<Rational>> accuracy;  // [method][task]
    std::vector<Rational> win_rate;               // per method, exact
};

/// Pairwise win rates over a complete accuracy matrix: per task and ordered
/// pair (A, B), A earns 1 for a strictly higher accuracy, 0.5 for a tie;
/// win_rate(A) = mean over all tasks and opponents.
WinRateTable compute_win_rates(const std::vector<std::vector<Rational>>& accuracy,
                               const std::vector<std::string>& methods,
                               const std::vector<std::string>& tasks);

}  // namespace lcp
