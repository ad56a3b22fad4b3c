#pragma once

#include <utility>
#include <vector>

#include "tfpmis/abstract_graph.hpp"

namespace tfpmis {
namespace oracle {

struct OracleBudget {
    int max_n = 40;
    long long time_cap_ms = 60000;
};

struct AlphaResult {
    int size = 0;
    std::vector<int> witness;  // lexicographically smallest maximum independent set
};

/// Exact independence number by branch and bound (max-degree branching,
/// greedy clique-cover upper bound). Deterministic; the witness is the
/// lexicographically smallest maximum independent set.
/// Throws BudgetExceeded when n > budget.max_n or the time cap is hit.
AlphaResult alpha_exact(const AbstractGraph& g, const OracleBudget& budget = {});

struct IndependenceCheck {
    bool ok = false;
    std::pair<int, int> violating_edge{-1, -1};
};

IndependenceCheck verify_independent(const AbstractGraph& g, const std::vector<int>& s);

} // namespace oracle
} // namespace tfpmis
