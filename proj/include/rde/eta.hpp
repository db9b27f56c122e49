#pragma once

#include "rde/core_model.hpp"

#include <vector>

namespace rde {

/// The iteration condition: does there exist eta such that every sequence
/// c_1, c_2, ... with c_m in `source` has a contiguous window [N1,N2],
/// N2 <= eta, whose sum lands in `target`?
struct EtaQuery {
    int k = 1;
    IndexSet source;
    IndexSet target;
};

struct EtaDecision {
    bool holds = false;
    /// Minimal eta; meaningful only when holds.
    int eta_min = 0;
    /// When holds and source is nonempty: a longest sequence over source with
    /// no window sum in target (length eta_min - 1; empty when eta_min = 1).
    std::vector<int> longest_survivor;
    /// When not holds and source is nonempty: automaton states forming a
    /// cycle that avoids the target forever. Each state is the sorted set of
    /// suffix-window partial sums (capped at k).
    std::vector<std::vector<int>> failure_cycle;
};

EtaDecision eta_decide(const EtaQuery& q);

struct EtaOracleResult {
    enum class Status { determined, undetermined, budget_exceeded };
    Status status = Status::undetermined;
    bool holds = false;  // meaningful only when determined
    int eta_min = 0;
};

/// Test-only independent check: explicitly enumerates sequences over source
/// (depth-first, recomputing window sums by direct summation) up to max_len.
/// Determined iff some length L <= max_len forces a hit for every sequence.
EtaOracleResult eta_oracle(const EtaQuery& q, int max_len,
                           unsigned long long sequence_budget = 50'000'000ULL);

}  // namespace rde
