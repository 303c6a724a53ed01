#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsteiner/errors.hpp"

namespace qsteiner {

/// An exact-cover instance: pick pairwise disjoint sets whose union is
/// {0, ..., universe_size-1}.
struct ExactCoverInstance {
    struct Row {
        std::uint32_t id = 0;
        std::vector<std::uint32_t> cols; // sorted, distinct
    };

    std::uint32_t universe_size = 0;
    std::vector<Row> rows;

    /// Throws MalformedInstance on out-of-range columns, duplicate ids, or
    /// repeated members within a row.
    void validate() const;
};

struct CoverSolution {
    std::vector<std::uint32_t> ids; // sorted
};

enum class SearchMode {
    FirstSolution,
    CountAll,
    EnumerateUpTo,
};

struct SearchBudget {
    std::uint64_t node_limit = 0; // 0 = unlimited
    double wall_secs = 0;         // 0 = unlimited
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::FirstSolution;
    std::uint64_t max_solutions = 1; // EnumerateUpTo bound
    bool shuffle_rows = false;       // seeded branch-order shuffle
};

enum class SolveStatus {
    SolutionFound,   // at least one solution in hand
    Exhausted,       // full search, no solution: non-existence is certified
    BudgetExceeded,  // truncated search, nothing found; proves nothing
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint32_t max_depth = 0;
    std::uint64_t solutions_found = 0;
    double elapsed_secs = 0;
    bool complete = false; // search space fully explored (counts are total)
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::BudgetExceeded;
    std::vector<CoverSolution> solutions;
    std::uint64_t solution_count = 0;
    SearchStats stats;
};

/// Algorithm X over a dancing-links node mesh (O(1) row hide/unhide).
/// Column choice is minimum-remaining-values with lowest-index tie-break.
/// Deterministic for a fixed instance, budget, and seed.
SolveOutcome solve(const ExactCoverInstance& instance,
                   const SearchBudget& budget = {});

/// Runs `workers` independent seeded searches (seed, seed+1, ...) over the
/// shared instance and cancels the rest when one finishes. Workers past the
/// first shuffle their row order. Aggregated node counts are reported.
SolveOutcome solve_portfolio(const ExactCoverInstance& instance,
                             const SearchBudget& budget,
                             std::uint32_t workers);

struct CheckReport {
    bool ok = false;
    std::vector<std::uint32_t> duplicated; // columns covered more than once
    std::vector<std::uint32_t> uncovered;  // columns covered zero times
    std::string message;                   // names the first violation
};

/// Validates a claimed solution: chosen rows pairwise disjoint and covering.
CheckReport check_solution(const ExactCoverInstance& instance,
                           const std::vector<std::uint32_t>& ids);

} // namespace qsteiner
