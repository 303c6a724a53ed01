#include "qsteiner/cover.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace qsteiner {

void ExactCoverInstance::validate() const {
    std::unordered_set<std::uint32_t> ids;
    ids.reserve(rows.size() * 2);
    for (const Row& row : rows) {
        if (!ids.insert(row.id).second) {
            throw MalformedInstance("duplicate set id " +
                                    std::to_string(row.id));
        }
        if (row.cols.empty()) {
            throw MalformedInstance("set " + std::to_string(row.id) +
                                    " is empty");
        }
        std::uint32_t prev = 0;
        bool first = true;
        for (std::uint32_t c : row.cols) {
            if (c >= universe_size) {
                throw MalformedInstance("set " + std::to_string(row.id) +
                                        " references column " +
                                        std::to_string(c) +
                                        " outside the universe");
            }
            if (!first && c <= prev) {
                throw MalformedInstance("set " + std::to_string(row.id) +
                                        " has unsorted or repeated members");
            }
            prev = c;
            first = false;
        }
    }
}

namespace {

constexpr std::uint64_t kClockCheckMask = 0x3FF; // wall probe every 1024 nodes

// Toroidal doubly-linked node mesh (Knuth's dancing links): node 0 is the
// root, nodes 1..U are column headers, the rest are row entries.
class Dlx {
public:
    Dlx(const ExactCoverInstance& inst, const SearchBudget& budget,
        const std::atomic<bool>* cancel)
        : inst_(inst), budget_(budget), cancel_(cancel),
          rng_(budget.seed) {
        const std::uint32_t u = inst.universe_size;
        std::size_t node_count = 1 + u;
        for (const auto& row : inst.rows) node_count += row.cols.size();
        left_.resize(node_count);
        right_.resize(node_count);
        up_.resize(node_count);
        down_.resize(node_count);
        col_.resize(node_count);
        row_.assign(node_count, -1);
        size_.assign(u + 1, 0);

        for (std::uint32_t c = 0; c <= u; ++c) {
            left_[c] = c == 0 ? u : c - 1;
            right_[c] = c == u ? 0 : c + 1;
            up_[c] = down_[c] = static_cast<std::int32_t>(c);
            col_[c] = static_cast<std::int32_t>(c);
        }

        std::int32_t next = static_cast<std::int32_t>(u + 1);
        for (std::size_t r = 0; r < inst.rows.size(); ++r) {
            const std::int32_t first = next;
            for (std::uint32_t c : inst.rows[r].cols) {
                const std::int32_t node = next++;
                const std::int32_t hdr = static_cast<std::int32_t>(c + 1);
                col_[node] = hdr;
                row_[node] = static_cast<std::int32_t>(r);
                up_[node] = up_[hdr];
                down_[node] = hdr;
                down_[up_[hdr]] = node;
                up_[hdr] = node;
                ++size_[hdr];
                if (node == first) {
                    left_[node] = right_[node] = node;
                } else {
                    left_[node] = node - 1;
                    right_[node] = first;
                    right_[node - 1] = node;
                    left_[first] = node;
                }
            }
        }
    }

    SolveOutcome run() {
        start_ = std::chrono::steady_clock::now();
        search(0);
        SolveOutcome out;
        out.solutions = std::move(solutions_);
        out.solution_count = stats_.solutions_found;
        stats_.complete = !aborted_;
        stats_.elapsed_secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start_)
                .count();
        out.stats = stats_;
        if (stats_.solutions_found > 0) {
            out.status = SolveStatus::SolutionFound;
        } else {
            out.status = aborted_ ? SolveStatus::BudgetExceeded
                                  : SolveStatus::Exhausted;
        }
        return out;
    }

private:
    void cover(std::int32_t c) {
        right_[left_[c]] = right_[c];
        left_[right_[c]] = left_[c];
        for (std::int32_t i = down_[c]; i != c; i = down_[i]) {
            for (std::int32_t j = right_[i]; j != i; j = right_[j]) {
                down_[up_[j]] = down_[j];
                up_[down_[j]] = up_[j];
                --size_[col_[j]];
            }
        }
    }

    void uncover(std::int32_t c) {
        for (std::int32_t i = up_[c]; i != c; i = up_[i]) {
            for (std::int32_t j = left_[i]; j != i; j = left_[j]) {
                ++size_[col_[j]];
                up_[down_[j]] = j;
                down_[up_[j]] = j;
            }
        }
        right_[left_[c]] = c;
        left_[right_[c]] = c;
    }

    bool out_of_budget() {
        if (cancel_ && cancel_->load(std::memory_order_relaxed)) return true;
        if (budget_.node_limit && stats_.nodes >= budget_.node_limit) {
            return true;
        }
        if (budget_.wall_secs > 0 &&
            (stats_.nodes & kClockCheckMask) == 0) {
            const double elapsed =
                std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
            if (elapsed >= budget_.wall_secs) return true;
        }
        return false;
    }

    void record_solution() {
        ++stats_.solutions_found;
        const bool store = budget_.mode != SearchMode::CountAll;
        if (store) {
            CoverSolution s;
            s.ids.reserve(partial_.size());
            for (std::int32_t r : partial_) s.ids.push_back(inst_.rows[r].id);
            std::sort(s.ids.begin(), s.ids.end());
            solutions_.push_back(std::move(s));
        }
        if (budget_.mode == SearchMode::FirstSolution ||
            (budget_.mode == SearchMode::EnumerateUpTo &&
             budget_.max_solutions > 0 &&
             stats_.solutions_found >= budget_.max_solutions)) {
            aborted_ = true;
        }
    }

    void search(std::uint32_t depth) {
        if (right_[0] == 0) {
            record_solution();
            return;
        }
        // MRV: fewest remaining rows, lowest column index breaking ties.
        std::int32_t best = -1;
        std::uint32_t best_size = std::numeric_limits<std::uint32_t>::max();
        for (std::int32_t c = right_[0]; c != 0; c = right_[c]) {
            if (size_[c] < best_size) {
                best_size = size_[c];
                best = c;
            }
        }
        if (best_size == 0) return;

        std::vector<std::int32_t> choices;
        choices.reserve(best_size);
        for (std::int32_t i = down_[best]; i != best; i = down_[i]) {
            choices.push_back(i);
        }
        if (budget_.shuffle_rows) {
            std::shuffle(choices.begin(), choices.end(), rng_);
        }

        cover(best);
        for (std::int32_t i : choices) {
            ++stats_.nodes;
            if (out_of_budget()) {
                aborted_ = true;
                break;
            }
            partial_.push_back(row_[i]);
            stats_.max_depth = std::max(
                stats_.max_depth, static_cast<std::uint32_t>(partial_.size()));
            for (std::int32_t j = right_[i]; j != i; j = right_[j]) {
                cover(col_[j]);
            }
            search(depth + 1);
            for (std::int32_t j = left_[i]; j != i; j = left_[j]) {
                uncover(col_[j]);
            }
            partial_.pop_back();
            if (aborted_) break;
        }
        uncover(best);
    }

    const ExactCoverInstance& inst_;
    const SearchBudget& budget_;
    const std::atomic<bool>* cancel_;
    std::mt19937_64 rng_;
    std::chrono::steady_clock::time_point start_;

    std::vector<std::int32_t> left_, right_, up_, down_, col_, row_;
    std::vector<std::uint32_t> size_;
    std::vector<std::int32_t> partial_;
    std::vector<CoverSolution> solutions_;
    SearchStats stats_;
    bool aborted_ = false;
};

SolveOutcome solve_with_cancel(const ExactCoverInstance& instance,
                               const SearchBudget& budget,
                               const std::atomic<bool>* cancel) {
    instance.validate();
    Dlx dlx(instance, budget, cancel);
    return dlx.run();
}

} // namespace

SolveOutcome solve(const ExactCoverInstance& instance,
                   const SearchBudget& budget) {
    return solve_with_cancel(instance, budget, nullptr);
}

SolveOutcome solve_portfolio(const ExactCoverInstance& instance,
                             const SearchBudget& budget,
                             std::uint32_t workers) {
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers <= 1 || budget.mode != SearchMode::FirstSolution) {
        return solve(instance, budget);
    }
    instance.validate();

    std::atomic<bool> stop{false};
    std::vector<SolveOutcome> results(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const auto start = std::chrono::steady_clock::now();
    for (std::uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            SearchBudget b = budget;
            b.seed = budget.seed + w;
            b.shuffle_rows = budget.shuffle_rows || w > 0;
            results[w] = solve_with_cancel(instance, b, &stop);
            if (results[w].status != SolveStatus::BudgetExceeded) {
                stop.store(true, std::memory_order_relaxed);
            }
        });
    }
    for (auto& t : pool) t.join();

    SolveOutcome out;
    out.status = SolveStatus::BudgetExceeded;
    for (std::uint32_t w = 0; w < workers; ++w) {
        out.stats.nodes += results[w].stats.nodes;
        out.stats.max_depth =
            std::max(out.stats.max_depth, results[w].stats.max_depth);
        const bool better =
            (results[w].status == SolveStatus::SolutionFound &&
             out.status != SolveStatus::SolutionFound) ||
            (results[w].status == SolveStatus::Exhausted &&
             out.status == SolveStatus::BudgetExceeded);
        if (better) {
            out.status = results[w].status;
            out.solutions = results[w].solutions;
            out.solution_count = results[w].solution_count;
            out.stats.solutions_found = results[w].stats.solutions_found;
        }
    }
    out.stats.elapsed_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

CheckReport check_solution(const ExactCoverInstance& instance,
                           const std::vector<std::uint32_t>& ids) {
    std::unordered_map<std::uint32_t, const ExactCoverInstance::Row*> by_id;
    for (const auto& row : instance.rows) by_id.emplace(row.id, &row);

    std::vector<std::uint32_t> coverage(instance.universe_size, 0);
    for (std::uint32_t id : ids) {
        const auto it = by_id.find(id);
        if (it == by_id.end()) {
            throw MalformedInstance("chosen id " + std::to_string(id) +
                                    " is not in the instance");
        }
        for (std::uint32_t c : it->second->cols) ++coverage[c];
    }

    CheckReport report;
    for (std::uint32_t c = 0; c < instance.universe_size; ++c) {
        if (coverage[c] == 0) report.uncovered.push_back(c);
        if (coverage[c] > 1) report.duplicated.push_back(c);
    }
    report.ok = report.uncovered.empty() && report.duplicated.empty();
    if (report.ok) {
        report.message = "exact cover";
    } else if (!report.duplicated.empty()) {
        report.message =
            "column " + std::to_string(report.duplicated.front()) +
            " covered more than once";
    } else {
        report.message = "column " + std::to_string(report.uncovered.front()) +
                         " is uncovered";
    }
    return report;
}

} // namespace qsteiner
