#include "qsteiner/candidates.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <thread>

namespace qsteiner {

CosetGroupTable build_groups(const FieldTables& tables,
                             const CosetTable& cosets) {
    if (tables.p() != 2) {
        throw Error("coset grouping is defined for p = 2 only");
    }
    const std::uint64_t mod = tables.order();

    CosetGroupTable gt;
    gt.group_of_residue.assign(mod, -1);

    std::array<std::uint32_t, 6> reps;
    for (std::uint64_t a = 1; a < mod; ++a) {
        // {0, 1, alpha^a, alpha^b} is a 2-subspace: 1 + alpha^a + alpha^b = 0.
        const std::uint64_t b = tables.log(1u ^ tables.antilog(a));
        const std::uint64_t diffs[6] = {a,           mod - a,
                                        b,           mod - b,
                                        (mod + a - b) % mod,
                                        (mod + b - a) % mod};
        for (int i = 0; i < 6; ++i) reps[i] = cosets.rho(diffs[i]);
        std::sort(reps.begin(), reps.end());
        if (std::adjacent_find(reps.begin(), reps.end()) != reps.end()) {
            throw DegenerateGroup(
                "2-subspace at shift " + std::to_string(a) +
                " induces fewer than six distinct coset representatives");
        }

        const auto it = gt.group_of.find(reps[0]);
        if (it == gt.group_of.end()) {
            // Reps are assigned all-or-nothing, so reps[0] decides.
            const auto gid = static_cast<std::uint32_t>(gt.groups.size());
            gt.groups.emplace_back(reps.begin(), reps.end());
            for (std::uint32_t r : reps) gt.group_of.emplace(r, gid);
        } else if (!std::equal(reps.begin(), reps.end(),
                               gt.groups[it->second].begin(),
                               gt.groups[it->second].end())) {
            throw GroupCollision(
                "2-subspaces at shift " + std::to_string(a) +
                " induce a 6-set overlapping an earlier, different one");
        }
    }

    // Partition totality over the size-n cosets.
    std::size_t grouped = 0;
    for (const auto& coset : cosets.cosets) {
        if (coset.size() != cosets.n) continue;
        if (!gt.group_of.count(coset.front())) {
            throw GroupCollision("size-n coset " +
                                 std::to_string(coset.front()) +
                                 " is not covered by any group");
        }
        ++grouped;
    }
    if (grouped != gt.groups.size() * 6) {
        throw GroupCollision("groups do not partition the size-n cosets");
    }

    for (std::uint64_t d = 1; d < mod; ++d) {
        const auto it = gt.group_of.find(cosets.rho(d));
        if (it != gt.group_of.end()) {
            gt.group_of_residue[d] = static_cast<std::int32_t>(it->second);
        }
    }
    return gt;
}

std::vector<std::uint32_t> signature_of(const Subspace& x,
                                        const CosetTable& cosets,
                                        const CosetGroupTable& groups) {
    const std::uint64_t m = x.elements.size();
    const std::uint64_t target = m * (m - 1);

    const CosetDifferenceSet cds = coset_difference_set(x, cosets);
    if (cds.size() != target) {
        throw NotCosetComplete("subspace has " + std::to_string(cds.size()) +
                               " coset differences, needs " +
                               std::to_string(target));
    }

    std::vector<std::uint32_t> sig;
    for (std::uint32_t rep : cds.reps) {
        sig.push_back(groups.group_of.at(rep));
    }
    std::sort(sig.begin(), sig.end());

    // Each covered group must contribute all six of its cosets.
    for (std::size_t i = 0; i < sig.size(); i += 6) {
        if (i + 6 > sig.size() || sig[i] != sig[i + 5]) {
            throw Error("coset difference set covers a group partially");
        }
        if (i + 6 < sig.size() && sig[i] == sig[i + 6]) {
            throw Error("coset difference set covers a group partially");
        }
    }
    sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
    return sig;
}

namespace {

// Coset-completeness through the group table: the M = m(m-1)/6 two-subspaces
// of X must land on M distinct groups (each validated group then contributes
// its full 6-set of cosets).
bool groups_distinct(const std::vector<std::uint32_t>& exps,
                     const FieldTables& t, const CosetGroupTable& groups,
                     std::vector<std::int32_t>& scratch) {
    const std::uint64_t mod = t.order();
    scratch.clear();
    const std::size_t m = exps.size();
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t s = r + 1; s < m; ++s) {
            const std::uint32_t third =
                t.log(t.antilog(exps[r]) ^ t.antilog(exps[s]));
            if (third < exps[s]) continue; // count each 2-subspace once
            const std::int32_t gid =
                groups.group_of_residue[exps[s] - exps[r]];
            if (std::find(scratch.begin(), scratch.end(), gid) !=
                scratch.end()) {
                return false;
            }
            scratch.push_back(gid);
        }
    }
    return true;
}

struct EnumWorker {
    const FieldTables& tables;
    const CosetGroupTable& groups;
    std::uint32_t k = 0;
    std::uint32_t stride = 1;
    std::uint32_t offset = 0;
    std::set<std::vector<std::uint32_t>> found; // canonical exponent lists

    // Enumerates the subspaces containing alpha^0 through increasing
    // generator tuples; each orbit member with exponent 0 is built exactly
    // once because every new generator must be the minimal exponent of the
    // coset it spawns.
    void run() {
        const std::uint64_t mod = tables.order();
        std::vector<std::uint32_t> span{0, tables.antilog(0)};
        span.reserve(std::size_t{1} << k);
        for (std::uint64_t g = 1 + offset; g < mod; g += stride) {
            extend(span, 2, g);
        }
    }

    // span holds the 2^(d-1) packed vectors built so far; adding alpha^g
    // raises the dimension to d.
    void extend(std::vector<std::uint32_t>& span, std::uint32_t d,
                std::uint64_t g) {
        const std::uint32_t gv = tables.antilog(g);
        if (std::find(span.begin(), span.end(), gv) != span.end()) return;
        const std::size_t base = span.size();
        for (std::size_t i = 1; i < base; ++i) {
            if (tables.log(span[i] ^ gv) < g) return;
        }
        for (std::size_t i = 0; i < base; ++i) span.push_back(span[i] ^ gv);

        if (d == k) {
            leaf(span);
        } else {
            const std::uint64_t mod = tables.order();
            for (std::uint64_t g2 = g + 1; g2 < mod; ++g2) {
                extend(span, d + 1, g2);
            }
        }
        span.resize(base);
    }

    void leaf(const std::vector<std::uint32_t>& span) {
        exps_scratch_.clear();
        for (std::uint32_t v : span) {
            if (v != 0) exps_scratch_.push_back(tables.log(v));
        }
        std::sort(exps_scratch_.begin(), exps_scratch_.end());
        if (!groups_distinct(exps_scratch_, tables, groups, gid_scratch_)) {
            return;
        }

        Subspace x;
        x.field = &tables;
        x.dim = k;
        x.elements = exps_scratch_;
        found.insert(canonical_form(x).elements);
    }

    std::vector<std::uint32_t> exps_scratch_;
    std::vector<std::int32_t> gid_scratch_;
};

} // namespace

std::vector<CandidateOrbit> enumerate_candidates(const FieldTables& tables,
                                                 const CosetTable& cosets,
                                                 const CosetGroupTable& groups,
                                                 std::uint32_t k,
                                                 EnumerateOptions opts) {
    if (tables.p() != 2) {
        throw Error("candidate enumeration is defined for p = 2 only");
    }
    if (k < 2 || k > tables.n()) {
        throw Error("candidate enumeration requires 2 <= k <= n");
    }
    if (k > 3 && !opts.allow_large_k) {
        throw Error("enumeration cost grows steeply for k > 3; "
                    "pass allow_large_k to run it anyway");
    }

    std::uint32_t workers = opts.workers;
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;

    std::vector<EnumWorker> state;
    state.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
        state.push_back(EnumWorker{tables, groups, k, workers, w, {}, {}, {}});
    }
    if (workers == 1) {
        state[0].run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (auto& s : state) {
            pool.emplace_back([&s] { s.run(); });
        }
        for (auto& t : pool) t.join();
    }

    std::set<std::vector<std::uint32_t>> merged;
    for (auto& s : state) merged.merge(s.found);

    std::vector<CandidateOrbit> out;
    out.reserve(merged.size());
    for (const auto& exps : merged) {
        CandidateOrbit c;
        c.rep.field = &tables;
        c.rep.dim = k;
        c.rep.elements = exps;
        c.signature = signature_of(c.rep, cosets, groups);
        out.push_back(std::move(c));
    }
    return out;
}

ExactCoverInstance build_cover_instance(
    const std::vector<CandidateOrbit>& candidates,
    const CosetGroupTable& groups) {
    ExactCoverInstance inst;
    inst.universe_size = groups.group_count();
    inst.rows.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        inst.rows.push_back({static_cast<std::uint32_t>(i),
                             candidates[i].signature});
    }
    return inst;
}

} // namespace qsteiner
