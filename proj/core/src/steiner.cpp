#include "qsteiner/steiner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <limits>
#include <memory>
#include <string>
#include <thread>
#include <unordered_set>

namespace qsteiner {

namespace {

struct ExpListHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Streams the distinct images of one representative under all n*(2^n-1)
// map compositions, as sorted exponent lists. Returns the orbit size.
template <typename Fn>
std::uint64_t expand_rep_orbit(const FieldTables& t, const Subspace& rep,
                               Fn&& fn) {
    const std::uint64_t mod = t.order();
    const std::size_t m = rep.elements.size();

    std::unordered_set<std::vector<std::uint32_t>, ExpListHash> seen;
    seen.reserve(static_cast<std::size_t>(t.n() * mod / 2));
    std::vector<std::uint32_t> mapped(m);
    std::vector<std::uint32_t> img(m);
    for (std::uint32_t l = 0; l < t.n(); ++l) {
        for (std::size_t i = 0; i < m; ++i) {
            mapped[i] = t.frobenius_exp(rep.elements[i], l);
        }
        for (std::uint64_t j = 0; j < mod; ++j) {
            for (std::size_t i = 0; i < m; ++i) {
                img[i] = static_cast<std::uint32_t>((mapped[i] + j) % mod);
            }
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) fn(img);
        }
    }
    return seen.size();
}

std::uint32_t resolve_workers(std::uint32_t requested) {
    if (requested != 0) return requested;
    const std::uint32_t hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace

std::uint64_t expected_rep_count(const FieldTables& tables, std::uint32_t k) {
    const std::uint64_t m = (1ull << k) - 1;
    const std::uint64_t denom = m * (m - 1) * tables.n();
    const std::uint64_t numer = tables.order() - 1; // 2^n - 2
    if (denom == 0 || numer % denom != 0) return 0;
    return numer / denom;
}

SteinerStructure assemble(const FieldTables& tables, const CosetTable& cosets,
                          const CosetGroupTable& groups,
                          std::vector<Subspace> reps,
                          std::string provenance) {
    if (tables.p() != 2) {
        throw Error("Steiner assembly is defined for p = 2 only");
    }
    if (reps.empty()) {
        throw ConditionViolated("no representatives given");
    }
    const std::uint32_t k = reps.front().dim;

    std::vector<std::int32_t> covered_by(groups.group_count(), -1);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const Subspace& rep = reps[i];
        if (rep.field != &tables) {
            throw Error("representative " + std::to_string(i) +
                        " was built against a different field");
        }
        if (rep.dim != k || !is_subspace(tables, rep.elements)) {
            throw ConditionViolated("representative " + std::to_string(i) +
                                    " is not a valid " + std::to_string(k) +
                                    "-dimensional subspace");
        }
        std::vector<std::uint32_t> sig;
        try {
            sig = signature_of(rep, cosets, groups);
        } catch (const NotCosetComplete&) {
            throw ConditionViolated("representative " + std::to_string(i) +
                                    " is not coset complete");
        }
        for (std::uint32_t g : sig) {
            if (covered_by[g] >= 0) {
                throw ConditionViolated(
                    "representatives " + std::to_string(covered_by[g]) +
                    " and " + std::to_string(i) + " share group " +
                    std::to_string(g));
            }
            covered_by[g] = static_cast<std::int32_t>(i);
        }
    }
    for (std::uint32_t g = 0; g < groups.group_count(); ++g) {
        if (covered_by[g] < 0) {
            throw ConditionViolated("group " + std::to_string(g) +
                                    " is not covered by any representative");
        }
    }
    if (reps.size() != expected_rep_count(tables, k)) {
        throw ConditionViolated(
            "representative count " + std::to_string(reps.size()) +
            " does not match the required " +
            std::to_string(expected_rep_count(tables, k)));
    }

    SteinerStructure s;
    s.spec = tables.spec();
    s.k = k;
    s.reps = std::move(reps);
    s.provenance = std::move(provenance);
    return s;
}

std::uint64_t for_each_block(const FieldTables& tables,
                             const SteinerStructure& s,
                             const std::function<void(const Subspace&)>& fn) {
    std::uint64_t total = 0;
    Subspace block;
    block.field = &tables;
    block.dim = s.k;
    for (const Subspace& rep : s.reps) {
        total += expand_rep_orbit(
            tables, rep, [&](const std::vector<std::uint32_t>& exps) {
                block.elements = exps;
                fn(block);
            });
    }
    return total;
}

namespace {

// Coverage increments are keyed by the two smallest exponents of a
// 2-subspace {a < b < c}; c is determined by a and b, so a flat
// order*order table indexes every 2-subspace of the field.
struct CertifyContext {
    const FieldTables& t;
    const SteinerStructure& s;
    std::uint64_t mod;

    template <typename Count>
    std::uint64_t count_rep(const Subspace& rep, Count&& count) const {
        const std::size_t m = rep.elements.size();
        std::vector<std::uint32_t> vecs(m);
        return expand_rep_orbit(
            t, rep, [&](const std::vector<std::uint32_t>& exps) {
                for (std::size_t i = 0; i < m; ++i) {
                    vecs[i] = t.antilog(exps[i]);
                }
                for (std::size_t r = 0; r + 1 < m; ++r) {
                    for (std::size_t q = r + 1; q < m; ++q) {
                        const std::uint32_t third = t.log(vecs[r] ^ vecs[q]);
                        if (third > exps[q]) count(exps[r], exps[q]);
                    }
                }
            });
    }
};

} // namespace

CoverageReport certify(const FieldTables& tables, const SteinerStructure& s,
                       CertifyOptions opts) {
    if (tables.p() != 2) {
        throw Error("certification is defined for p = 2 only");
    }
    if (tables.spec() != s.spec) {
        throw Error("structure was built for a different field");
    }
    const std::uint64_t mod = tables.order();
    const std::uint32_t workers =
        std::min<std::uint32_t>(resolve_workers(opts.workers),
                                static_cast<std::uint32_t>(s.reps.size()));
    const CertifyContext ctx{tables, s, mod};

    const std::uint64_t m = (1ull << s.k) - 1;
    const std::uint64_t pairs_per_block = m * (m - 1) / 6;
    const std::uint64_t flat_bytes = mod * mod * sizeof(std::uint32_t);
    const std::uint64_t keys_upper_bytes =
        s.reps.size() * tables.n() * mod * pairs_per_block * 8;

    CoverageReport report;

    if (flat_bytes <= opts.memory_budget_bytes) {
        // Flat-counter route.
        std::unique_ptr<std::atomic<std::uint32_t>[]> counters(
            new std::atomic<std::uint32_t>[mod * mod]());

        std::atomic<std::uint64_t> blocks{0};
        auto work = [&](std::uint32_t w) {
            for (std::size_t i = w; i < s.reps.size(); i += workers) {
                blocks += ctx.count_rep(
                    s.reps[i], [&](std::uint32_t a, std::uint32_t b) {
                        counters[static_cast<std::uint64_t>(a) * mod + b]
                            .fetch_add(1, std::memory_order_relaxed);
                    });
            }
        };
        if (workers <= 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (std::uint32_t w = 0; w < workers; ++w) {
                pool.emplace_back(work, w);
            }
            for (auto& t : pool) t.join();
        }
        report.total_blocks = blocks.load();

        // Single-threaded audit over every 2-subspace of the field.
        for (std::uint64_t a = 0; a < mod; ++a) {
            const std::uint32_t va = tables.antilog(a);
            for (std::uint64_t b = a + 1; b < mod; ++b) {
                const std::uint32_t third = tables.log(va ^ tables.antilog(b));
                if (third < b) continue;
                ++report.total_two_subspaces;
                const std::uint32_t c =
                    counters[a * mod + b].load(std::memory_order_relaxed);
                if (c != 1) {
                    ++report.covered_not_once;
                    if (!report.first_violation) {
                        report.first_violation = CoverageReport::Witness{
                            static_cast<std::uint32_t>(a),
                            static_cast<std::uint32_t>(b), third, c};
                    }
                }
            }
        }
    } else if (keys_upper_bytes <= opts.memory_budget_bytes) {
        // Sort-and-scan route: collect the key of every covered 2-subspace,
        // sort, then merge against the full enumeration.
        std::vector<std::vector<std::uint64_t>> local(workers);
        std::vector<std::uint64_t> block_counts(workers, 0);
        auto work = [&](std::uint32_t w) {
            for (std::size_t i = w; i < s.reps.size(); i += workers) {
                block_counts[w] += ctx.count_rep(
                    s.reps[i], [&](std::uint32_t a, std::uint32_t b) {
                        local[w].push_back(
                            static_cast<std::uint64_t>(a) * mod + b);
                    });
            }
        };
        if (workers <= 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (std::uint32_t w = 0; w < workers; ++w) {
                pool.emplace_back(work, w);
            }
            for (auto& t : pool) t.join();
        }
        std::vector<std::uint64_t> keys;
        std::size_t total_keys = 0;
        for (const auto& v : local) total_keys += v.size();
        keys.reserve(total_keys);
        for (auto& v : local) {
            keys.insert(keys.end(), v.begin(), v.end());
            v.clear();
            v.shrink_to_fit();
        }
        std::sort(keys.begin(), keys.end());
        for (std::uint64_t c : block_counts) report.total_blocks += c;

        std::size_t idx = 0;
        for (std::uint64_t a = 0; a < mod; ++a) {
            const std::uint32_t va = tables.antilog(a);
            for (std::uint64_t b = a + 1; b < mod; ++b) {
                const std::uint32_t third = tables.log(va ^ tables.antilog(b));
                if (third < b) continue;
                ++report.total_two_subspaces;
                const std::uint64_t key = a * mod + b;
                std::uint64_t c = 0;
                while (idx < keys.size() && keys[idx] == key) {
                    ++c;
                    ++idx;
                }
                if (c != 1) {
                    ++report.covered_not_once;
                    if (!report.first_violation) {
                        report.first_violation = CoverageReport::Witness{
                            static_cast<std::uint32_t>(a),
                            static_cast<std::uint32_t>(b), third, c};
                    }
                }
            }
        }
        assert(idx == keys.size()); // every key is a canonical 2-subspace
    } else {
        throw MemoryBudgetExceeded(
            "coverage counting needs " + std::to_string(flat_bytes) +
            " bytes flat or up to " + std::to_string(keys_upper_bytes) +
            " bytes sorted, budget is " +
            std::to_string(opts.memory_budget_bytes));
    }

    report.certified = report.covered_not_once == 0;
    return report;
}

DifferenceFamily derive_difference_family(const FieldTables& tables,
                                          const SteinerStructure& s) {
    const std::uint64_t mod = tables.order();

    DifferenceFamily df;
    df.group_order = mod;
    df.block_size = (1u << s.k) - 1;
    df.lambda = 1;
    df.base_blocks.reserve(s.reps.size() * tables.n());
    for (const Subspace& rep : s.reps) {
        for (std::uint32_t l = 0; l < tables.n(); ++l) {
            std::vector<std::uint32_t> block;
            block.reserve(rep.elements.size());
            for (std::uint32_t e : rep.elements) {
                block.push_back(tables.frobenius_exp(e, l));
            }
            std::sort(block.begin(), block.end());
            df.base_blocks.push_back(std::move(block));
        }
    }

    // Every nonzero residue must occur exactly lambda times as a
    // within-block difference.
    std::vector<std::uint32_t> counts(mod, 0);
    for (const auto& block : df.base_blocks) {
        for (std::uint32_t er : block) {
            for (std::uint32_t es : block) {
                if (er != es) ++counts[(mod + er - es) % mod];
            }
        }
    }
    for (std::uint64_t d = 1; d < mod; ++d) {
        if (counts[d] != df.lambda) {
            throw ValidationFailed(
                "residue " + std::to_string(d) + " occurs " +
                std::to_string(counts[d]) + " times as a difference, not " +
                std::to_string(df.lambda));
        }
    }
    return df;
}

BlockIndex::BlockIndex(const FieldTables& tables,
                       const CosetGroupTable& groups,
                       const SteinerStructure& s)
    : tables_(tables), groups_(groups), reps_(s.reps) {
    if (tables.p() != 2) {
        throw Error("block queries are defined for p = 2 only");
    }
    by_group_.assign(groups.group_count(),
                     GroupEntry{std::numeric_limits<std::uint32_t>::max(), 0,
                                0, 0});
    for (std::uint32_t i = 0; i < reps_.size(); ++i) {
        const auto& exps = reps_[i].elements;
        const std::size_t m = exps.size();
        for (std::size_t r = 0; r + 1 < m; ++r) {
            for (std::size_t q = r + 1; q < m; ++q) {
                const std::uint32_t third = tables.log(
                    tables.antilog(exps[r]) ^ tables.antilog(exps[q]));
                if (third < exps[q]) continue;
                const std::int32_t gid =
                    groups.group_of_residue[exps[q] - exps[r]];
                GroupEntry& entry = by_group_[gid];
                if (entry.rep != std::numeric_limits<std::uint32_t>::max()) {
                    throw ConditionViolated(
                        "group " + std::to_string(gid) +
                        " is covered by two representatives");
                }
                entry = GroupEntry{i, exps[r], exps[q], third};
            }
        }
    }
    for (std::size_t g = 0; g < by_group_.size(); ++g) {
        if (by_group_[g].rep == std::numeric_limits<std::uint32_t>::max()) {
            throw ConditionViolated("group " + std::to_string(g) +
                                    " is not covered; queries would fail");
        }
    }
}

SteinerBlock BlockIndex::block_containing(std::uint32_t x, std::uint32_t y,
                                          std::uint32_t z) const {
    if (x == y || x == z || y == z) {
        throw PointsNotDistinct("query points must be three distinct vectors");
    }
    const std::uint64_t mod = tables_.order();

    // Translate by x; the remaining two points span a 2-subspace.
    const std::uint32_t va = x ^ y;
    const std::uint32_t vb = x ^ z;
    const std::uint32_t ea = tables_.log(va);
    const std::uint32_t eb = tables_.log(vb);
    const std::uint32_t ec = tables_.log(va ^ vb);

    std::array<std::uint32_t, 3> target{ea, eb, ec};
    std::sort(target.begin(), target.end());

    const std::int32_t gid =
        groups_.group_of_residue[(mod + ea - eb) % mod];
    const GroupEntry& entry = by_group_[gid];
    const std::array<std::uint32_t, 3> local{entry.t1, entry.t2, entry.t3};

    for (std::uint32_t l = 0; l < tables_.n(); ++l) {
        std::array<std::uint32_t, 3> mapped;
        for (int i = 0; i < 3; ++i) {
            mapped[i] = tables_.frobenius_exp(local[i], l);
        }
        for (int anchor = 0; anchor < 3; ++anchor) {
            const std::uint64_t j = (mod + target[0] - mapped[anchor]) % mod;
            std::array<std::uint32_t, 3> image;
            for (int i = 0; i < 3; ++i) {
                image[i] =
                    static_cast<std::uint32_t>((mapped[i] + j) % mod);
            }
            std::sort(image.begin(), image.end());
            if (image == target) {
                const Subspace block =
                    map_subspace(reps_[entry.rep], l, j);
                SteinerBlock out;
                out.points.reserve(block.elements.size() + 1);
                out.points.push_back(x); // zero of the block, translated
                for (std::uint32_t e : block.elements) {
                    out.points.push_back(tables_.antilog(e) ^ x);
                }
                std::sort(out.points.begin(), out.points.end());
                return out;
            }
        }
    }
    throw ConditionViolated(
        "no block covers the query 2-subspace; structure is not a Steiner "
        "structure");
}

} // namespace qsteiner
