#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsteiner/candidates.hpp"
#include "qsteiner/field.hpp"
#include "qsteiner/subspace.hpp"

namespace qsteiner {

/// A Steiner structure S_2[2,k,n] given by orbit representatives: the full
/// block list is the closure of the reps under the Frobenius and cyclic
/// shift maps.
struct SteinerStructure {
    FieldSpec spec;
    std::uint32_t k = 0;
    std::vector<Subspace> reps;
    std::string provenance;
};

/// (2^n - 2) / ((2^k - 1)(2^k - 2) n), the representative count required of
/// a structure with both maps as automorphisms.
std::uint64_t expected_rep_count(const FieldTables& tables, std::uint32_t k);

/// Accepts the representatives only if they are pairwise disjoint coset
/// complete with signatures covering every group exactly once, in the
/// required count. Throws ConditionViolated naming the failing pair or the
/// uncovered group.
SteinerStructure assemble(const FieldTables& tables, const CosetTable& cosets,
                          const CosetGroupTable& groups,
                          std::vector<Subspace> reps,
                          std::string provenance = {});

/// Streams every distinct block (image of a representative under the
/// n*(2^n-1) maps) and returns the total count. Deterministic order.
std::uint64_t for_each_block(const FieldTables& tables,
                             const SteinerStructure& s,
                             const std::function<void(const Subspace&)>& fn);

struct CoverageReport {
    std::uint64_t total_blocks = 0;
    std::uint64_t total_two_subspaces = 0;
    std::uint64_t covered_not_once = 0;
    bool certified = false;

    struct Witness {
        std::uint32_t e1 = 0, e2 = 0, e3 = 0; // exponents of the 2-subspace
        std::uint64_t count = 0;
    };
    std::optional<Witness> first_violation;
};

struct CertifyOptions {
    std::uint64_t memory_budget_bytes = 4ull << 30;
    std::uint32_t workers = 1; // 0 = hardware concurrency
};

/// Exhaustive check that every 2-subspace of F_2^n lies in exactly one
/// expanded block. Uses a flat coverage counter when it fits the memory
/// budget and a sort-and-scan fallback otherwise; throws
/// MemoryBudgetExceeded when neither fits.
CoverageReport certify(const FieldTables& tables, const SteinerStructure& s,
                       CertifyOptions opts = {});

/// A (2^n-1, 2^k-1, 1) difference family over Z_{2^n-1}.
struct DifferenceFamily {
    std::uint64_t group_order = 0; // v
    std::uint32_t block_size = 0;  // w
    std::uint32_t lambda = 1;
    std::vector<std::vector<std::uint32_t>> base_blocks;
};

/// Base blocks are the exponent sets of all n Frobenius images of all
/// representatives. Validated against the difference-family invariant
/// before returning; a failure would contradict the structure's coverage
/// and throws ValidationFailed.
DifferenceFamily derive_difference_family(const FieldTables& tables,
                                          const SteinerStructure& s);

/// A block of the derived Steiner system S(3, 2^k, 2^n): a coset x + B of a
/// structure block B, as 2^k sorted packed vectors.
struct SteinerBlock {
    std::vector<std::uint32_t> points;

    bool operator==(const SteinerBlock&) const = default;
};

/// Point-triple queries into S(3, 2^k, 2^n) without materializing the block
/// list: each group index resolves to the unique (representative,
/// 2-subspace) pair covering it, and the query is aligned to it by solving
/// for the shift and Frobenius offsets.
class BlockIndex {
public:
    BlockIndex(const FieldTables& tables, const CosetGroupTable& groups,
               const SteinerStructure& s);

    /// The unique block containing three distinct points (packed vectors,
    /// zero allowed). Throws PointsNotDistinct.
    SteinerBlock block_containing(std::uint32_t x, std::uint32_t y,
                                  std::uint32_t z) const;

private:
    struct GroupEntry {
        std::uint32_t rep = 0;
        std::uint32_t t1 = 0, t2 = 0, t3 = 0; // 2-subspace exponents in rep
    };

    const FieldTables& tables_;
    const CosetGroupTable& groups_;
    std::vector<Subspace> reps_;
    std::vector<GroupEntry> by_group_;
};

} // namespace qsteiner
