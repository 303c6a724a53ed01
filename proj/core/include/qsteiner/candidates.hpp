#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qsteiner/cover.hpp"
#include "qsteiner/field.hpp"
#include "qsteiner/subspace.hpp"

namespace qsteiner {

/// Partition of the size-n cyclotomic cosets into groups of six induced by
/// the 2-subspaces {0, 1, alpha^a, alpha^b} with 1 + alpha^a + alpha^b = 0:
/// the representatives of +-a, +-b, +-(a-b) always travel together in a
/// coset difference set.
struct CosetGroupTable {
    std::vector<std::vector<std::uint32_t>> groups; // sorted reps, 6 each
    std::unordered_map<std::uint32_t, std::uint32_t> group_of; // rep -> index
    std::vector<std::int32_t> group_of_residue; // residue -> index, -1 if none

    std::uint32_t group_count() const {
        return static_cast<std::uint32_t>(groups.size());
    }
    std::int32_t group_of_diff(std::uint64_t d) const {
        return group_of_residue[d];
    }
};

/// Builds the 6-coset groups for p = 2. Validates the partition property:
/// throws DegenerateGroup if some 2-subspace induces fewer than six distinct
/// representatives and GroupCollision if two induced 6-sets overlap without
/// being equal.
CosetGroupTable build_groups(const FieldTables& tables,
                             const CosetTable& cosets);

/// A coset-complete orbit representative in canonical form, paired with the
/// sorted group indices covered by its coset difference set.
struct CandidateOrbit {
    Subspace rep;
    std::vector<std::uint32_t> signature;
};

/// Group indices covered by rho(Delta(X)), one per 2-subspace of X.
/// Throws NotCosetComplete unless X is coset complete.
std::vector<std::uint32_t> signature_of(const Subspace& x,
                                        const CosetTable& cosets,
                                        const CosetGroupTable& groups);

struct EnumerateOptions {
    std::uint32_t workers = 1;       // generator ranges run in parallel
    bool allow_large_k = false;      // k > 3 grows steeply; opt in
};

/// Every coset-complete k-subspace orbit exactly once, as canonical
/// representatives sorted by exponent list, each paired with its signature.
/// p = 2 only.
std::vector<CandidateOrbit> enumerate_candidates(const FieldTables& tables,
                                                 const CosetTable& cosets,
                                                 const CosetGroupTable& groups,
                                                 std::uint32_t k,
                                                 EnumerateOptions opts = {});

/// Exact-cover instance over the group universe: one row per candidate,
/// row id = candidate position, columns = signature.
ExactCoverInstance build_cover_instance(
    const std::vector<CandidateOrbit>& candidates,
    const CosetGroupTable& groups);

} // namespace qsteiner
