#pragma once

#include <cstdint>
#include <vector>

#include "qsteiner/field.hpp"

namespace qsteiner {

/// A k-dimensional subspace of F_p^n, stored as the sorted exponent list of
/// its p^k - 1 nonzero elements (the zero vector is implied).
struct Subspace {
    const FieldTables* field = nullptr;
    std::uint32_t dim = 0;
    std::vector<std::uint32_t> elements;

    bool operator==(const Subspace& o) const {
        return dim == o.dim && elements == o.elements;
    }
    bool operator<(const Subspace& o) const { return elements < o.elements; }
};

/// All ordered exponent differences (i_r - i_s) mod p^n-1, r != s.
struct DifferenceSet {
    std::vector<std::uint32_t> residues; // sorted, distinct

    std::size_t size() const { return residues.size(); }
};

/// Coset representatives rho(i_r - i_s) of the difference set.
struct CosetDifferenceSet {
    std::vector<std::uint32_t> reps; // sorted, distinct

    std::size_t size() const { return reps.size(); }
};

/// Span of the given nonzero generators. The reported dim is the rank of the
/// generator set; callers filter rank-deficient results themselves.
Subspace closure_from_generators(const FieldTables& tables,
                                 const std::vector<Element>& gens);

/// Wraps a sorted exponent list as a Subspace after checking that it really
/// is one: p^k - 1 distinct exponents closed under field addition.
Subspace subspace_from_exponents(const FieldTables& tables,
                                 std::vector<std::uint32_t> exponents);

/// Additive-closure check on an exponent list (sorted, distinct).
bool is_subspace(const FieldTables& tables,
                 const std::vector<std::uint32_t>& exponents);

/// Elementwise image { i * p^l + j mod p^n-1 }: the cyclic shift of the
/// Frobenius image. Always a subspace of the same dimension again.
Subspace map_subspace(const Subspace& x, std::uint32_t l, std::uint64_t j);

DifferenceSet difference_set(const Subspace& x);

CosetDifferenceSet coset_difference_set(const Subspace& x,
                                        const CosetTable& cosets);

/// |Delta(X)| attains the no-collision maximum (p^k-1)(p^k-2).
bool is_complete(const Subspace& x);

/// |rho(Delta(X))| attains the same maximum: no two differences share a
/// cyclotomic coset.
bool is_coset_complete(const Subspace& x, const CosetTable& cosets);

/// Orbit representative: the lexicographically smallest sorted exponent list
/// among all images Phi_j(Upsilon_l(X)) that contain exponent 0.
/// Idempotent and constant on orbits.
Subspace canonical_form(const Subspace& x);

/// All distinct images of X under the n*(p^n-1) map compositions, sorted.
std::vector<Subspace> orbit(const Subspace& x);

} // namespace qsteiner
