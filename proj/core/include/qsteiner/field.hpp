#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "qsteiner/errors.hpp"

namespace qsteiner {

/// Parameters of GF(p^n): a prime p, a prime exponent n, and a primitive
/// polynomial of degree n over F_p given as a coefficient list with the
/// constant term first.
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> poly;

    bool operator==(const FieldSpec&) const = default;
};

/// A field element in log form: either the zero element or alpha^i with
/// 0 <= i < p^n - 1.
class Element {
public:
    constexpr Element() = default;

    static constexpr Element zero() { return Element(); }

    static constexpr Element from_exp(std::uint32_t e) {
        Element x;
        x.exp_ = e;
        return x;
    }

    constexpr bool is_zero() const { return exp_ == kZeroSentinel; }

    /// Exponent of a nonzero element. Undefined for zero.
    constexpr std::uint32_t exp() const { return exp_; }

    constexpr bool operator==(const Element&) const = default;

private:
    static constexpr std::uint32_t kZeroSentinel =
        std::numeric_limits<std::uint32_t>::max();

    std::uint32_t exp_ = kZeroSentinel;
};

/// Log/antilog tables for GF(p^n) together with the two automorphism-group
/// maps used throughout: the Frobenius map x -> x^(p^l) and the cyclic shift
/// alpha^i -> alpha^(i+j).
///
/// Nonzero elements are identified with vectors of F_p^n through the packed
/// radix-p word sum(c_i * p^i); antilog maps exponents to packed words and
/// log inverts it. Tables are immutable after construction and safe to read
/// concurrently.
class FieldTables {
public:
    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t n() const { return spec_.n; }

    /// Multiplicative group order p^n - 1.
    std::uint64_t order() const { return order_; }

    /// Packed vector form of alpha^e.
    std::uint32_t antilog(std::uint64_t e) const {
        return antilog_[e % order_];
    }

    /// Exponent of a nonzero packed vector.
    std::uint32_t log(std::uint32_t vec) const { return log_[vec]; }

    /// Packed vector form of an element (zero maps to the zero word).
    std::uint32_t vec(Element x) const {
        return x.is_zero() ? 0u : antilog_[x.exp()];
    }

    Element from_vec(std::uint32_t v) const {
        return v == 0 ? Element::zero() : Element::from_exp(log_[v]);
    }

    /// Field addition. Works through the vector representation.
    Element add(Element x, Element y) const {
        return from_vec(add_vec(vec(x), vec(y)));
    }

    /// Digit-wise sum of two packed vectors.
    std::uint32_t add_vec(std::uint32_t a, std::uint32_t b) const;

    /// Frobenius map: alpha^i -> alpha^(i * p^l mod p^n-1), zero fixed.
    Element frobenius(Element x, std::uint32_t l) const {
        if (x.is_zero()) return x;
        return Element::from_exp(frobenius_exp(x.exp(), l));
    }

    /// Cyclic shift map: alpha^i -> alpha^(i + j mod p^n-1), zero fixed.
    Element cyclic_shift(Element x, std::uint64_t j) const {
        if (x.is_zero()) return x;
        return Element::from_exp(shift_exp(x.exp(), j));
    }

    std::uint32_t frobenius_exp(std::uint64_t e, std::uint32_t l) const {
        return static_cast<std::uint32_t>(e * ppow_[l % spec_.n] % order_);
    }

    std::uint32_t shift_exp(std::uint64_t e, std::uint64_t j) const {
        return static_cast<std::uint32_t>((e + j % order_) % order_);
    }

    /// p^l mod (p^n - 1).
    std::uint64_t p_pow(std::uint32_t l) const { return ppow_[l % spec_.n]; }

    friend FieldTables build_field(const FieldSpec& spec);

private:
    FieldSpec spec_;
    std::uint64_t order_ = 0;
    std::vector<std::uint32_t> antilog_; // exponent -> packed vector
    std::vector<std::uint32_t> log_;     // packed vector -> exponent
    std::vector<std::uint64_t> ppow_;    // l -> p^l mod order
};

/// Builds GF(p^n) from a primitive polynomial.
///
/// Primitivity is established by factoring p^n - 1 with trial division and
/// checking alpha^((p^n-1)/q) != 1 for every prime divisor q; the table fill
/// then cross-checks that successive powers of alpha enumerate every nonzero
/// vector exactly once.
///
/// Throws NonPrimeParameter, NonPrimitivePolynomial, or ParameterBounds
/// (tables are capped at p^n <= 2^32 entries).
FieldTables build_field(const FieldSpec& spec);

/// Partition of Z_{p^n-1} into cyclotomic cosets C_s = { s * p^i } with
/// their minimal representatives rho(s).
struct CosetTable {
    std::uint64_t modulus = 0;                   // p^n - 1
    std::uint32_t n = 0;                         // coset size bound
    std::vector<std::uint32_t> representative;   // s -> rho(s)
    std::vector<std::uint32_t> coset_index;      // s -> index into cosets
    std::vector<std::vector<std::uint32_t>> cosets; // sorted members, by rep

    std::uint32_t rho(std::uint64_t s) const {
        return representative[s % modulus];
    }

    std::size_t size_n_count() const { return size_n_count_; }
    std::size_t size_n_count_ = 0;
};

CosetTable build_cosets(const FieldTables& tables);

inline std::uint32_t FieldTables::add_vec(std::uint32_t a,
                                          std::uint32_t b) const {
    if (spec_.p == 2) return a ^ b;
    std::uint32_t r = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < spec_.n; ++i) {
        r += (a % spec_.p + b % spec_.p) % spec_.p * place;
        a /= spec_.p;
        b /= spec_.p;
        place *= spec_.p;
    }
    return r;
}

bool is_prime(std::uint64_t v);

/// Prime factors of v, ascending, without multiplicity. Trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

} // namespace qsteiner
