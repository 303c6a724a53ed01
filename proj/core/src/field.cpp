#include "qsteiner/field.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace qsteiner {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2) {
        if (v % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; d = (d == 2 ? 3 : d + 2)) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

namespace {

using Digits = std::vector<std::uint32_t>; // coefficient i of x^i, i < n

std::uint32_t pack(const Digits& d, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return static_cast<std::uint32_t>(v);
}

// c * x mod (x^n - reduct), digit arithmetic over F_p.
void mul_by_x(Digits& c, const Digits& reduct, std::uint32_t p) {
    const std::size_t n = c.size();
    const std::uint32_t top = c[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) c[i] = c[i - 1];
    c[0] = 0;
    if (top != 0) {
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = (c[i] + top * reduct[i]) % p;
        }
    }
}

Digits poly_mul_mod(const Digits& a, const Digits& b, const Digits& reduct,
                    std::uint32_t p) {
    const std::size_t n = a.size();
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
        }
    }
    for (std::size_t d = 2 * n - 2; d >= n; --d) {
        const std::uint64_t t = prod[d] % p;
        prod[d] = 0;
        if (t == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            prod[d - n + i] += t * reduct[i];
        }
    }
    Digits out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint32_t>(prod[i] % p);
    }
    return out;
}

Digits poly_pow_mod(Digits base, std::uint64_t e, const Digits& reduct,
                    std::uint32_t p) {
    Digits result(base.size(), 0);
    result[0] = 1;
    while (e > 0) {
        if (e & 1) result = poly_mul_mod(result, base, reduct, p);
        base = poly_mul_mod(base, base, reduct, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const Digits& d) {
    if (d[0] != 1) return false;
    return std::all_of(d.begin() + 1, d.end(),
                       [](std::uint32_t c) { return c == 0; });
}

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t c = 1; c < p; ++c) {
        if (a * c % p == 1) return c;
    }
    return 0;
}

} // namespace

FieldTables build_field(const FieldSpec& spec) {
    if (!is_prime(spec.p)) {
        throw NonPrimeParameter("p = " + std::to_string(spec.p) +
                                " is not prime");
    }
    if (!is_prime(spec.n)) {
        throw NonPrimeParameter("n = " + std::to_string(spec.n) +
                                " is not prime");
    }
    if (spec.poly.size() != spec.n + 1 || spec.poly.back() == 0) {
        throw Error("polynomial must have degree exactly n (constant term "
                    "first, " +
                    std::to_string(spec.n + 1) + " coefficients)");
    }
    for (std::uint32_t c : spec.poly) {
        if (c >= spec.p) {
            throw Error("polynomial coefficient " + std::to_string(c) +
                        " out of range for F_" + std::to_string(spec.p));
        }
    }

    std::uint64_t card = 1;
    for (std::uint32_t i = 0; i < spec.n; ++i) {
        card *= spec.p;
        if (card > (1ull << 32)) {
            throw ParameterBounds("p^n exceeds the 2^32 table bound");
        }
    }
    const std::uint64_t order = card - 1;

    if (spec.poly[0] == 0) {
        throw NonPrimitivePolynomial("x divides the polynomial");
    }

    // Monic reduction rule: x^n == reduct (degree < n).
    const std::uint32_t lead_inv = inverse_mod_p(spec.poly[spec.n], spec.p);
    Digits reduct(spec.n);
    for (std::uint32_t i = 0; i < spec.n; ++i) {
        const std::uint32_t mc = spec.poly[i] * lead_inv % spec.p;
        reduct[i] = (spec.p - mc) % spec.p;
    }

    // alpha = x must have multiplicative order exactly p^n - 1:
    // alpha^(p^n-1) = 1 and alpha^((p^n-1)/q) != 1 for each prime q | p^n-1.
    Digits x(spec.n, 0);
    x[1] = 1;
    if (!is_one(poly_pow_mod(x, order, reduct, spec.p))) {
        throw NonPrimitivePolynomial("alpha^(p^n-1) != 1; polynomial is not "
                                     "primitive over F_" +
                                     std::to_string(spec.p));
    }
    for (std::uint64_t q : prime_factors(order)) {
        if (is_one(poly_pow_mod(x, order / q, reduct, spec.p))) {
            throw NonPrimitivePolynomial(
                "alpha has order dividing (p^n-1)/" + std::to_string(q) +
                "; polynomial is not primitive");
        }
    }

    FieldTables t;
    t.spec_ = spec;
    t.order_ = order;
    t.antilog_.resize(order);
    t.log_.assign(card, std::numeric_limits<std::uint32_t>::max());

    Digits cur(spec.n, 0);
    cur[0] = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        const std::uint32_t v = pack(cur, spec.p);
        if (v == 0 || t.log_[v] != std::numeric_limits<std::uint32_t>::max()) {
            throw NonPrimitivePolynomial(
                "powers of alpha do not enumerate the nonzero vectors");
        }
        t.antilog_[i] = v;
        t.log_[v] = static_cast<std::uint32_t>(i);
        mul_by_x(cur, reduct, spec.p);
    }
    assert(is_one(cur)); // wraparound alpha^order = 1

    t.ppow_.resize(spec.n);
    t.ppow_[0] = 1;
    for (std::uint32_t l = 1; l < spec.n; ++l) {
        t.ppow_[l] = t.ppow_[l - 1] * spec.p % order;
    }
    return t;
}

CosetTable build_cosets(const FieldTables& tables) {
    const std::uint64_t mod = tables.order();
    const std::uint32_t p = tables.p();

    CosetTable ct;
    ct.modulus = mod;
    ct.n = tables.n();
    ct.representative.resize(mod);
    ct.coset_index.resize(mod);

    std::vector<bool> visited(mod, false);
    std::vector<std::uint32_t> members;
    for (std::uint64_t s = 0; s < mod; ++s) {
        if (visited[s]) continue;
        // First unvisited residue is the minimum of its coset.
        members.clear();
        std::uint64_t t = s;
        do {
            members.push_back(static_cast<std::uint32_t>(t));
            visited[t] = true;
            t = t * p % mod;
        } while (t != s);
        std::sort(members.begin(), members.end());
        const auto idx = static_cast<std::uint32_t>(ct.cosets.size());
        for (std::uint32_t m : members) {
            ct.representative[m] = static_cast<std::uint32_t>(s);
            ct.coset_index[m] = idx;
        }
        if (members.size() == ct.n) ++ct.size_n_count_;
        ct.cosets.push_back(members);
    }
    return ct;
}

} // namespace qsteiner
