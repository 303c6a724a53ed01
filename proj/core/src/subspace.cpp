#include "qsteiner/subspace.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace qsteiner {

Subspace closure_from_generators(const FieldTables& tables,
                                 const std::vector<Element>& gens) {
    if (gens.empty()) throw Error("closure requires at least one generator");

    std::vector<std::uint32_t> span{0}; // packed vectors, zero included
    std::unordered_set<std::uint32_t> seen{0};
    std::uint32_t dim = 0;
    for (Element g : gens) {
        if (g.is_zero()) throw Error("generators must be nonzero");
        const std::uint32_t vg = tables.vec(g);
        if (seen.count(vg)) continue;
        ++dim;
        const std::size_t base = span.size();
        std::uint32_t multiple = 0;
        for (std::uint32_t c = 1; c < tables.p(); ++c) {
            multiple = tables.add_vec(multiple, vg);
            for (std::size_t i = 0; i < base; ++i) {
                const std::uint32_t v = tables.add_vec(span[i], multiple);
                span.push_back(v);
                seen.insert(v);
            }
        }
    }

    Subspace x;
    x.field = &tables;
    x.dim = dim;
    x.elements.reserve(span.size() - 1);
    for (std::uint32_t v : span) {
        if (v != 0) x.elements.push_back(tables.log(v));
    }
    std::sort(x.elements.begin(), x.elements.end());
    return x;
}

bool is_subspace(const FieldTables& tables,
                 const std::vector<std::uint32_t>& exponents) {
    std::uint64_t size = exponents.size() + 1;
    std::uint32_t dim = 0;
    while (size % tables.p() == 0) {
        size /= tables.p();
        ++dim;
    }
    if (size != 1 || dim == 0) return false;

    std::unordered_set<std::uint32_t> members;
    members.reserve(exponents.size() * 2);
    for (std::uint32_t e : exponents) {
        if (e >= tables.order()) return false;
        if (!members.insert(tables.antilog(e)).second) return false;
    }
    // r == s covers x + x, needed for p > 2 (it vanishes in characteristic 2).
    for (std::size_t r = 0; r < exponents.size(); ++r) {
        for (std::size_t s = r; s < exponents.size(); ++s) {
            const std::uint32_t sum = tables.add_vec(
                tables.antilog(exponents[r]), tables.antilog(exponents[s]));
            if (sum != 0 && !members.count(sum)) return false;
        }
    }
    return true;
}

Subspace subspace_from_exponents(const FieldTables& tables,
                                 std::vector<std::uint32_t> exponents) {
    std::sort(exponents.begin(), exponents.end());
    if (!is_subspace(tables, exponents)) {
        throw Error("exponent list is not closed under field addition");
    }
    Subspace x;
    x.field = &tables;
    x.elements = std::move(exponents);
    std::uint64_t size = x.elements.size() + 1;
    while (size > 1) {
        size /= tables.p();
        ++x.dim;
    }
    return x;
}

Subspace map_subspace(const Subspace& x, std::uint32_t l, std::uint64_t j) {
    const FieldTables& t = *x.field;
    Subspace y;
    y.field = x.field;
    y.dim = x.dim;
    y.elements.reserve(x.elements.size());
    for (std::uint32_t e : x.elements) {
        y.elements.push_back(t.shift_exp(t.frobenius_exp(e, l), j));
    }
    std::sort(y.elements.begin(), y.elements.end());
    return y;
}

DifferenceSet difference_set(const Subspace& x) {
    const std::uint64_t mod = x.field->order();
    DifferenceSet d;
    d.residues.reserve(x.elements.size() * (x.elements.size() - 1));
    for (std::uint32_t er : x.elements) {
        for (std::uint32_t es : x.elements) {
            if (er == es) continue;
            d.residues.push_back(
                static_cast<std::uint32_t>((mod + er - es) % mod));
        }
    }
    std::sort(d.residues.begin(), d.residues.end());
    d.residues.erase(std::unique(d.residues.begin(), d.residues.end()),
                     d.residues.end());
    return d;
}

CosetDifferenceSet coset_difference_set(const Subspace& x,
                                        const CosetTable& cosets) {
    CosetDifferenceSet c;
    const DifferenceSet d = difference_set(x);
    c.reps.reserve(d.residues.size());
    for (std::uint32_t r : d.residues) c.reps.push_back(cosets.rho(r));
    std::sort(c.reps.begin(), c.reps.end());
    c.reps.erase(std::unique(c.reps.begin(), c.reps.end()), c.reps.end());
    return c;
}

namespace {

std::uint64_t completeness_target(const Subspace& x) {
    const std::uint64_t m = x.elements.size(); // p^k - 1
    return m * (m - 1);
}

} // namespace

bool is_complete(const Subspace& x) {
    return difference_set(x).size() == completeness_target(x);
}

bool is_coset_complete(const Subspace& x, const CosetTable& cosets) {
    return coset_difference_set(x, cosets).size() == completeness_target(x);
}

Subspace canonical_form(const Subspace& x) {
    const FieldTables& t = *x.field;
    const std::uint64_t mod = t.order();
    const std::size_t m = x.elements.size();

    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> mapped(m);
    std::vector<std::uint32_t> cand(m);
    for (std::uint32_t l = 0; l < t.n(); ++l) {
        for (std::size_t i = 0; i < m; ++i) {
            mapped[i] = t.frobenius_exp(x.elements[i], l);
        }
        for (std::uint32_t anchor : mapped) {
            for (std::size_t i = 0; i < m; ++i) {
                cand[i] =
                    static_cast<std::uint32_t>((mod + mapped[i] - anchor) % mod);
            }
            std::sort(cand.begin(), cand.end());
            if (best.empty() || cand < best) best = cand;
        }
    }

    Subspace y;
    y.field = x.field;
    y.dim = x.dim;
    y.elements = std::move(best);
    return y;
}

std::vector<Subspace> orbit(const Subspace& x) {
    const FieldTables& t = *x.field;
    const std::uint64_t mod = t.order();
    const std::size_t m = x.elements.size();

    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> mapped(m);
    std::vector<std::uint32_t> img(m);
    for (std::uint32_t l = 0; l < t.n(); ++l) {
        for (std::size_t i = 0; i < m; ++i) {
            mapped[i] = t.frobenius_exp(x.elements[i], l);
        }
        for (std::uint64_t j = 0; j < mod; ++j) {
            for (std::size_t i = 0; i < m; ++i) {
                img[i] = static_cast<std::uint32_t>((mapped[i] + j) % mod);
            }
            std::sort(img.begin(), img.end());
            seen.insert(img);
        }
    }

    std::vector<Subspace> out;
    out.reserve(seen.size());
    for (const auto& exps : seen) {
        Subspace y;
        y.field = x.field;
        y.dim = x.dim;
        y.elements = exps;
        out.push_back(std::move(y));
    }
    return out;
}

} // namespace qsteiner
