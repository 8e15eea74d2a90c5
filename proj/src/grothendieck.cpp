#include "prisma/grothendieck.hpp"

namespace prisma {

void MonoidPresentation::validate() const {
    for (const auto& [u, v] : relations) {
        if (u.size() != generators || v.size() != generators)
            throw DimensionMismatch("relation exponent length does not match generator count");
        for (const auto& x : u)
            if (x < 0) throw std::invalid_argument("relation exponents must be nonnegative");
        for (const auto& x : v)
            if (x < 0) throw std::invalid_argument("relation exponents must be nonnegative");
    }
}

IntVector CompletionGroup::class_of(const IntVector& exponents) const {
    if (exponents.size() != generators)
        throw DimensionMismatch("exponent length does not match generator count");
    IntVector y(generators, Int(0));
    for (std::size_t j = 0; j < generators; ++j)
        for (std::size_t i = 0; i < generators; ++i) y[j] += exponents[i] * coord_change.rows[i][j];
    for (std::size_t j = 0; j < generators; ++j) {
        if (moduli[j] == 0) continue;
        y[j] = fmod(y[j], moduli[j]);
    }
    return y;
}

bool CompletionGroup::is_zero_class(const IntVector& exponents) const {
    return is_zero(class_of(exponents));
}

CompletionGroup group_completion(const MonoidPresentation& p) {
    p.validate();
    CompletionGroup g;
    g.generators = p.generators;
    IntMatrix rel(p.relations.size(), p.generators);
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        rel.rows[i] = sub(p.relations[i].first, p.relations[i].second);
    auto snf = smith_normal_form(rel);
    g.coord_change = snf.v;
    g.moduli.assign(p.generators, Int(0));
    const std::size_t lim = std::min(rel.nrows, rel.ncols);
    for (std::size_t k = 0; k < lim; ++k) g.moduli[k] = snf.d.rows[k][k];
    for (const auto& m : g.moduli) {
        if (m == 0)
            ++g.free_rank;
        else if (m > 1)
            g.invariant_factors.push_back(m);
    }
    return g;
}

bool class_is_zero(const MonoidPresentation& p, const IntVector& exponents) {
    return group_completion(p).is_zero_class(exponents);
}

bool is_trivial(const MonoidPresentation& p) { return group_completion(p).trivial(); }

}  // namespace prisma
