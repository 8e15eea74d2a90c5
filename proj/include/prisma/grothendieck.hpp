#pragma once

#include "prisma/exactlin.hpp"

namespace prisma {

/// Finitely presented commutative monoid: relations u = v between
/// nonnegative exponent vectors over the generators.
struct MonoidPresentation {
    std::size_t generators = 0;
    std::vector<std::pair<IntVector, IntVector>> relations;

    void validate() const;
};

/// The universal abelian group of the presentation, normalized through the
/// Smith form of the relation matrix: coordinate i of class_of is reduced
/// modulo moduli[i] (0 marks a free coordinate, 1 a dead one).
struct CompletionGroup {
    std::size_t generators = 0;
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;  // the moduli > 1, in divisibility order
    IntMatrix coord_change;              // generators x generators, y = x * V
    std::vector<Int> moduli;

    IntVector class_of(const IntVector& exponents) const;
    bool is_zero_class(const IntVector& exponents) const;
    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
};

CompletionGroup group_completion(const MonoidPresentation& p);
bool class_is_zero(const MonoidPresentation& p, const IntVector& exponents);
bool is_trivial(const MonoidPresentation& p);

}  // namespace prisma
