#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "prisma/cone.hpp"

namespace prisma {

/// Finitely generated submonoid of Z^n given by generators
/// (canonical: deduplicated, sorted, zero generators dropped).
struct AffineMonoid {
    std::size_t ambient = 0;
    std::vector<IntVector> gens;

    static AffineMonoid from_gens(std::size_t ambient, std::vector<IntVector> gens);
    Cone cone() const { return Cone::from_rays(ambient, gens); }
    bool operator==(const AffineMonoid& o) const = default;
};

/// The monoid cone ∩ Z^n: lineality lattice basis (each row together with its
/// negative generates the unit group) plus the minimal Hilbert basis of the
/// pointed part, lifted back to Z^n. Membership coincides with closed cone
/// membership since the monoid is saturated.
struct SaturatedMonoid {
    Cone cone;
    IntMatrix lineality;
    std::vector<IntVector> basis;

    bool contains(const IntVector& p) const { return cone.contains(p); }
    /// All generators: lineality rows, their negatives, then the basis.
    std::vector<IntVector> all_generators() const;
    bool operator==(const SaturatedMonoid& o) const = default;
};

/// Minimal generating set of c ∩ Z^n. Deterministic: lineality in HNF,
/// pointed basis sorted lexicographically.
SaturatedMonoid hilbert_basis(const Cone& c);

/// pure{m} = cone(gens) ∩ Z^n.
SaturatedMonoid saturate_monoid(const AffineMonoid& m);

SaturatedMonoid intersect(const SaturatedMonoid& a, const SaturatedMonoid& b);

enum class Tri { yes, no, unknown };

struct MembershipResult {
    Tri verdict = Tri::unknown;
    /// for yes: (generator, multiplicity) pairs summing to the query point
    std::vector<std::pair<IntVector, Int>> certificate;
};

/// Decide p ∈ m by bounded search. Exact "no" whenever the generators lie in
/// an open halfspace (pointed cone grading); otherwise "unknown" once the
/// state budget is exhausted.
MembershipResult monoid_membership(const AffineMonoid& m, const IntVector& p,
                                   std::size_t budget = 200000);

}  // namespace prisma
