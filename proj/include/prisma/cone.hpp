#pragma once

#include <vector>

#include "prisma/exactlin.hpp"
#include "prisma/ints.hpp"

namespace prisma {

/// Rational polyhedral cone with both representations, canonical after
/// construction:
///  - lineality: HNF basis of the lineality lattice (saturated),
///  - rays: extreme rays of the pointed part, primitive, reduced modulo the
///    lineality at its pivot columns, sorted lexicographically,
///  - equations: HNF basis of span(C)^⊥ ∩ Z^n,
///  - inequalities: facet normals, canonicalized the same way as rays.
/// Immutable once built; safe to share across threads.
struct Cone {
    std::size_t ambient = 0;
    std::vector<IntVector> rays;
    IntMatrix lineality;
    IntMatrix equations;
    std::vector<IntVector> inequalities;

    static Cone from_rays(std::size_t ambient, const std::vector<IntVector>& gens,
                          const std::vector<IntVector>& lineality_gens = {});
    static Cone from_hrep(std::size_t ambient, const IntMatrix& equations,
                          const IntMatrix& inequalities);
    static Cone zero(std::size_t n);
    static Cone full(std::size_t n);

    bool contains(const IntVector& p) const;
    bool in_relative_interior(const IntVector& p) const;
    std::size_t dim() const { return ambient - equations.nrows; }
    bool is_pointed() const { return lineality.nrows == 0; }
    Subspace span() const;
    bool operator==(const Cone& o) const = default;
};

Cone intersect(const Cone& a, const Cone& b);
Cone minkowski_sum(const Cone& a, const Cone& b);
/// C ∩ V as a cone (appends the subspace equations).
Cone intersect_subspace(const Cone& c, const Subspace& v);

/// A relatively open face ri(F) of a cone, carried with its closed face F
/// and the subspace spanned by F.
struct OpenFace {
    Subspace span;
    Cone closed_face;
    std::size_t dim = 0;

    bool contains(const IntVector& p) const { return closed_face.in_relative_interior(p); }
};

/// The complete decomposition of a cone into relatively open faces, ordered
/// by (dim, span basis). The union of the faces is the cone and distinct
/// faces are disjoint.
std::vector<OpenFace> open_faces(const Cone& c);

}  // namespace prisma
