#pragma once

#include <optional>
#include <string>

#include "prisma/monoidexpr.hpp"

namespace prisma {

/// One piece A⁰ ∩ C of the decomposition induced by a relatively open face A
/// of cl conv(C). Pieces need not be finitely generated; their closures are,
/// and carry Hilbert bases.
struct MonoidFacePiece {
    OpenFace face;
    SaturatedMonoid closure;
    std::size_t dim = 0;
};

/// The face decomposition of a monoid (given by generators or an expression),
/// together with the carrier needed to decide piece membership.
struct FaceDecomposition {
    std::size_t ambient = 0;
    Cone hull;  // cl conv(C)
    std::vector<MonoidFacePiece> pieces;
    std::optional<AffineMonoid> carrier_monoid;
    std::optional<MonoidExpr> carrier_expr;

    Tri carrier_member(const IntVector& p) const;
    /// nonzero p: the unique piece containing it, if any
    std::optional<std::size_t> locate(const IntVector& p) const;
    std::size_t carrier_dim() const { return hull.dim(); }
};

FaceDecomposition decompose(const AffineMonoid& m);
/// Requires a filter-free polyhedral compilation.
FaceDecomposition decompose(const MonoidExpr& e);

struct DecompositionReport {
    bool partition_ok = true;
    bool closure_match_ok = true;  // full-dimensional pieces close to closure(C)
    bool growth_ok = true;         // alpha + beta escapes to a higher-dimensional piece
    bool absorption_ok = true;     // alpha + gamma stays in the piece
    std::size_t points_checked = 0;
    std::size_t pairs_checked = 0;
    std::optional<std::string> witness;

    bool passed() const {
        return partition_ok && closure_match_ok && growth_ok && absorption_ok;
    }
};

/// Check the decomposition on the lattice points of [0, box]^n (pairs capped
/// and seeded for reproducibility): the partition property, full-dimensional
/// closure agreement, strict dimension growth when leaving a piece's closure,
/// and absorption of closure points.
DecompositionReport verify_decomposition(const FaceDecomposition& d, long box,
                                         std::size_t pair_cap = 20000, std::uint64_t seed = 1);

}  // namespace prisma
