#pragma once

#include <memory>
#include <optional>

#include "prisma/hilbert.hpp"

namespace prisma {

/// Expression describing a submonoid of Z^n. Immutable node tree; nodes are
/// shared, so copies are cheap.
///
/// lex(n) denotes D_n = {a in Z^n : a = 0 or the first nonzero coordinate of
/// a is negative}.
class MonoidExpr {
  public:
    enum class Kind { fingen, lex, orthant, lattice, intersect, product, preimage, restriction };

    static MonoidExpr fingen(AffineMonoid m);
    static MonoidExpr lex(std::size_t n);
    static MonoidExpr orthant(std::size_t n);
    static MonoidExpr lattice(std::size_t n);
    static MonoidExpr intersect(std::vector<MonoidExpr> args);
    static MonoidExpr product(std::vector<MonoidExpr> args);
    /// {x : map x ∈ arg}; map has arg.ambient() rows.
    static MonoidExpr preimage(IntMatrix map, MonoidExpr arg);
    /// arg ∩ v
    static MonoidExpr restriction(MonoidExpr arg, Subspace v);

    Kind kind() const;
    std::size_t ambient() const;
    const AffineMonoid& monoid() const;
    const std::vector<MonoidExpr>& args() const;
    const IntMatrix& map() const;
    const MonoidExpr& arg() const;
    const Subspace& subspace() const;

  private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

/// One nonempty locally closed polyhedral piece
/// {x : eq x = 0, strict x > 0, weak x >= 0}.
struct Piece {
    std::size_t ambient = 0;
    std::vector<IntVector> eq, strict, weak;

    bool contains(const IntVector& p) const;
    /// Topological closure: relax strict rows to weak (exact for nonempty pieces).
    Cone closed_hull() const;
    Subspace span() const;
};

/// Compiled normal form: the union of the pieces, intersected with the
/// finitely generated filter monoids, equals the expression's lattice set.
struct PieceUnion {
    std::size_t ambient = 0;
    std::vector<Piece> pieces;
    std::vector<AffineMonoid> filters;
};

/// Exact rational feasibility of a homogeneous system with strictness
/// bookkeeping (Fourier-Motzkin elimination).
bool feasible(std::size_t n, const std::vector<IntVector>& eq, const std::vector<IntVector>& strict,
              const std::vector<IntVector>& weak);

/// Throws UnsupportedShape when a fingen node sits below preimage/product.
PieceUnion compile(const MonoidExpr& e);

Tri member(const MonoidExpr& e, const IntVector& p);

/// ⟨e⟩ as a subspace; requires a filter-free compilation.
Subspace span(const MonoidExpr& e);

/// Z^n ∩ cl conv(e).
SaturatedMonoid closure(const MonoidExpr& e);

/// Z^n ∩ cl conv(e ∩ V).
SaturatedMonoid closure_in_subspace(const MonoidExpr& e, const Subspace& v);

struct PurityReport {
    bool pure = true;
    std::optional<IntVector> counterexample;
};

/// Check that k*a ∈ e implies a ∈ e for all a in [-box,box]^n and all k in
/// multipliers; returns the first violation in lexicographic order.
PurityReport purity_probe(const MonoidExpr& e, long box_bound, const std::vector<long>& multipliers);

/// Structural purity certification: leaves are pure by definition, fingen by
/// an exact saturation check, and the closed operations preserve purity.
bool certified_pure(const MonoidExpr& e);

}  // namespace prisma
