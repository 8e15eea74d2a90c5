#pragma once

#include <optional>

#include "prisma/ints.hpp"

namespace prisma {

struct HnfResult {
    IntMatrix h;  // row Hermite form, pivots positive, entries above a pivot in [0, pivot)
    IntMatrix u;  // unimodular, u * m = h
};

/// Row Hermite normal form with unimodular transform. Deterministic:
/// leftmost pivot column, smallest absolute pivot value, sign-normalized.
HnfResult hermite_normal_form(const IntMatrix& m);

struct SnfResult {
    IntMatrix d;  // diagonal, d1 | d2 | ..., nonnegative
    IntMatrix u;  // unimodular nrows x nrows
    IntMatrix v;  // unimodular ncols x ncols, u * m * v = d
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Canonical (HNF) basis of {x in Z^ncols : M x = 0}.
IntMatrix kernel_lattice(const IntMatrix& m);

/// Canonical basis of span(L) ∩ Z^n, the saturation of the row lattice.
IntMatrix saturate_lattice(const IntMatrix& gens);

std::size_t rank(const IntMatrix& m);
Int determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix (throws if not unimodular).
IntMatrix unimodular_inverse(const IntMatrix& u);

/// True iff x lies in the row lattice spanned by the rows of an HNF basis.
bool in_row_lattice(const IntMatrix& hnf_basis, const IntVector& x);

/// Coefficients c with sum c_i * rows_i = x over Q, if solvable.
std::optional<std::vector<Rat>> solve_in_row_span(const IntMatrix& rows, const IntVector& x);

/// A vector subspace of R^n defined over Q, canonically represented by the
/// HNF basis of its saturated lattice V ∩ Z^n. Every basis row is primitive.
struct Subspace {
    std::size_t ambient = 0;
    IntMatrix basis;

    static Subspace span_of(const IntMatrix& gens);
    static Subspace zero(std::size_t n);
    static Subspace full(std::size_t n);

    std::size_t dim() const { return basis.nrows; }
    bool contains(const IntVector& x) const;
    /// Rows spanning the orthogonal complement; {x : equations() x = 0} = V.
    IntMatrix equations() const;
    bool operator==(const Subspace& o) const = default;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// {M x : x in V}
Subspace image(const IntMatrix& map, const Subspace& v);
/// {x : M x in W}
Subspace preimage(const IntMatrix& map, const Subspace& w);

}  // namespace prisma
