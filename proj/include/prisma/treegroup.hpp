#pragma once

#include "prisma/monoidexpr.hpp"

namespace prisma {

/// Finite rooted tree encoded by a parent array: parents[0] = -1 marks the
/// root and parents[i] < i, so the vertex order is a topological order with
/// the root first.
struct RootedTree {
    std::vector<int> parents;

    std::size_t size() const { return parents.size(); }
    void validate() const;
    std::vector<std::vector<std::size_t>> children() const;
    static RootedTree chain(std::size_t m);
    bool is_chain_in_order() const;
    /// Root-to-leaf vertex paths, one per leaf, in leaf index order.
    std::vector<std::vector<std::size_t>> leaf_paths() const;
    /// All linear extensions of the tree order (root greatest), each a vertex
    /// sequence from most to least significant. Throws TooLarge above 8 vertices.
    std::vector<std::vector<std::size_t>> chain_extension_orders() const;
    bool operator==(const RootedTree& o) const = default;
};

/// A finite product of rooted-tree parasemifields; the trivial parasemifield
/// is the empty product. Elements are integer coordinate vectors over all
/// vertices, factors concatenated in order.
struct ParasemifieldSpec {
    std::vector<RootedTree> factors;

    std::size_t total_vertices() const;
    std::vector<std::size_t> offsets() const;
    void validate() const;
    bool operator==(const ParasemifieldSpec& o) const = default;
};

/// The tree-lexicographic partial order: products compare factor-wise and a
/// subtree dominates when its root coordinate does.
bool tree_leq(const ParasemifieldSpec& spec, const IntVector& a, const IntVector& b);

/// Reference order: a <= b iff the difference is lexicographically
/// nonnegative under every chain extension of every factor.
bool tree_leq_oracle(const ParasemifieldSpec& spec, const IntVector& a, const IntVector& b);

/// (a ∨ b, a ∧ b)
std::pair<IntVector, IntVector> tree_join_meet(const ParasemifieldSpec& spec, const IntVector& a,
                                               const IntVector& b);

/// a lies below the identity (the negative cone of the l-group).
bool q_membership(const ParasemifieldSpec& spec, const IntVector& a);

/// A semiring generating tuple: column j of `matrix` gives the exponents of
/// the j-th generator over the reference elements in `basis` (vertex
/// coordinates; integer entries).
struct GeneratorTuple {
    ParasemifieldSpec spec;
    std::vector<IntVector> basis;
    IntMatrix matrix;

    std::size_t length() const { return matrix.ncols; }
    /// total_vertices x length: the value of each generator in vertex coordinates.
    IntMatrix vertex_matrix() const;
};

/// The tuple (e_w, -e_w) over all vertices: basis = vertex basis, matrix
/// columns the corresponding ± unit vectors.
GeneratorTuple canonical_generators(const ParasemifieldSpec& spec);

/// {g : g <= 0} as a monoid expression: per factor, the intersection over
/// root-to-leaf paths of lex preimages (chains collapse to a single lex node);
/// factors combine as a product.
MonoidExpr negative_cone_expr(const ParasemifieldSpec& spec);

/// C_X = Orthant(n) ∩ Preimage(vertex_matrix, negative cone). Membership of
/// alpha is exactly q_membership of the corresponding monomial value.
MonoidExpr associated_monoid(const GeneratorTuple& x);

/// The associated monoid of one chain-extension combination (one linear
/// extension order per factor); used to verify the chain-intersection identity.
MonoidExpr chain_associated_monoid(const GeneratorTuple& x,
                                   const std::vector<std::vector<std::size_t>>& orders);

/// Make the exponent map injective by re-expressing the tuple over the
/// canonical ± tuple and repeatedly doubling the first element of an inverse
/// pair. The generators' values, and hence the associated monoid, stay fixed.
GeneratorTuple embedify(const GeneratorTuple& x);

/// Every parent array with parents[i] < i on exactly m vertices.
std::vector<RootedTree> all_parent_trees(std::size_t m);

}  // namespace prisma
