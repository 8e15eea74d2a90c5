#include "prisma/treegroup.hpp"

#include <algorithm>

namespace prisma {

void RootedTree::validate() const {
    if (parents.empty()) throw std::invalid_argument("a rooted tree needs at least one vertex");
    if (parents[0] != -1) throw std::invalid_argument("parents[0] must be -1 (the root)");
    for (std::size_t i = 1; i < parents.size(); ++i)
        if (parents[i] < 0 || static_cast<std::size_t>(parents[i]) >= i)
            throw std::invalid_argument("parents[i] must point to an earlier vertex");
}

std::vector<std::vector<std::size_t>> RootedTree::children() const {
    std::vector<std::vector<std::size_t>> ch(size());
    for (std::size_t i = 1; i < size(); ++i) ch[parents[i]].push_back(i);
    return ch;
}

RootedTree RootedTree::chain(std::size_t m) {
    RootedTree t;
    t.parents.resize(m);
    for (std::size_t i = 0; i < m; ++i) t.parents[i] = static_cast<int>(i) - 1;
    return t;
}

bool RootedTree::is_chain_in_order() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (parents[i] != static_cast<int>(i) - 1) return false;
    return true;
}

std::vector<std::vector<std::size_t>> RootedTree::leaf_paths() const {
    auto ch = children();
    std::vector<std::vector<std::size_t>> paths;
    for (std::size_t v = 0; v < size(); ++v) {
        if (!ch[v].empty()) continue;
        std::vector<std::size_t> path;
        std::size_t w = v;
        while (true) {
            path.push_back(w);
            if (parents[w] < 0) break;
            w = static_cast<std::size_t>(parents[w]);
        }
        std::reverse(path.begin(), path.end());
        paths.push_back(std::move(path));
    }
    return paths;
}

std::vector<std::vector<std::size_t>> RootedTree::chain_extension_orders() const {
    if (size() > 8) throw TooLarge("chain extension enumeration is capped at 8 vertices");
    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> cur;
    std::vector<bool> placed(size(), false);
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == size()) {
            orders.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v < size(); ++v) {
            if (placed[v]) continue;
            if (parents[v] >= 0 && !placed[static_cast<std::size_t>(parents[v])]) continue;
            placed[v] = true;
            cur.push_back(v);
            self(self);
            cur.pop_back();
            placed[v] = false;
        }
    };
    rec(rec);
    return orders;
}

std::size_t ParasemifieldSpec::total_vertices() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.size();
    return n;
}

std::vector<std::size_t> ParasemifieldSpec::offsets() const {
    std::vector<std::size_t> off;
    std::size_t at = 0;
    for (const auto& f : factors) {
        off.push_back(at);
        at += f.size();
    }
    return off;
}

void ParasemifieldSpec::validate() const {
    for (const auto& f : factors) f.validate();
}

namespace {

// g restricted to the subtree at v is >= 0: the root coordinate decides,
// ties recurse into the children independently
bool subtree_nonneg(const RootedTree& t, const std::vector<std::vector<std::size_t>>& ch,
                    const IntVector& g, std::size_t offset, std::size_t v) {
    const Int& x = g[offset + v];
    if (x > 0) return true;
    if (x < 0) return false;
    for (auto c : ch[v])
        if (!subtree_nonneg(t, ch, g, offset, c)) return false;
    return true;
}

void check_spec_element(const ParasemifieldSpec& spec, const IntVector& a) {
    if (a.size() != spec.total_vertices())
        throw DimensionMismatch("element length does not match the parasemifield's vertex count");
}

}  // namespace

bool tree_leq(const ParasemifieldSpec& spec, const IntVector& a, const IntVector& b) {
    check_spec_element(spec, a);
    check_spec_element(spec, b);
    IntVector g = sub(b, a);
    auto off = spec.offsets();
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
        const auto& t = spec.factors[f];
        auto ch = t.children();
        if (!subtree_nonneg(t, ch, g, off[f], 0)) return false;
    }
    return true;
}

bool tree_leq_oracle(const ParasemifieldSpec& spec, const IntVector& a, const IntVector& b) {
    check_spec_element(spec, a);
    check_spec_element(spec, b);
    IntVector g = sub(b, a);
    auto off = spec.offsets();
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
        const auto& t = spec.factors[f];
        for (const auto& order : t.chain_extension_orders()) {
            int sign = 0;
            for (auto v : order) {
                const Int& x = g[off[f] + v];
                if (x != 0) {
                    sign = x > 0 ? 1 : -1;
                    break;
                }
            }
            if (sign < 0) return false;
        }
    }
    return true;
}

namespace {

// writes a ∨ b on the subtree at v into out
void join_subtree(const RootedTree& t, const std::vector<std::vector<std::size_t>>& ch,
                  const IntVector& a, const IntVector& b, std::size_t offset, std::size_t v,
                  IntVector& out) {
    auto copy_subtree = [&](const IntVector& src, auto&& self, std::size_t w) -> void {
        out[offset + w] = src[offset + w];
        for (auto c : ch[w]) self(src, self, c);
    };
    IntVector diff = sub(b, a);
    if (subtree_nonneg(t, ch, diff, offset, v)) {
        copy_subtree(b, copy_subtree, v);
        return;
    }
    IntVector rdiff = sub(a, b);
    if (subtree_nonneg(t, ch, rdiff, offset, v)) {
        copy_subtree(a, copy_subtree, v);
        return;
    }
    // incomparable on this subtree forces equal root coordinates
    out[offset + v] = a[offset + v];
    for (auto c : ch[v]) join_subtree(t, ch, a, b, offset, c, out);
}

}  // namespace

std::pair<IntVector, IntVector> tree_join_meet(const ParasemifieldSpec& spec, const IntVector& a,
                                               const IntVector& b) {
    check_spec_element(spec, a);
    check_spec_element(spec, b);
    IntVector join(a.size());
    auto off = spec.offsets();
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
        const auto& t = spec.factors[f];
        auto ch = t.children();
        join_subtree(t, ch, a, b, off[f], 0, join);
    }
    IntVector na = neg(a), nb = neg(b);
    IntVector njoin(a.size());
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
        const auto& t = spec.factors[f];
        auto ch = t.children();
        join_subtree(t, ch, na, nb, off[f], 0, njoin);
    }
    return {join, neg(njoin)};
}

bool q_membership(const ParasemifieldSpec& spec, const IntVector& a) {
    return tree_leq(spec, a, IntVector(a.size(), Int(0)));
}

IntMatrix GeneratorTuple::vertex_matrix() const {
    const std::size_t total = spec.total_vertices();
    IntMatrix b(total, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].size() != total) throw DimensionMismatch("basis element length mismatch");
        for (std::size_t v = 0; v < total; ++v) b.rows[v][i] = basis[i][v];
    }
    return mat_mul(b, matrix);
}

GeneratorTuple canonical_generators(const ParasemifieldSpec& spec) {
    spec.validate();
    const std::size_t m = spec.total_vertices();
    GeneratorTuple x;
    x.spec = spec;
    if (m == 0) {
        // trivial parasemifield: the tuple (1, 1)
        x.matrix = IntMatrix(0, 2);
        return x;
    }
    for (std::size_t v = 0; v < m; ++v) {
        IntVector e(m, Int(0));
        e[v] = 1;
        x.basis.push_back(std::move(e));
    }
    x.matrix = IntMatrix(m, 2 * m);
    for (std::size_t v = 0; v < m; ++v) {
        x.matrix.rows[v][2 * v] = 1;
        x.matrix.rows[v][2 * v + 1] = -1;
    }
    return x;
}

namespace {

MonoidExpr lex_under_order(std::size_t m, const std::vector<std::size_t>& order) {
    bool identity = order.size() == m;
    for (std::size_t i = 0; identity && i < order.size(); ++i)
        if (order[i] != i) identity = false;
    if (identity) return MonoidExpr::lex(m);
    IntMatrix sel(order.size(), m);
    for (std::size_t i = 0; i < order.size(); ++i) sel.rows[i][order[i]] = 1;
    return MonoidExpr::preimage(std::move(sel), MonoidExpr::lex(order.size()));
}

MonoidExpr factor_negative_cone(const RootedTree& t) {
    std::vector<MonoidExpr> terms;
    for (const auto& path : t.leaf_paths()) terms.push_back(lex_under_order(t.size(), path));
    if (terms.size() == 1) return terms.front();
    return MonoidExpr::intersect(std::move(terms));
}

}  // namespace

MonoidExpr negative_cone_expr(const ParasemifieldSpec& spec) {
    spec.validate();
    if (spec.factors.empty()) return MonoidExpr::lattice(0);
    std::vector<MonoidExpr> parts;
    for (const auto& f : spec.factors) parts.push_back(factor_negative_cone(f));
    if (parts.size() == 1) return parts.front();
    return MonoidExpr::product(std::move(parts));
}

MonoidExpr associated_monoid(const GeneratorTuple& x) {
    const std::size_t n = x.length();
    return MonoidExpr::intersect(
        {MonoidExpr::orthant(n), MonoidExpr::preimage(x.vertex_matrix(), negative_cone_expr(x.spec))});
}

MonoidExpr chain_associated_monoid(const GeneratorTuple& x,
                                   const std::vector<std::vector<std::size_t>>& orders) {
    if (orders.size() != x.spec.factors.size())
        throw DimensionMismatch("one chain order per factor required");
    std::vector<MonoidExpr> parts;
    for (std::size_t f = 0; f < orders.size(); ++f)
        parts.push_back(lex_under_order(x.spec.factors[f].size(), orders[f]));
    MonoidExpr neg_cone = parts.empty()
                              ? MonoidExpr::lattice(0)
                              : (parts.size() == 1 ? parts.front() : MonoidExpr::product(parts));
    const std::size_t n = x.length();
    return MonoidExpr::intersect(
        {MonoidExpr::orthant(n), MonoidExpr::preimage(x.vertex_matrix(), neg_cone)});
}

GeneratorTuple embedify(const GeneratorTuple& x) {
    const std::size_t n = x.length();
    if (rank(x.matrix) == n) return x;
    const std::size_t total = x.spec.total_vertices();
    if (total == 0)
        throw NoInversePair("the trivial parasemifield has no doubling pair to embed with");

    // re-express over the canonical ± tuple with nonnegative exponents
    IntMatrix values = x.vertex_matrix();
    GeneratorTuple y;
    y.spec = x.spec;
    for (std::size_t v = 0; v < total; ++v) {
        IntVector e(total, Int(0));
        e[v] = 1;
        y.basis.push_back(e);
        e[v] = -1;
        y.basis.push_back(e);
    }
    y.matrix = IntMatrix(2 * total, n);
    for (std::size_t v = 0; v < total; ++v)
        for (std::size_t j = 0; j < n; ++j) {
            const Int& val = values.rows[v][j];
            if (val > 0)
                y.matrix.rows[2 * v][j] = val;
            else if (val < 0)
                y.matrix.rows[2 * v + 1][j] = -val;
        }

    for (std::size_t guard = 0; guard <= n; ++guard) {
        std::size_t r = rank(y.matrix);
        if (r == n) break;
        std::size_t j0 = n;
        for (std::size_t j = 0; j < n && j0 == n; ++j) {
            IntMatrix without(y.matrix.nrows, n - 1);
            for (std::size_t i = 0; i < y.matrix.nrows; ++i) {
                std::size_t at = 0;
                for (std::size_t jj = 0; jj < n; ++jj)
                    if (jj != j) without.rows[i][at++] = y.matrix.rows[i][jj];
            }
            if (rank(without) == r) j0 = j;
        }
        if (j0 == n) throw std::logic_error("rank-deficient matrix with no dependent column");
        std::size_t pair_lo = y.basis.size(), pair_hi = 0;
        for (std::size_t i = 0; i < y.basis.size() && pair_lo == y.basis.size(); ++i)
            for (std::size_t k = i + 1; k < y.basis.size(); ++k)
                if (is_zero(add(y.basis[i], y.basis[k])) && !is_zero(y.basis[i])) {
                    pair_lo = i;
                    pair_hi = k;
                    break;
                }
        if (pair_lo == y.basis.size())
            throw NoInversePair("embedding step needs an inverse pair in the reference tuple");
        y.matrix.rows[pair_hi][j0] += 1;
        IntVector fresh(n, Int(0));
        fresh[j0] = 1;
        y.matrix.append_row(std::move(fresh));
        y.basis.push_back(y.basis[pair_lo]);
    }
    if (rank(y.matrix) != n) throw std::logic_error("embedding loop failed to reach full rank");
    return y;
}

std::vector<RootedTree> all_parent_trees(std::size_t m) {
    std::vector<RootedTree> out;
    if (m == 0) return out;
    std::vector<int> cur(m, -1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            out.push_back(RootedTree{cur});
            return;
        }
        for (int p = 0; p < static_cast<int>(i); ++p) {
            cur[i] = p;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace prisma
