#include "prisma/monoidexpr.hpp"

#include <algorithm>
#include <set>

namespace prisma {

struct MonoidExpr::Node {
    Kind kind;
    std::size_t ambient = 0;
    AffineMonoid m;
    std::vector<MonoidExpr> args;
    IntMatrix mat;
    Subspace sub;
};

MonoidExpr MonoidExpr::fingen(AffineMonoid m) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::fingen;
    n->ambient = m.ambient;
    n->m = std::move(m);
    MonoidExpr e;
    e.node_ = std::move(n);
    return e;
}

MonoidExpr MonoidExpr::lex(std::size_t dim) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::lex;
    n->ambient = dim;
    MonoidExpr e;
    e.node_ = std::move(n);
    return e;
}

MonoidExpr MonoidExpr::orthant(std::size_t dim) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::orthant;
    n->ambient = dim;
    MonoidExpr e;
    e.node_ = std::move(n);
    return e;
}

MonoidExpr MonoidExpr::lattice(std::size_t dim) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::lattice;
    n->ambient = dim;
    MonoidExpr e;
    e.node_ = std::move(n);
    return e;
}

MonoidExpr MonoidExpr::intersect(std::vector<MonoidExpr> args) {
    if (args.empty()) throw UnsupportedShape("intersect needs at least one argument");
    for (const auto& a : args)
        if (a.ambient() != args.front().ambient())
            throw DimensionMismatch("intersect ambient mismatch");
    auto n = std::make_shared<Node>();
    n->kind = Kind::intersect;
    n->ambient = args.front().ambient();
    n->args = std::move(args);
    MonoidExpr e;
    e.node_ = std::move(n);
    return e;
}

MonoidExpr MonoidExpr::product(std::vector<MonoidExpr> args) {
    if (args.empty()) throw UnsupportedShape("product needs at least one argument");
    auto n = std::make_shared<Node>();
    n->kind = Kind::product;
    n->ambient = 0;
    for (const auto& a : args) n->ambient += a.ambient();
    n->args = std::move(args);
    MonoidExpr e;
    e.node_ = std::move(n);
    return e;
}

MonoidExpr MonoidExpr::preimage(IntMatrix map, MonoidExpr arg) {
    if (map.nrows != arg.ambient())
        throw DimensionMismatch("preimage map must target the argument");
    auto n = std::make_shared<Node>();
    n->kind = Kind::preimage;
    n->ambient = map.ncols;
    n->mat = std::move(map);
    n->args.push_back(std::move(arg));
    MonoidExpr e;
    e.node_ = std::move(n);
    return e;
}

MonoidExpr MonoidExpr::restriction(MonoidExpr arg, Subspace v) {
    if (v.ambient != arg.ambient()) throw DimensionMismatch("restriction ambient mismatch");
    auto n = std::make_shared<Node>();
    n->kind = Kind::restriction;
    n->ambient = arg.ambient();
    n->sub = std::move(v);
    n->args.push_back(std::move(arg));
    MonoidExpr e;
    e.node_ = std::move(n);
    return e;
}

MonoidExpr::Kind MonoidExpr::kind() const { return node_->kind; }
std::size_t MonoidExpr::ambient() const { return node_->ambient; }
const AffineMonoid& MonoidExpr::monoid() const { return node_->m; }
const std::vector<MonoidExpr>& MonoidExpr::args() const { return node_->args; }
const IntMatrix& MonoidExpr::map() const { return node_->mat; }
const MonoidExpr& MonoidExpr::arg() const { return node_->args.front(); }
const Subspace& MonoidExpr::subspace() const { return node_->sub; }

namespace {

enum class RowKind { eq, ge, gt };

struct FmRow {
    IntVector a;
    RowKind kind;
};

bool fm_feasible(std::size_t n, std::vector<FmRow> rows) {
    auto normalize = [](std::vector<FmRow>& rs) -> bool {
        std::vector<FmRow> keep;
        for (auto& r : rs) {
            if (is_zero(r.a)) {
                if (r.kind == RowKind::gt) return false;
                continue;
            }
            r.a = primitive(r.a);
            keep.push_back(std::move(r));
        }
        std::sort(keep.begin(), keep.end(), [](const FmRow& x, const FmRow& y) {
            if (x.kind != y.kind) return x.kind < y.kind;
            return lex_less(x.a, y.a);
        });
        keep.erase(std::unique(keep.begin(), keep.end(),
                               [](const FmRow& x, const FmRow& y) {
                                   return x.kind == y.kind && x.a == y.a;
                               }),
                   keep.end());
        rs = std::move(keep);
        return true;
    };
    if (!normalize(rows)) return false;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t epiv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].kind == RowKind::eq && rows[i].a[v] != 0) {
                epiv = i;
                break;
            }
        std::vector<FmRow> next;
        if (epiv < rows.size()) {
            FmRow e = rows[epiv];
            Int ev = e.a[v];
            Int sgn = ev > 0 ? 1 : -1;
            Int aev = abs(ev);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == epiv) continue;
                FmRow r = rows[i];
                if (r.a[v] != 0) {
                    Int c = sgn * r.a[v];
                    for (std::size_t j = 0; j < n; ++j) r.a[j] = aev * r.a[j] - c * e.a[j];
                }
                next.push_back(std::move(r));
            }
        } else {
            std::vector<FmRow> lower, upper;
            for (auto& r : rows) {
                if (r.a[v] > 0)
                    lower.push_back(std::move(r));
                else if (r.a[v] < 0)
                    upper.push_back(std::move(r));
                else
                    next.push_back(std::move(r));
            }
            for (const auto& lo : lower)
                for (const auto& up : upper) {
                    FmRow r;
                    r.a.resize(n);
                    const Int cl = lo.a[v], cu = -up.a[v];
                    for (std::size_t j = 0; j < n; ++j) r.a[j] = cu * lo.a[j] + cl * up.a[j];
                    bool st = lo.kind == RowKind::gt || up.kind == RowKind::gt;
                    bool eq = lo.kind == RowKind::eq && up.kind == RowKind::eq;
                    r.kind = eq ? RowKind::eq : (st ? RowKind::gt : RowKind::ge);
                    next.push_back(std::move(r));
                }
        }
        rows = std::move(next);
        if (!normalize(rows)) return false;
    }
    return true;
}

}  // namespace

bool feasible(std::size_t n, const std::vector<IntVector>& eq, const std::vector<IntVector>& strict,
              const std::vector<IntVector>& weak) {
    std::vector<FmRow> rows;
    for (const auto& r : eq) rows.push_back({r, RowKind::eq});
    for (const auto& r : strict) rows.push_back({r, RowKind::gt});
    for (const auto& r : weak) rows.push_back({r, RowKind::ge});
    return fm_feasible(n, std::move(rows));
}

bool Piece::contains(const IntVector& p) const {
    for (const auto& r : eq)
        if (dot(r, p) != 0) return false;
    for (const auto& r : strict)
        if (dot(r, p) <= 0) return false;
    for (const auto& r : weak)
        if (dot(r, p) < 0) return false;
    return true;
}

Cone Piece::closed_hull() const {
    std::vector<IntVector> ineqs = strict;
    for (const auto& r : weak) ineqs.push_back(r);
    return Cone::from_hrep(ambient, IntMatrix::from_rows(eq, ambient),
                           IntMatrix::from_rows(std::move(ineqs), ambient));
}

Subspace Piece::span() const {
    // affine hull: equations plus the weak rows the piece cannot satisfy strictly
    std::vector<IntVector> bound = eq;
    for (std::size_t i = 0; i < weak.size(); ++i) {
        std::vector<IntVector> st = strict;
        st.push_back(weak[i]);
        std::vector<IntVector> wk;
        for (std::size_t j = 0; j < weak.size(); ++j)
            if (j != i) wk.push_back(weak[j]);
        if (!feasible(ambient, eq, st, wk)) bound.push_back(weak[i]);
    }
    Subspace s;
    s.ambient = ambient;
    s.basis = kernel_lattice(IntMatrix::from_rows(std::move(bound), ambient));
    return s;
}

namespace {

Piece free_piece(std::size_t n) {
    Piece p;
    p.ambient = n;
    return p;
}

bool piece_feasible(const Piece& p) {
    if (p.strict.empty()) return true;  // homogeneous, contains 0
    return feasible(p.ambient, p.eq, p.strict, p.weak);
}

Piece merge_pieces(const Piece& a, const Piece& b) {
    Piece p = a;
    p.eq.insert(p.eq.end(), b.eq.begin(), b.eq.end());
    p.strict.insert(p.strict.end(), b.strict.begin(), b.strict.end());
    p.weak.insert(p.weak.end(), b.weak.begin(), b.weak.end());
    return p;
}

PieceUnion compile_node(const MonoidExpr& e, bool conjunctive) {
    const std::size_t n = e.ambient();
    PieceUnion out;
    out.ambient = n;
    switch (e.kind()) {
        case MonoidExpr::Kind::lattice:
            out.pieces.push_back(free_piece(n));
            return out;
        case MonoidExpr::Kind::orthant: {
            Piece p = free_piece(n);
            for (std::size_t i = 0; i < n; ++i) {
                IntVector row(n, Int(0));
                row[i] = 1;
                p.weak.push_back(std::move(row));
            }
            out.pieces.push_back(std::move(p));
            return out;
        }
        case MonoidExpr::Kind::lex: {
            Piece zero = free_piece(n);
            for (std::size_t i = 0; i < n; ++i) {
                IntVector row(n, Int(0));
                row[i] = 1;
                zero.eq.push_back(std::move(row));
            }
            out.pieces.push_back(std::move(zero));
            for (std::size_t k = 0; k < n; ++k) {
                Piece p = free_piece(n);
                for (std::size_t i = 0; i < k; ++i) {
                    IntVector row(n, Int(0));
                    row[i] = 1;
                    p.eq.push_back(std::move(row));
                }
                IntVector row(n, Int(0));
                row[k] = -1;  // -x_k > 0
                p.strict.push_back(std::move(row));
                out.pieces.push_back(std::move(p));
            }
            return out;
        }
        case MonoidExpr::Kind::fingen: {
            if (!conjunctive)
                throw UnsupportedShape(
                    "finitely generated node below preimage/product cannot be compiled");
            out.pieces.push_back(free_piece(n));
            out.filters.push_back(e.monoid());
            return out;
        }
        case MonoidExpr::Kind::intersect: {
            bool first = true;
            for (const auto& child : e.args()) {
                PieceUnion cu = compile_node(child, conjunctive);
                for (auto& f : cu.filters) out.filters.push_back(std::move(f));
                if (first) {
                    out.pieces = std::move(cu.pieces);
                    first = false;
                    continue;
                }
                std::vector<Piece> merged;
                for (const auto& a : out.pieces)
                    for (const auto& b : cu.pieces) {
                        Piece p = merge_pieces(a, b);
                        if (piece_feasible(p)) merged.push_back(std::move(p));
                    }
                out.pieces = std::move(merged);
            }
            return out;
        }
        case MonoidExpr::Kind::product: {
            std::vector<Piece> acc{free_piece(0)};
            std::size_t offset = 0;
            for (const auto& child : e.args()) {
                PieceUnion cu = compile_node(child, false);
                std::vector<Piece> merged;
                const std::size_t width = offset + child.ambient();
                for (const auto& a : acc)
                    for (const auto& b : cu.pieces) {
                        Piece p = free_piece(width);
                        auto shift_into = [&](const std::vector<IntVector>& src, std::size_t at,
                                              std::vector<IntVector>& dst) {
                            for (const auto& r : src) {
                                IntVector row(width, Int(0));
                                for (std::size_t j = 0; j < r.size(); ++j) row[at + j] = r[j];
                                dst.push_back(std::move(row));
                            }
                        };
                        shift_into(a.eq, 0, p.eq);
                        shift_into(a.strict, 0, p.strict);
                        shift_into(a.weak, 0, p.weak);
                        shift_into(b.eq, offset, p.eq);
                        shift_into(b.strict, offset, p.strict);
                        shift_into(b.weak, offset, p.weak);
                        merged.push_back(std::move(p));
                    }
                acc = std::move(merged);
                offset = width;
            }
            out.pieces = std::move(acc);
            return out;
        }
        case MonoidExpr::Kind::preimage: {
            PieceUnion cu = compile_node(e.arg(), false);
            IntMatrix mt = transpose(e.map());
            auto subst = [&](const std::vector<IntVector>& src) {
                std::vector<IntVector> dst;
                for (const auto& r : src) dst.push_back(mat_vec(mt, r));
                return dst;
            };
            for (const auto& p : cu.pieces) {
                Piece q = free_piece(n);
                q.eq = subst(p.eq);
                q.strict = subst(p.strict);
                q.weak = subst(p.weak);
                if (piece_feasible(q)) out.pieces.push_back(std::move(q));
            }
            return out;
        }
        case MonoidExpr::Kind::restriction: {
            PieceUnion cu = compile_node(e.arg(), conjunctive);
            IntMatrix eqs = e.subspace().equations();
            out.filters = std::move(cu.filters);
            for (const auto& p : cu.pieces) {
                Piece q = p;
                for (const auto& r : eqs.rows) q.eq.push_back(r);
                if (piece_feasible(q)) out.pieces.push_back(std::move(q));
            }
            return out;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

Tri tri_and(Tri a, Tri b) {
    if (a == Tri::no || b == Tri::no) return Tri::no;
    if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
    return Tri::yes;
}

}  // namespace

PieceUnion compile(const MonoidExpr& e) { return compile_node(e, true); }

Tri member(const MonoidExpr& e, const IntVector& p) {
    if (p.size() != e.ambient()) throw DimensionMismatch("member dimension mismatch");
    switch (e.kind()) {
        case MonoidExpr::Kind::lattice:
            return Tri::yes;
        case MonoidExpr::Kind::orthant:
            for (const auto& x : p)
                if (x < 0) return Tri::no;
            return Tri::yes;
        case MonoidExpr::Kind::lex:
            for (const auto& x : p) {
                if (x < 0) return Tri::yes;
                if (x > 0) return Tri::no;
            }
            return Tri::yes;
        case MonoidExpr::Kind::fingen:
            return monoid_membership(e.monoid(), p).verdict;
        case MonoidExpr::Kind::intersect: {
            Tri acc = Tri::yes;
            for (const auto& child : e.args()) {
                acc = tri_and(acc, member(child, p));
                if (acc == Tri::no) return Tri::no;
            }
            return acc;
        }
        case MonoidExpr::Kind::product: {
            Tri acc = Tri::yes;
            std::size_t at = 0;
            for (const auto& child : e.args()) {
                IntVector part(p.begin() + at, p.begin() + at + child.ambient());
                acc = tri_and(acc, member(child, part));
                if (acc == Tri::no) return Tri::no;
                at += child.ambient();
            }
            return acc;
        }
        case MonoidExpr::Kind::preimage:
            return member(e.arg(), mat_vec(e.map(), p));
        case MonoidExpr::Kind::restriction:
            if (!e.subspace().contains(p)) return Tri::no;
            return member(e.arg(), p);
    }
    throw std::logic_error("unreachable expression kind");
}

Subspace span(const MonoidExpr& e) {
    PieceUnion pu = compile(e);
    if (!pu.filters.empty())
        throw UnsupportedShape("span requires a filter-free polyhedral compilation");
    Subspace s = Subspace::zero(e.ambient());
    for (const auto& p : pu.pieces) s = sum(s, p.span());
    return s;
}

namespace {

// cl conv of a filter-free compilation: Minkowski sum of the closed hulls of
// the nonempty pieces.
Cone hull_cone(const PieceUnion& pu) {
    Cone acc = Cone::zero(pu.ambient);
    for (const auto& p : pu.pieces) acc = minkowski_sum(acc, p.closed_hull());
    return acc;
}

struct Conjunction {
    std::vector<MonoidExpr> parts;
    Subspace within;
};

void flatten_conjuncts(const MonoidExpr& e, Conjunction& out) {
    switch (e.kind()) {
        case MonoidExpr::Kind::intersect:
            for (const auto& c : e.args()) flatten_conjuncts(c, out);
            return;
        case MonoidExpr::Kind::restriction:
            out.within = intersect(out.within, e.subspace());
            flatten_conjuncts(e.arg(), out);
            return;
        default:
            out.parts.push_back(e);
            return;
    }
}

Cone conjunct_hull_in(const MonoidExpr& part, const Subspace& u) {
    if (part.kind() == MonoidExpr::Kind::fingen)
        return intersect_subspace(part.monoid().cone(), u);
    return hull_cone(compile(MonoidExpr::restriction(part, u)));
}

// Closure of an intersection of pure monoids inside V: iterate
// U <- span( ∩_i cl conv(part_i ∩ U) ) down to the fixpoint W = ⟨∩ parts ∩ V⟩,
// then read off the lattice points of the intersection cone there.
SaturatedMonoid closure_of_conjunction(const MonoidExpr& e, Subspace v) {
    Conjunction cj;
    cj.within = std::move(v);
    flatten_conjuncts(e, cj);

    // single finitely generated part: cl conv(m ∩ V) = cone(gens) ∩ V
    if (cj.parts.size() == 1 && cj.parts.front().kind() == MonoidExpr::Kind::fingen)
        return hilbert_basis(intersect_subspace(cj.parts.front().monoid().cone(), cj.within));

    for (const auto& part : cj.parts)
        if (!certified_pure(part))
            throw PurityRequired("closure of an intersection requires pure arguments");

    Subspace u = cj.within;
    while (true) {
        Cone q = intersect_subspace(Cone::full(e.ambient()), u);
        for (const auto& part : cj.parts) q = intersect(q, conjunct_hull_in(part, u));
        Subspace next = q.span();
        if (next == u) return hilbert_basis(q);
        u = std::move(next);
    }
}

}  // namespace

SaturatedMonoid closure(const MonoidExpr& e) {
    PieceUnion pu = compile(e);
    if (pu.filters.empty()) return hilbert_basis(hull_cone(pu));
    return closure_of_conjunction(e, Subspace::full(e.ambient()));
}

SaturatedMonoid closure_in_subspace(const MonoidExpr& e, const Subspace& v) {
    if (v.ambient != e.ambient()) throw DimensionMismatch("closure subspace ambient mismatch");
    PieceUnion pu = compile(e);
    if (pu.filters.empty())
        return hilbert_basis(hull_cone(compile(MonoidExpr::restriction(e, v))));
    return closure_of_conjunction(e, v);
}

PurityReport purity_probe(const MonoidExpr& e, long box_bound,
                          const std::vector<long>& multipliers) {
    const std::size_t n = e.ambient();
    PurityReport rep;
    std::vector<long> x(n, -box_bound);
    while (true) {
        IntVector a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = Int(x[i]);
        if (!is_zero(a)) {
            Tri in_a = member(e, a);
            if (in_a == Tri::unknown)
                throw UnsupportedShape("membership is not decidable on the probe box");
            if (in_a == Tri::no) {
                for (long k : multipliers) {
                    Tri in_ka = member(e, scale(Int(k), a));
                    if (in_ka == Tri::unknown)
                        throw UnsupportedShape("membership is not decidable on the probe box");
                    if (in_ka == Tri::yes) {
                        rep.pure = false;
                        rep.counterexample = a;
                        return rep;
                    }
                }
            }
        }
        std::size_t i = 0;
        while (i < n && x[i] == box_bound) x[i++] = -box_bound;
        if (i == n) break;
        ++x[i];
    }
    return rep;
}

bool certified_pure(const MonoidExpr& e) {
    switch (e.kind()) {
        case MonoidExpr::Kind::lex:
        case MonoidExpr::Kind::orthant:
        case MonoidExpr::Kind::lattice:
            return true;
        case MonoidExpr::Kind::fingen: {
            // pure iff saturated: every saturation generator must be a member
            SaturatedMonoid s = saturate_monoid(e.monoid());
            for (const auto& g : s.all_generators())
                if (monoid_membership(e.monoid(), g).verdict != Tri::yes) return false;
            return true;
        }
        case MonoidExpr::Kind::intersect:
        case MonoidExpr::Kind::product: {
            for (const auto& c : e.args())
                if (!certified_pure(c)) return false;
            return true;
        }
        case MonoidExpr::Kind::preimage:
        case MonoidExpr::Kind::restriction:
            return certified_pure(e.arg());
    }
    throw std::logic_error("unreachable expression kind");
}

}  // namespace prisma
