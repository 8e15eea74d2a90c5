#include "prisma/facedecomp.hpp"

#include <sstream>

namespace prisma {

Tri FaceDecomposition::carrier_member(const IntVector& p) const {
    if (carrier_expr) return member(*carrier_expr, p);
    return monoid_membership(*carrier_monoid, p).verdict;
}

std::optional<std::size_t> FaceDecomposition::locate(const IntVector& p) const {
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].face.contains(p)) return i;
    return std::nullopt;
}

namespace {

MonoidFacePiece make_piece(const OpenFace& f) {
    MonoidFacePiece p;
    p.dim = f.dim;
    p.closure = hilbert_basis(f.closed_face);
    p.face = f;
    return p;
}

}  // namespace

FaceDecomposition decompose(const AffineMonoid& m) {
    FaceDecomposition d;
    d.ambient = m.ambient;
    d.hull = m.cone();
    d.carrier_monoid = m;
    // every face of a generated cone is spanned by the generators lying on
    // it, so every face piece meets the monoid
    for (const auto& f : open_faces(d.hull)) d.pieces.push_back(make_piece(f));
    return d;
}

FaceDecomposition decompose(const MonoidExpr& e) {
    PieceUnion pu = compile(e);
    if (!pu.filters.empty())
        throw UnsupportedShape("face decomposition needs a filter-free polyhedral expression");
    FaceDecomposition d;
    d.ambient = e.ambient();
    d.hull = closure(e).cone;
    d.carrier_expr = e;
    for (const auto& f : open_faces(d.hull)) {
        bool keep = f.dim == d.hull.lineality.nrows;  // the minimal face holds 0
        std::vector<IntVector> face_strict = f.closed_face.inequalities;
        for (const auto& piece : pu.pieces) {
            if (keep) break;
            std::vector<IntVector> eq = piece.eq;
            for (const auto& r : f.closed_face.equations.rows) eq.push_back(r);
            std::vector<IntVector> strict = piece.strict;
            for (const auto& r : face_strict) strict.push_back(r);
            if (feasible(d.ambient, eq, strict, piece.weak)) keep = true;
        }
        if (keep) d.pieces.push_back(make_piece(f));
    }
    return d;
}

DecompositionReport verify_decomposition(const FaceDecomposition& d, long box,
                                         std::size_t pair_cap, std::uint64_t seed) {
    DecompositionReport rep;
    const std::size_t n = d.ambient;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (!rep.witness) rep.witness = msg;
    };

    // collect the nonzero carrier points of the box, each located in its piece
    std::vector<IntVector> pts;
    std::vector<std::size_t> home;
    std::vector<long> x(n, 0);
    while (true) {
        IntVector p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = Int(x[i]);
        if (!is_zero(p) && d.carrier_member(p) == Tri::yes) {
            ++rep.points_checked;
            std::size_t hits = 0;
            std::size_t where = 0;
            for (std::size_t i = 0; i < d.pieces.size(); ++i)
                if (d.pieces[i].face.contains(p)) {
                    ++hits;
                    where = i;
                }
            if (hits != 1)
                fail(rep.partition_ok, "point " + to_string(p) + " lies in " +
                                           std::to_string(hits) + " pieces");
            else {
                pts.push_back(p);
                home.push_back(where);
            }
        }
        std::size_t i = 0;
        while (i < n && x[i] == box) x[i++] = 0;
        if (i == n) break;
        ++x[i];
    }

    // full-dimensional pieces close to the closure of the carrier
    SaturatedMonoid carrier_closure = hilbert_basis(d.hull);
    for (const auto& piece : d.pieces) {
        if (piece.dim != d.carrier_dim()) continue;
        if (piece.closure.basis != carrier_closure.basis ||
            piece.closure.lineality != carrier_closure.lineality)
            fail(rep.closure_match_ok, "full-dimensional piece closure differs from the closure");
    }

    // pair properties, deterministically subsampled above the cap
    const std::size_t total_pairs = pts.size() * pts.size();
    SplitMix rng(seed);
    auto each_pair = [&](auto&& body) {
        if (total_pairs <= pair_cap) {
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = 0; j < pts.size(); ++j) body(i, j);
        } else {
            for (std::size_t t = 0; t < pair_cap; ++t)
                body(static_cast<std::size_t>(rng.range(0, static_cast<long>(pts.size()) - 1)),
                     static_cast<std::size_t>(rng.range(0, static_cast<long>(pts.size()) - 1)));
        }
    };
    each_pair([&](std::size_t i, std::size_t j) {
        ++rep.pairs_checked;
        const IntVector& alpha = pts[i];
        const MonoidFacePiece& dpiece = d.pieces[home[i]];
        const IntVector& beta = pts[j];
        IntVector s = add(alpha, beta);
        if (dpiece.closure.contains(beta)) return;
        // beta in C \ cl(D): the sum must land strictly higher
        auto loc = d.locate(s);
        if (!loc)
            fail(rep.growth_ok, "sum " + to_string(s) + " not located in any piece");
        else if (d.pieces[*loc].dim <= dpiece.dim)
            fail(rep.growth_ok,
                 "sum " + to_string(s) + " fell into dimension " +
                     std::to_string(d.pieces[*loc].dim) + " from " + std::to_string(dpiece.dim));
    });

    // absorption: alpha in D, gamma in cl(D) ∩ box keeps alpha + gamma in D
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const IntVector& alpha = pts[i];
        const MonoidFacePiece& dpiece = d.pieces[home[i]];
        std::vector<long> y(n, 0);
        while (true) {
            IntVector gamma(n);
            for (std::size_t k = 0; k < n; ++k) gamma[k] = Int(y[k]);
            if (dpiece.closure.contains(gamma)) {
                IntVector s = add(alpha, gamma);
                bool in_piece = dpiece.face.contains(s) && d.carrier_member(s) == Tri::yes;
                if (!in_piece)
                    fail(rep.absorption_ok,
                         "alpha " + to_string(alpha) + " + gamma " + to_string(gamma) +
                             " left its piece");
            }
            std::size_t k = 0;
            while (k < n && y[k] == box) y[k++] = 0;
            if (k == n) break;
            ++y[k];
        }
        if (!rep.absorption_ok) break;
    }
    return rep;
}

}  // namespace prisma
