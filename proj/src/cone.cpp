#include "prisma/cone.hpp"

#include <algorithm>
#include <set>

namespace prisma {

namespace {

std::vector<IntVector> canonical_rows(const std::vector<IntVector>& rows) {
    std::vector<IntVector> out;
    for (const auto& r : rows) {
        IntVector p = primitive(r);
        if (!is_zero(p)) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Zero out the coordinates of r at the pivot columns of the HNF lattice
// basis, scaling by positive pivots only so the ray direction is kept.
IntVector reduce_mod_lattice(const IntMatrix& hnf, IntVector r) {
    for (const auto& row : hnf.rows) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size() || r[p] == 0) continue;
        Int piv = row[p];
        Int rp = r[p];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = piv * r[j] - rp * row[j];
        r = primitive(r);
    }
    return r;
}

struct DDState {
    std::size_t n;
    std::vector<IntVector> lin;        // current lineality basis rows
    std::vector<IntVector> rays;
    std::vector<IntVector> processed;  // equation rows + inserted inequalities
};

bool dd_adjacent(const DDState& st, const IntVector& rp, const IntVector& rm) {
    const std::size_t ell = st.lin.size();
    if (st.n < ell + 2) return false;
    const std::size_t required = st.n - ell - 2;
    std::vector<IntVector> tight;
    for (const auto& t : st.processed)
        if (dot(t, rp) == 0 && dot(t, rm) == 0) tight.push_back(t);
    if (tight.size() < required) return false;
    return rank(IntMatrix::from_rows(std::move(tight), st.n)) == required;
}

// Incremental double description: generator form of
// {x : eqs x = 0, a x >= 0 for all inequality rows}.
DDState double_description(std::size_t n, const IntMatrix& eqs,
                           const std::vector<IntVector>& ineqs) {
    DDState st;
    st.n = n;
    IntMatrix lin0 = kernel_lattice(eqs);
    st.lin = lin0.rows;
    for (const auto& e : eqs.rows)
        if (!is_zero(e)) st.processed.push_back(primitive(e));

    for (const auto& a : canonical_rows(ineqs)) {
        std::size_t knz = st.lin.size();
        for (std::size_t i = 0; i < st.lin.size(); ++i)
            if (dot(a, st.lin[i]) != 0) {
                knz = i;
                break;
            }
        if (knz < st.lin.size()) {
            IntVector l0 = st.lin[knz];
            Int s = dot(a, l0);
            if (s < 0) {
                l0 = neg(l0);
                s = -s;
            }
            std::vector<IntVector> new_lin;
            for (std::size_t i = 0; i < st.lin.size(); ++i) {
                if (i == knz) continue;
                Int c = dot(a, st.lin[i]);
                new_lin.push_back(primitive(sub(scale(s, st.lin[i]), scale(c, l0))));
            }
            for (auto& r : st.rays) {
                Int c = dot(a, r);
                r = primitive(sub(scale(s, r), scale(c, l0)));
            }
            st.lin = std::move(new_lin);
            st.rays.push_back(primitive(l0));
        } else {
            std::vector<std::size_t> pos, zer, neg_idx;
            std::vector<Int> val(st.rays.size());
            for (std::size_t i = 0; i < st.rays.size(); ++i) {
                val[i] = dot(a, st.rays[i]);
                if (val[i] > 0)
                    pos.push_back(i);
                else if (val[i] == 0)
                    zer.push_back(i);
                else
                    neg_idx.push_back(i);
            }
            if (!neg_idx.empty()) {
                std::vector<IntVector> next;
                for (auto i : pos) next.push_back(st.rays[i]);
                for (auto i : zer) next.push_back(st.rays[i]);
                std::set<IntVector> fresh;
                for (auto ip : pos)
                    for (auto im : neg_idx) {
                        if (!dd_adjacent(st, st.rays[ip], st.rays[im])) continue;
                        IntVector w = sub(scale(val[ip], st.rays[im]), scale(val[im], st.rays[ip]));
                        fresh.insert(primitive(w));
                    }
                for (const auto& w : fresh) next.push_back(w);
                st.rays = std::move(next);
            }
        }
        st.processed.push_back(a);
    }
    return st;
}

std::vector<IntVector> canonical_rays(const std::vector<IntVector>& raw, const IntMatrix& lin) {
    std::vector<IntVector> out;
    for (const auto& r : raw) {
        IntVector v = primitive(reduce_mod_lattice(lin, r));
        if (!is_zero(v)) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Cone Cone::zero(std::size_t n) {
    Cone c;
    c.ambient = n;
    c.lineality = IntMatrix(0, n);
    c.equations = IntMatrix::identity(n);
    return c;
}

Cone Cone::full(std::size_t n) {
    Cone c;
    c.ambient = n;
    c.lineality = IntMatrix::identity(n);
    c.equations = IntMatrix(0, n);
    return c;
}

Cone Cone::from_hrep(std::size_t n, const IntMatrix& eqs_in, const IntMatrix& ineqs_in) {
    if ((eqs_in.nrows && eqs_in.ncols != n) || (ineqs_in.nrows && ineqs_in.ncols != n))
        throw DimensionMismatch("hrep ambient mismatch");
    Cone c;
    c.ambient = n;
    DDState primal = double_description(n, eqs_in, ineqs_in.rows);
    c.lineality = saturate_lattice(IntMatrix::from_rows(primal.lin, n));
    c.rays = canonical_rays(primal.rays, c.lineality);
    DDState dual = double_description(n, c.lineality, c.rays);
    c.equations = saturate_lattice(IntMatrix::from_rows(dual.lin, n));
    c.inequalities = canonical_rays(dual.rays, c.equations);
    return c;
}

Cone Cone::from_rays(std::size_t n, const std::vector<IntVector>& gens,
                     const std::vector<IntVector>& lineality_gens) {
    for (const auto& g : gens)
        if (g.size() != n) throw DimensionMismatch("ray ambient mismatch");
    for (const auto& l : lineality_gens)
        if (l.size() != n) throw DimensionMismatch("lineality ambient mismatch");
    Cone c;
    c.ambient = n;
    IntMatrix lin_rows = IntMatrix::from_rows(lineality_gens, n);
    DDState dual = double_description(n, lin_rows.nrows ? lin_rows : IntMatrix(0, n), gens);
    c.equations = saturate_lattice(IntMatrix::from_rows(dual.lin, n));
    c.inequalities = canonical_rays(dual.rays, c.equations);
    DDState primal =
        double_description(n, c.equations, c.inequalities);
    c.lineality = saturate_lattice(IntMatrix::from_rows(primal.lin, n));
    c.rays = canonical_rays(primal.rays, c.lineality);
    return c;
}

bool Cone::contains(const IntVector& p) const {
    if (p.size() != ambient) throw DimensionMismatch("cone membership dimension mismatch");
    for (const auto& e : equations.rows)
        if (dot(e, p) != 0) return false;
    for (const auto& a : inequalities)
        if (dot(a, p) < 0) return false;
    return true;
}

bool Cone::in_relative_interior(const IntVector& p) const {
    if (p.size() != ambient) throw DimensionMismatch("cone membership dimension mismatch");
    for (const auto& e : equations.rows)
        if (dot(e, p) != 0) return false;
    for (const auto& a : inequalities)
        if (dot(a, p) <= 0) return false;
    return true;
}

Subspace Cone::span() const {
    Subspace s;
    s.ambient = ambient;
    s.basis = kernel_lattice(equations);
    return s;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient != b.ambient) throw DimensionMismatch("cone ambient mismatch");
    std::vector<IntVector> ineqs = a.inequalities;
    for (const auto& r : b.inequalities) ineqs.push_back(r);
    return Cone::from_hrep(a.ambient, vstack(a.equations, b.equations),
                           IntMatrix::from_rows(std::move(ineqs), a.ambient));
}

Cone minkowski_sum(const Cone& a, const Cone& b) {
    if (a.ambient != b.ambient) throw DimensionMismatch("cone ambient mismatch");
    std::vector<IntVector> gens = a.rays;
    for (const auto& r : b.rays) gens.push_back(r);
    std::vector<IntVector> lin = a.lineality.rows;
    for (const auto& r : b.lineality.rows) lin.push_back(r);
    return Cone::from_rays(a.ambient, gens, lin);
}

Cone intersect_subspace(const Cone& c, const Subspace& v) {
    if (c.ambient != v.ambient) throw DimensionMismatch("cone/subspace ambient mismatch");
    return Cone::from_hrep(c.ambient, vstack(c.equations, v.equations()),
                           IntMatrix::from_rows(c.inequalities, c.ambient));
}

std::vector<OpenFace> open_faces(const Cone& c) {
    std::vector<Cone> faces{c};
    std::vector<std::size_t> todo{0};
    while (!todo.empty()) {
        std::size_t idx = todo.back();
        todo.pop_back();
        Cone f = faces[idx];
        for (const auto& a : f.inequalities) {
            IntMatrix eqs = f.equations;
            eqs.append_row(a);
            Cone child = Cone::from_hrep(c.ambient, eqs,
                                         IntMatrix::from_rows(f.inequalities, c.ambient));
            if (std::find(faces.begin(), faces.end(), child) == faces.end()) {
                faces.push_back(child);
                todo.push_back(faces.size() - 1);
            }
        }
    }
    std::vector<OpenFace> out;
    for (auto& f : faces) {
        OpenFace of;
        of.dim = f.dim();
        of.span = f.span();
        of.closed_face = std::move(f);
        out.push_back(std::move(of));
    }
    std::sort(out.begin(), out.end(), [](const OpenFace& x, const OpenFace& y) {
        if (x.dim != y.dim) return x.dim < y.dim;
        if (x.span.basis.rows != y.span.basis.rows) return x.span.basis.rows < y.span.basis.rows;
        return x.closed_face.inequalities < y.closed_face.inequalities;
    });
    return out;
}

}  // namespace prisma
