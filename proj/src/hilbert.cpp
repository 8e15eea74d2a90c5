#include "prisma/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prisma {

namespace {

// Deterministic placing triangulation of a pointed cone given by its sorted
// extreme rays. Returns index sets of simplicial subcones whose union covers
// the cone; each is full-dimensional in the span of the rays processed so far.
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& rays,
                                                            std::size_t n) {
    std::vector<std::vector<std::size_t>> simplices;
    std::vector<std::size_t> done;
    std::size_t cur_rank = 0;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<IntVector> span_rows;
        for (auto j : done) span_rows.push_back(rays[j]);
        span_rows.push_back(rays[i]);
        std::size_t new_rank = rank(IntMatrix::from_rows(span_rows, n));
        if (new_rank > cur_rank) {
            if (simplices.empty())
                simplices.push_back({i});
            else
                for (auto& s : simplices) s.push_back(i);
            cur_rank = new_rank;
        } else {
            // the ray lies in the current span: join it to every facet it sees
            span_rows.pop_back();
            IntMatrix span_perp = kernel_lattice(IntMatrix::from_rows(span_rows, n));
            std::set<std::vector<std::size_t>> fresh;
            for (const auto& s : simplices) {
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    std::vector<IntVector> facet_rows;
                    for (std::size_t t = 0; t < s.size(); ++t)
                        if (t != drop) facet_rows.push_back(rays[s[t]]);
                    IntMatrix constraints = IntMatrix::from_rows(facet_rows, n);
                    IntMatrix normal_basis = kernel_lattice(vstack(constraints, span_perp));
                    if (normal_basis.nrows != 1) continue;
                    IntVector h = normal_basis.rows[0];
                    Int apex = dot(h, rays[s[drop]]);
                    if (apex == 0) continue;
                    if (apex < 0) h = neg(h);
                    if (dot(h, rays[i]) < 0) {
                        std::vector<std::size_t> t;
                        for (std::size_t q = 0; q < s.size(); ++q)
                            if (q != drop) t.push_back(s[q]);
                        t.push_back(i);
                        std::sort(t.begin(), t.end());
                        fresh.insert(std::move(t));
                    }
                }
            }
            for (const auto& s : fresh) simplices.push_back(s);
        }
        done.push_back(i);
    }
    return simplices;
}

// Lattice points of the half-open parallelepiped {sum t_i g_i : 0 <= t_i < 1}
// of linearly independent generators, enumerated mixed-radix through the HNF
// of the generator coordinates in the saturated lattice of their span.
std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& gens, std::size_t n) {
    const std::size_t m = gens.size();
    IntMatrix g = IntMatrix::from_rows(gens, n);
    IntMatrix lattice = saturate_lattice(g);
    IntMatrix coords(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        auto c = solve_in_row_span(lattice, gens[i]);
        for (std::size_t j = 0; j < m; ++j) {
            if (c->at(j).get_den() != 1) throw std::logic_error("non-integral lattice coordinate");
            coords.rows[i][j] = c->at(j).get_num();
        }
    }
    IntMatrix h = hermite_normal_form(coords).h;
    std::vector<IntVector> out;
    std::vector<Int> radix(m);
    for (std::size_t i = 0; i < m; ++i) radix[i] = h.rows[i][i];
    std::vector<Int> x(m, Int(0));
    while (true) {
        IntVector p(n, Int(0));
        for (std::size_t i = 0; i < m; ++i)
            if (x[i] != 0) p = add(p, scale(x[i], lattice.rows[i]));
        auto t = solve_in_row_span(g, p);
        IntVector q = p;
        for (std::size_t i = 0; i < m; ++i) {
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), t->at(i).get_num().get_mpz_t(),
                       t->at(i).get_den().get_mpz_t());
            if (fl != 0) q = sub(q, scale(fl, gens[i]));
        }
        if (!is_zero(q)) out.push_back(std::move(q));
        std::size_t i = 0;
        while (i < m) {
            ++x[i];
            if (x[i] < radix[i]) break;
            x[i] = 0;
            ++i;
        }
        if (i == m) break;
    }
    return out;
}

// Minimal Hilbert basis of a pointed cone from its canonical extreme rays:
// ray + parallelepiped candidates, then drop everything that splits off a
// nonzero monoid element.
std::vector<IntVector> pointed_hilbert(const Cone& c) {
    if (c.rays.empty()) return {};
    auto simplices = placing_triangulation(c.rays, c.ambient);
    std::set<IntVector> cand(c.rays.begin(), c.rays.end());
    for (const auto& s : simplices) {
        std::vector<IntVector> gens;
        for (auto i : s) gens.push_back(c.rays[i]);
        for (auto& p : parallelepiped_points(gens, c.ambient)) cand.insert(std::move(p));
    }
    std::vector<IntVector> basis;
    for (const auto& v : cand) {
        bool reducible = false;
        for (const auto& a : cand) {
            IntVector rest = sub(v, a);
            if (is_zero(rest)) continue;
            if (c.contains(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(v);
    }
    return basis;
}

}  // namespace

AffineMonoid AffineMonoid::from_gens(std::size_t ambient, std::vector<IntVector> gens) {
    for (const auto& g : gens)
        if (g.size() != ambient) throw DimensionMismatch("generator ambient mismatch");
    std::vector<IntVector> nz;
    for (auto& g : gens)
        if (!is_zero(g)) nz.push_back(std::move(g));
    std::sort(nz.begin(), nz.end(), lex_less);
    nz.erase(std::unique(nz.begin(), nz.end()), nz.end());
    AffineMonoid m;
    m.ambient = ambient;
    m.gens = std::move(nz);
    return m;
}

std::vector<IntVector> SaturatedMonoid::all_generators() const {
    std::vector<IntVector> out;
    for (const auto& l : lineality.rows) {
        out.push_back(l);
        out.push_back(neg(l));
    }
    for (const auto& b : basis) out.push_back(b);
    return out;
}

SaturatedMonoid hilbert_basis(const Cone& c) {
    SaturatedMonoid result;
    result.cone = c;
    result.lineality = c.lineality;
    const std::size_t n = c.ambient, ell = c.lineality.nrows;
    if (ell == n || c.rays.empty()) return result;

    if (ell == 0) {
        result.basis = pointed_hilbert(c);
        return result;
    }
    // Quotient by the saturated lineality lattice: with U' L^T V' = [I; 0],
    // the bottom n-ell rows of U' project and columns ell.. of U'^{-1} lift.
    auto snf = smith_normal_form(transpose(c.lineality));
    for (std::size_t i = 0; i < ell; ++i)
        if (snf.d.rows[i][i] != 1) throw std::logic_error("lineality lattice is not saturated");
    IntMatrix proj(n - ell, n);
    for (std::size_t i = 0; i < n - ell; ++i) proj.rows[i] = snf.u.rows[ell + i];
    IntMatrix uinv = unimodular_inverse(snf.u);
    IntMatrix lift(n, n - ell);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n - ell; ++j) lift.rows[i][j] = uinv.rows[i][ell + j];

    std::vector<IntVector> qrays;
    for (const auto& r : c.rays) qrays.push_back(mat_vec(proj, r));
    Cone quotient = Cone::from_rays(n - ell, qrays);
    for (const auto& h : pointed_hilbert(quotient)) result.basis.push_back(mat_vec(lift, h));
    std::sort(result.basis.begin(), result.basis.end(), lex_less);
    return result;
}

SaturatedMonoid saturate_monoid(const AffineMonoid& m) { return hilbert_basis(m.cone()); }

SaturatedMonoid intersect(const SaturatedMonoid& a, const SaturatedMonoid& b) {
    return hilbert_basis(intersect(a.cone, b.cone));
}

MembershipResult monoid_membership(const AffineMonoid& m, const IntVector& p, std::size_t budget) {
    if (p.size() != m.ambient) throw DimensionMismatch("membership dimension mismatch");
    MembershipResult res;
    if (is_zero(p)) {
        res.verdict = Tri::yes;
        return res;
    }
    Cone hull = m.cone();
    if (!hull.contains(p)) {
        res.verdict = Tri::no;
        return res;
    }
    // Remainders are kept inside the hull, so for a pointed hull the search
    // space is finite and exhaustion is an exact refutation.
    const bool graded = hull.is_pointed();
    std::map<IntVector, std::pair<IntVector, std::size_t>> seen;
    std::vector<IntVector> stack{p};
    seen.emplace(p, std::make_pair(IntVector{}, m.gens.size()));
    bool exhausted = true;
    while (!stack.empty()) {
        IntVector cur = stack.back();
        stack.pop_back();
        for (std::size_t gi = 0; gi < m.gens.size(); ++gi) {
            IntVector rest = sub(cur, m.gens[gi]);
            if (is_zero(rest)) {
                res.verdict = Tri::yes;
                std::map<IntVector, Int> mult;
                mult[m.gens[gi]] += 1;
                IntVector walk = cur;
                while (walk != p) {
                    auto& pr = seen.at(walk);
                    mult[m.gens[pr.second]] += 1;
                    walk = pr.first;
                }
                for (auto& [g, k] : mult) res.certificate.emplace_back(g, k);
                return res;
            }
            if (!hull.contains(rest)) continue;
            if (seen.count(rest)) continue;
            if (seen.size() >= budget) {
                exhausted = false;
                continue;
            }
            seen.emplace(rest, std::make_pair(cur, gi));
            stack.push_back(rest);
        }
    }
    res.verdict = (graded && exhausted) ? Tri::no : Tri::unknown;
    return res;
}

}  // namespace prisma
