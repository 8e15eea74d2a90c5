#include "prisma/exactlin.hpp"

#include <algorithm>
#include <cstdlib>

namespace prisma {

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i != j) std::swap(m.rows[i], m.rows[j]);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (auto& x : m.rows[i]) x = -x;
}

// rows[i] -= q * rows[p]
void row_axpy(IntMatrix& m, std::size_t i, const Int& q, std::size_t p) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.ncols; ++j) m.rows[i][j] -= q * m.rows[p][j];
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.nrows);
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.ncols && r < m.nrows; ++col) {
        // reduce the column below row r to a single nonzero entry
        while (true) {
            std::size_t best = m.nrows;
            for (std::size_t i = r; i < m.nrows; ++i) {
                if (h.rows[i][col] == 0) continue;
                if (best == m.nrows ||
                    cmp(abs(h.rows[i][col]), abs(h.rows[best][col])) < 0)
                    best = i;
            }
            if (best == m.nrows) break;  // column is zero below r
            swap_rows(h, r, best);
            swap_rows(u, r, best);
            bool cleared = true;
            for (std::size_t i = r + 1; i < m.nrows; ++i) {
                if (h.rows[i][col] == 0) continue;
                Int q = fdiv(h.rows[i][col], h.rows[r][col]);
                row_axpy(h, i, q, r);
                row_axpy(u, i, q, r);
                if (h.rows[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (r < m.nrows && h.rows[r][col] != 0) {
            if (h.rows[r][col] < 0) {
                negate_row(h, r);
                negate_row(u, r);
            }
            for (std::size_t i = 0; i < r; ++i) {
                Int q = fdiv(h.rows[i][col], h.rows[r][col]);
                row_axpy(h, i, q, r);
                row_axpy(u, i, q, r);
            }
            ++r;
        }
    }
    return {h, u};
}

SnfResult smith_normal_form(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.nrows);
    IntMatrix v = IntMatrix::identity(m.ncols);
    std::size_t k = 0;
    const std::size_t lim = std::min(m.nrows, m.ncols);

    auto col_axpy = [&](IntMatrix& mat, std::size_t j, const Int& q, std::size_t p) {
        if (q == 0) return;
        for (std::size_t i = 0; i < mat.nrows; ++i) mat.rows[i][j] -= q * mat.rows[i][p];
    };
    auto swap_cols = [&](IntMatrix& mat, std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < mat.nrows; ++i) std::swap(mat.rows[i][a], mat.rows[i][b]);
    };

    while (k < lim) {
        // find the smallest nonzero entry in the trailing block
        std::size_t pi = d.nrows, pj = 0;
        for (std::size_t i = k; i < d.nrows; ++i)
            for (std::size_t j = k; j < d.ncols; ++j) {
                if (d.rows[i][j] == 0) continue;
                if (pi == d.nrows || cmp(abs(d.rows[i][j]), abs(d.rows[pi][pj])) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == d.nrows) break;  // trailing block zero
        swap_rows(d, k, pi);
        swap_rows(u, k, pi);
        swap_cols(d, k, pj);
        swap_cols(v, k, pj);
        bool clean = true;
        for (std::size_t i = k + 1; i < d.nrows; ++i) {
            Int q = fdiv(d.rows[i][k], d.rows[k][k]);
            row_axpy(d, i, q, k);
            row_axpy(u, i, q, k);
            if (d.rows[i][k] != 0) clean = false;
        }
        for (std::size_t j = k + 1; j < d.ncols; ++j) {
            Int q = fdiv(d.rows[k][j], d.rows[k][k]);
            col_axpy(d, j, q, k);
            col_axpy(v, j, q, k);
            if (d.rows[k][j] != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility: fold any non-divisible entry into the pivot row
        bool redo = false;
        for (std::size_t i = k + 1; i < d.nrows && !redo; ++i)
            for (std::size_t j = k + 1; j < d.ncols && !redo; ++j) {
                if (d.rows[i][j] % d.rows[k][k] != 0) {
                    row_axpy(d, k, Int(-1), i);
                    row_axpy(u, k, Int(-1), i);
                    redo = true;
                }
            }
        if (redo) continue;
        if (d.rows[k][k] < 0) {
            negate_row(d, k);
            negate_row(u, k);
        }
        ++k;
    }
    return {d, u, v};
}

IntMatrix kernel_lattice(const IntMatrix& m) {
    // U * M^T = H; the rows of U facing zero rows of H are a kernel basis.
    auto [h, u] = hermite_normal_form(transpose(m));
    std::vector<IntVector> ker;
    for (std::size_t i = 0; i < h.nrows; ++i)
        if (is_zero(h.rows[i])) ker.push_back(u.rows[i]);
    IntMatrix k = IntMatrix::from_rows(std::move(ker), m.ncols);
    IntMatrix canon = hermite_normal_form(k).h;
    std::vector<IntVector> nz;
    for (auto& r : canon.rows)
        if (!is_zero(r)) nz.push_back(std::move(r));
    return IntMatrix::from_rows(std::move(nz), m.ncols);
}

IntMatrix saturate_lattice(const IntMatrix& gens) {
    // span(L) ∩ Z^n = (L^⊥)^⊥; both complements are kernels, hence saturated.
    return kernel_lattice(kernel_lattice(gens));
}

std::size_t rank(const IntMatrix& m) {
    auto h = hermite_normal_form(m).h;
    std::size_t r = 0;
    for (const auto& row : h.rows)
        if (!is_zero(row)) ++r;
    return r;
}

Int determinant(const IntMatrix& m) {
    if (m.nrows != m.ncols) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.nrows;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a.rows[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a.rows[p], a.rows[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.rows[i][j] * a.rows[k][k] - a.rows[i][k] * a.rows[k][j];
                a.rows[i][j] = t / prev;
            }
        prev = a.rows[k][k];
    }
    return sign * a.rows[n - 1][n - 1];
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    auto [h, w] = hermite_normal_form(u);
    if (h != IntMatrix::identity(u.nrows)) throw std::invalid_argument("matrix is not unimodular");
    return w;
}

bool in_row_lattice(const IntMatrix& hnf_basis, const IntVector& x) {
    IntVector v = x;
    for (const auto& row : hnf_basis.rows) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        // later rows are zero in column p, so the pivot must divide exactly
        if (v[p] % row[p] != 0) return false;
        Int q = v[p] / row[p];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return is_zero(v);
}

std::optional<std::vector<Rat>> solve_in_row_span(const IntMatrix& rows, const IntVector& x) {
    if (x.size() != rows.ncols) throw DimensionMismatch("solve_in_row_span size mismatch");
    // Gaussian elimination over Q on the transposed system rows^T c = x.
    const std::size_t n = rows.ncols, k = rows.nrows;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(rows.rows[j][i]);
        a[i][k] = Rat(x[i]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (a[i][k] != 0) return std::nullopt;
    std::vector<Rat> coef(k, Rat(0));
    for (std::size_t i = 0; i < r; ++i) {
        Rat v = a[i][k] / a[i][pivot_col[i]];
        v.canonicalize();
        coef[pivot_col[i]] = v;
    }
    return coef;
}

Subspace Subspace::span_of(const IntMatrix& gens) {
    Subspace s;
    s.ambient = gens.ncols;
    s.basis = saturate_lattice(gens);
    return s;
}

Subspace Subspace::zero(std::size_t n) {
    Subspace s;
    s.ambient = n;
    s.basis = IntMatrix(0, n);
    return s;
}

Subspace Subspace::full(std::size_t n) {
    Subspace s;
    s.ambient = n;
    s.basis = IntMatrix::identity(n);
    return s;
}

bool Subspace::contains(const IntVector& x) const {
    if (x.size() != ambient) throw DimensionMismatch("subspace membership dimension mismatch");
    IntMatrix eq = equations();
    return is_zero(mat_vec(eq, x));
}

IntMatrix Subspace::equations() const { return kernel_lattice(basis); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw DimensionMismatch("subspace ambient mismatch");
    // V ∩ W = (V^⊥ + W^⊥)^⊥
    Subspace s;
    s.ambient = a.ambient;
    s.basis = kernel_lattice(vstack(a.equations(), b.equations()));
    return s;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) throw DimensionMismatch("subspace ambient mismatch");
    return Subspace::span_of(vstack(a.basis, b.basis));
}

Subspace image(const IntMatrix& map, const Subspace& v) {
    if (map.ncols != v.ambient) throw DimensionMismatch("image map ambient mismatch");
    std::vector<IntVector> rows;
    for (const auto& r : v.basis.rows) rows.push_back(mat_vec(map, r));
    return Subspace::span_of(IntMatrix::from_rows(std::move(rows), map.nrows));
}

Subspace preimage(const IntMatrix& map, const Subspace& w) {
    if (map.nrows != w.ambient) throw DimensionMismatch("preimage map ambient mismatch");
    Subspace s;
    s.ambient = map.ncols;
    s.basis = kernel_lattice(mat_mul(w.equations(), map));
    return s;
}

}  // namespace prisma
