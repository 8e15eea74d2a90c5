#include "prisma/ints.hpp"

#include <algorithm>
#include <sstream>

namespace prisma {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<IntVector> rs, std::size_t ncols) {
    IntMatrix m;
    m.ncols = ncols;
    for (auto& r : rs) {
        if (r.size() != ncols) throw DimensionMismatch("row length does not match column count");
    }
    m.rows = std::move(rs);
    m.nrows = m.rows.size();
    return m;
}

void IntMatrix::append_row(IntVector r) {
    if (r.size() != ncols) throw DimensionMismatch("row length does not match column count");
    rows.push_back(std::move(r));
    ++nrows;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const IntMatrix& m) {
    for (const auto& r : m.rows)
        if (!is_zero(r)) return false;
    return true;
}

IntVector neg(const IntVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVector scale(const Int& c, const IntVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& x) {
    if (x.size() != m.ncols) throw DimensionMismatch("matrix-vector size mismatch");
    IntVector r(m.nrows);
    for (std::size_t i = 0; i < m.nrows; ++i) r[i] = dot(m.rows[i], x);
    return r;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.ncols != b.nrows) throw DimensionMismatch("matrix product size mismatch");
    IntMatrix r(a.nrows, b.ncols);
    for (std::size_t i = 0; i < a.nrows; ++i)
        for (std::size_t k = 0; k < a.ncols; ++k) {
            if (a.rows[i][k] == 0) continue;
            for (std::size_t j = 0; j < b.ncols; ++j) r.rows[i][j] += a.rows[i][k] * b.rows[k][j];
        }
    return r;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix r(m.ncols, m.nrows);
    for (std::size_t i = 0; i < m.nrows; ++i)
        for (std::size_t j = 0; j < m.ncols; ++j) r.rows[j][i] = m.rows[i][j];
    return r;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.ncols != b.ncols && a.nrows != 0 && b.nrows != 0)
        throw DimensionMismatch("vstack column mismatch");
    IntMatrix r;
    r.ncols = a.nrows != 0 || b.nrows == 0 ? a.ncols : b.ncols;
    r.rows = a.rows;
    for (const auto& row : b.rows) r.rows.push_back(row);
    r.nrows = r.rows.size();
    return r;
}

Int content(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntVector primitive(const IntVector& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

int lex_compare(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

bool lex_less(const IntVector& a, const IntVector& b) { return lex_compare(a, b) < 0; }

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.nrows; ++i) {
        if (i) os << " ";
        os << to_string(m.rows[i]);
    }
    os << "]";
    return os.str();
}

std::uint64_t SplitMix::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long SplitMix::range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

}  // namespace prisma
