#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace prisma {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PurityRequired : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoInversePair : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CertificateUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of arbitrary-precision integers. Rows all share
/// ncols; a matrix may have zero rows but still carries its column count.
struct IntMatrix {
    std::size_t nrows = 0;
    std::size_t ncols = 0;
    std::vector<IntVector> rows;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : nrows(r), ncols(c), rows(r, IntVector(c)) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<IntVector> rs, std::size_t ncols);

    Int& at(std::size_t i, std::size_t j) { return rows[i][j]; }
    const Int& at(std::size_t i, std::size_t j) const { return rows[i][j]; }

    void append_row(IntVector r);
    bool operator==(const IntMatrix& o) const = default;
};

bool is_zero(const IntVector& v);
bool is_zero(const IntMatrix& m);
IntVector neg(const IntVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Int& c, const IntVector& v);
Int dot(const IntVector& a, const IntVector& b);

/// M * x with x a column vector of size M.ncols.
IntVector mat_vec(const IntMatrix& m, const IntVector& x);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

/// gcd of all entries, nonnegative; 0 for the zero vector.
Int content(const IntVector& v);
/// v divided by its content; the zero vector stays zero.
IntVector primitive(const IntVector& v);

bool lex_less(const IntVector& a, const IntVector& b);
int lex_compare(const IntVector& a, const IntVector& b);

/// Floor division / remainder (remainder in [0, |b|)).
Int fdiv(const Int& a, const Int& b);
Int fmod(const Int& a, const Int& b);

std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& m);

/// Deterministic splittable PRNG (splitmix64); used by the seeded
/// property suites so results are reproducible across platforms.
struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    /// uniform in [lo, hi] inclusive
    long range(long lo, long hi);
};

}  // namespace prisma
