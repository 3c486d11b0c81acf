#ifndef LIEDERIV_TEST_SUPPORT_HPP
#define LIEDERIV_TEST_SUPPORT_HPP

// Test-only oracles and generators. Nothing here calls the elimination code
// under test, so it can be used to check it.

#include "liederiv/matrix.hpp"

#include <random>
#include <vector>

namespace liederiv::testing {

inline Rational random_rational(std::mt19937_64& rng, long range = 5, long max_den = 3) {
    const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
    const long den = 1 + static_cast<long>(rng() % max_den);
    return Rational(num, den);
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, long range = 5) {
    Vector v(n);
    for (auto& x : v) x = random_rational(rng, range);
    return v;
}

/// Random matrix of the given shape and (at most) the given rank: product of two random factors.
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
    Matrix a(rows, rank), b(rank, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rank; ++j) a(i, j) = random_rational(rng, 3);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = random_rational(rng, 3);
    return a * b;
}

/// Textbook Gauss-Jordan over Q with plain fraction arithmetic.
struct NaiveRref {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

inline NaiveRref naive_rref(Matrix m) {
    NaiveRref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.reduced = m;
    return out;
}

/// n x n matrix unit e_ij (0-based).
inline Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

/// Row-major flattening of an n x n matrix, the gl_n ambient coordinate order.
inline Vector row_major(const Matrix& m) {
    Vector v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

inline Matrix from_row_major(const Vector& v, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    return m;
}

} // namespace liederiv::testing

#endif // LIEDERIV_TEST_SUPPORT_HPP
