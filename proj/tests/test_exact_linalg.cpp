#include "liederiv/errors.hpp"
#include "liederiv/linalg.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace liederiv;
using liederiv::testing::naive_rref;
using liederiv::testing::random_matrix;
using liederiv::testing::random_vector;

namespace {

Vector vec(std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Vector e(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("rational stays reduced") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), UsageError);
    CHECK_THROWS_AS(Rational::parse("1.5"), UsageError);
    CHECK_THROWS_AS(Rational::parse(""), UsageError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), UsageError);
}

TEST_CASE("rational arithmetic matches integer cross-multiplication") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const long a = static_cast<long>(rng() % 2001) - 1000, b = 1 + static_cast<long>(rng() % 999);
        const long c = static_cast<long>(rng() % 2001) - 1000, d = 1 + static_cast<long>(rng() % 999);
        CHECK(Rational(a, b) + Rational(c, d) == Rational(a * d + b * c, b * d));
        CHECK(Rational(a, b) * Rational(c, d) == Rational(a * c, b * d));
        const Rational s = Rational(a, b) + Rational(c, d);
        CHECK(s.denominator() > 0);
        CHECK(gcd(s.numerator(), s.denominator()) == 1);
    }
}

TEST_CASE("rref examples") {
    auto r = rref(Matrix{{2, 4}, {1, 2}});
    CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});

    r = rref(Matrix::identity(3));
    CHECK(r.reduced == Matrix::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    r = rref(Matrix(2, 5));
    CHECK(r.reduced == Matrix(2, 5));
    CHECK(r.rank == 0);
    CHECK(r.pivots.empty());
}

TEST_CASE("rref agrees with textbook Gauss-Jordan and the sparse engine") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        const std::size_t rank = rng() % (std::min(rows, cols) + 1);
        const Matrix m = random_matrix(rng, rows, cols, rank);
        const auto fast = rref(m);
        const auto slow = naive_rref(m);
        CHECK(fast.reduced == slow.reduced);
        CHECK(fast.rank == slow.rank);
        CHECK(fast.pivots == slow.pivots);
        CHECK(fast.rank <= rank);

        SparseEchelon ech(cols);
        for (std::size_t i = 0; i < rows; ++i) ech.add_row(m.row(i));
        const auto sparse = ech.to_rref();
        CHECK(sparse.rank == fast.rank);
        CHECK(sparse.pivots == fast.pivots);
        for (std::size_t i = 0; i < fast.rank; ++i) CHECK(sparse.reduced.row(i) == fast.reduced.row(i));
    }
}

TEST_CASE("rref is canonical for a row space") {
    // Same row space, different generators: left-multiply by random invertible matrices.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 2 + rng() % 4, cols = 2 + rng() % 6;
        const Matrix m = random_matrix(rng, rows, cols, std::min(rows, cols) - 1);
        Matrix g;
        do {
            g = random_matrix(rng, rows, rows, rows);
        } while (rref(g).rank != rows);
        const auto a = rref(m);
        const auto b = rref(g * m);
        CHECK(a.reduced == b.reduced);
        CHECK(a.pivots == b.pivots);
    }
}

TEST_CASE("nullspace examples") {
    const auto k = nullspace(Matrix{{1, 1}});
    CHECK(k == Subspace::span(2, {vec({1, -1})}));
    CHECK(k.dim() == 1);
    CHECK(nullspace(Matrix::identity(4)).dim() == 0);
    CHECK(nullspace(Matrix(3, 4)) == Subspace::full(4));
}

TEST_CASE("nullspace vectors are annihilated and dim = cols - rank") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
        const Matrix m = random_matrix(rng, rows, cols, rng() % (std::min(rows, cols) + 1));
        const auto k = nullspace(m);
        CHECK(k.dim() == cols - rref(m).rank);
        for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m * k.basis_vector(i)));
    }
}

TEST_CASE("solve examples") {
    const Vector b = vec({4, -1, 7});
    CHECK(solve(Matrix::identity(3), b) == b);
    CHECK_FALSE(solve(Matrix{{1, 1}, {2, 2}}, vec({1, 3})).has_value());
    const auto x = solve(Matrix{{2}}, vec({3}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(3, 2));
    CHECK_THROWS_AS(solve(Matrix{{1, 2}}, vec({1, 2})), UsageError);
}

TEST_CASE("solve: found means exact, missing means inconsistent") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        const Matrix m = random_matrix(rng, rows, cols, rng() % (std::min(rows, cols) + 1));
        const Vector b = trial % 2 ? m * random_vector(rng, cols) : random_vector(rng, rows);
        const auto x = solve(m, b);
        if (x) {
            CHECK(m * *x == b);
        } else {
            Matrix aug(rows, cols + 1);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
                aug(r, cols) = b[r];
            }
            CHECK(rref(aug).rank > rref(m).rank);
        }
        if (trial % 2) CHECK(x.has_value());
    }
}

TEST_CASE("subspace sum, intersection, membership") {
    const auto e1 = Subspace::span(3, {e(3, 0)});
    const auto e2 = Subspace::span(3, {e(3, 1)});
    const auto e12 = Subspace::span(3, {e(3, 0), e(3, 1)});
    const auto e23 = Subspace::span(3, {e(3, 1), e(3, 2)});
    const auto zero = Subspace::zero(3);

    CHECK(subspace_sum(e1, e2) == e12);
    CHECK(subspace_sum(e12, e12) == e12);
    CHECK(subspace_sum(e12, zero) == e12);

    CHECK(subspace_intersect(e12, e23) == e2);
    CHECK(subspace_intersect(e12, Subspace::full(3)) == e12);
    CHECK(subspace_intersect(e1, e2) == zero);

    const auto diag = Subspace::span(2, {vec({1, 1})});
    CHECK(contains(diag, vec({2, 2})));
    CHECK_FALSE(contains(diag, vec({1, 0})));
    CHECK(contains(diag, Vector(2)));
    CHECK(contains(zero, Vector(3)));

    CHECK_THROWS_AS(subspace_sum(e1, diag), UsageError);
    CHECK_THROWS_AS(subspace_intersect(e1, diag), UsageError);
    CHECK_THROWS_AS(contains(diag, Vector(3)), UsageError);
}

TEST_CASE("is_direct_sum") {
    const auto f1 = Subspace::span(2, {e(2, 0)});
    const auto f2 = Subspace::span(2, {e(2, 1)});
    const auto f12 = Subspace::span(2, {vec({1, 1})});
    const auto full = Subspace::full(2);
    {
        const Subspace parts[] = {f1, f2};
        CHECK(is_direct_sum(parts, full));
    }
    {
        const Subspace parts[] = {f1, f12, f2};
        CHECK_FALSE(is_direct_sum(parts, full));
    }
    {
        const Subspace parts[] = {Subspace::zero(2), f12};
        CHECK(is_direct_sum(parts, f12));
    }
    {
        const Subspace parts[] = {f1, Subspace::zero(3)};
        CHECK_THROWS_AS(is_direct_sum(parts, full), UsageError);
    }
}

TEST_CASE("Grassmann identity on random subspace pairs") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const auto a = Subspace::row_space(random_matrix(rng, 1 + rng() % n, n, rng() % (n + 1)));
        // share a few vectors with a so the intersection is often nontrivial
        std::vector<Vector> brows;
        for (std::size_t i = 0; i < a.dim() && i < 1 + trial % 2; ++i) brows.push_back(a.basis_vector(i));
        const std::size_t extra = rng() % n;
        for (std::size_t i = 0; i < extra; ++i) brows.push_back(random_vector(rng, n));
        const auto b = Subspace::span(n, brows);
        const auto s = subspace_sum(a, b);
        const auto meet = subspace_intersect(a, b);
        CHECK(s.dim() + meet.dim() == a.dim() + b.dim());
        CHECK(is_subspace_of(meet, a));
        CHECK(is_subspace_of(meet, b));
        CHECK(is_subspace_of(a, s));
        CHECK(is_subspace_of(b, s));
    }
}

TEST_CASE("canonical basis shape") {
    std::mt19937_64 rng(3);
    const auto s = Subspace::row_space(random_matrix(rng, 5, 7, 3));
    REQUIRE(s.dim() == 3);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const auto p = s.pivots()[i];
        CHECK(s.basis()(i, p) == Rational(1));
        for (std::size_t r = 0; r < s.dim(); ++r) {
            if (r != i) CHECK(s.basis()(r, p).is_zero());
        }
        if (i > 0) CHECK(s.pivots()[i - 1] < p);
        for (std::size_t c = 0; c < p; ++c) CHECK(s.basis()(i, c).is_zero());
    }
}

TEST_CASE("subspace coordinates reconstruct members") {
    std::mt19937_64 rng(17);
    const auto s = Subspace::row_space(random_matrix(rng, 4, 6, 3));
    const Vector c = random_vector(rng, s.dim());
    Vector v(6);
    for (std::size_t i = 0; i < s.dim(); ++i) v = v + c[i] * s.basis_vector(i);
    const auto got = s.coordinates(v);
    REQUIRE(got.has_value());
    CHECK(*got == c);
}
