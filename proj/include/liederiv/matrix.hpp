#ifndef LIEDERIV_MATRIX_HPP
#define LIEDERIV_MATRIX_HPP

#include "liederiv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace liederiv {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row_view(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    void set_col(std::size_t c, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;

    /// Column-major flattening: images of basis vectors stacked. Fixed project-wide for End(V).
    Vector flatten() const;
    static Matrix unflatten(const Vector& flat, std::size_t n);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& s, Matrix m);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Commutator ab - ba of square matrices.
Matrix commutator(const Matrix& a, const Matrix& b);

} // namespace liederiv

#endif // LIEDERIV_MATRIX_HPP
