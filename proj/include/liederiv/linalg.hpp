#ifndef LIEDERIV_LINALG_HPP
#define LIEDERIV_LINALG_HPP

#include "liederiv/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace liederiv {

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Fraction-free (Bareiss) forward pass over the
/// integers, then back-substitution and normalization. Pivots are chosen
/// leftmost-nonzero in row order, so the result is fully deterministic.
RrefResult rref(const Matrix& m);

/// A linear subspace of Q^n, stored by its canonical (RREF) basis.
/// Two subspaces are equal iff their canonical bases are equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

    /// Span of arbitrary (possibly dependent) row vectors.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
    static Subspace full(std::size_t ambient_dim);
    /// span{e_i : i in indices}
    static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coordinates of v in the canonical basis, or nullopt if v is not in the subspace.
    std::optional<Vector> coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient_dim, RrefResult&& r);

    std::size_t ambient_dim_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}; dim = cols - rank.
Subspace nullspace(const Matrix& m);

/// Particular solution (free variables zero) of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);
/// a ⊆ b
bool is_subspace_of(const Subspace& a, const Subspace& b);
bool is_direct_sum(std::span<const Subspace> parts, const Subspace& whole);

/// Incremental sparse Gauss-Jordan elimination. Rows are kept fully reduced
/// against each other, so reducing a new row only touches free columns.
/// Used for the large, very sparse Leibniz systems.
class SparseEchelon {
public:
    using SparseRow = std::vector<std::pair<std::size_t, Rational>>; // sorted by column

    explicit SparseEchelon(std::size_t cols);

    /// Reduces `row` against the current basis and adds it if independent.
    /// Returns true if the rank grew.
    bool add_row(const SparseRow& row);
    bool add_row(const Vector& dense);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivot_rows_.size(); }

    /// The unique RREF of all rows added so far (zero rows dropped).
    RrefResult to_rref() const;
    /// Null space of the accumulated system.
    Subspace nullspace() const;
    /// Row space of the accumulated system.
    Subspace row_space() const;

private:
    std::size_t cols_;
    std::map<std::size_t, SparseRow> pivot_rows_; // pivot column -> normalized row
    std::vector<Rational> scratch_;
};

} // namespace liederiv

#endif // LIEDERIV_LINALG_HPP
