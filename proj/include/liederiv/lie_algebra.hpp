#ifndef LIEDERIV_LIE_ALGEBRA_HPP
#define LIEDERIV_LIE_ALGEBRA_HPP

#include "liederiv/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace liederiv {

/// [x_i, x_j] = ... + value * x_k + ...
struct StructureConstant {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rational value;

    friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

using SparseVector = std::vector<std::pair<std::size_t, Rational>>; // sorted by index

struct Violation {
    enum class Kind { Antisymmetry, Jacobi };
    Kind kind;
    std::size_t i, j, k;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Finite-dimensional Lie algebra given by structure constants on a labeled basis.
/// Only i < j products are stored; i > j follows from antisymmetry.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Accepts triples in either order (i<j or i>j). Inconsistent antisymmetric
    /// pairs or i == j entries throw PreconditionError; run validate_structure on
    /// the raw table first for a full report.
    LieAlgebra(std::size_t dim, std::vector<std::string> labels, std::span<const StructureConstant> table);

    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Canonical i < j triples ordered by (i, j, k).
    const std::vector<StructureConstant>& structure_constants() const { return table_; }

    /// [x_i, x_j] as a sparse coordinate vector.
    const SparseVector& basis_bracket(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }

    Vector bracket(const Vector& x, const Vector& y) const;
    /// [x, x_j] for a basis vector x_j.
    Vector bracket_with_basis(const Vector& x, std::size_t j) const;
    Vector basis_vector(std::size_t i) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<StructureConstant> table_;
    std::vector<SparseVector> products_;
};

/// Antisymmetry and Jacobi check of a raw table.
ValidationReport validate_structure(std::size_t dim, std::span<const StructureConstant> table);
ValidationReport validate_structure(const LieAlgebra& lie);

/// span{[u, v] : u in basis(a), v in basis(b)}
Subspace bracket_span(const LieAlgebra& lie, const Subspace& a, const Subspace& b);
Subspace derived_algebra(const LieAlgebra& lie);
Subspace center(const LieAlgebra& lie);

/// Column j holds the coordinates of [x, x_j].
Matrix ad_matrix(const LieAlgebra& lie, const Vector& x);

/// Subalgebra on the canonical basis of s. Throws PreconditionError naming a
/// violating pair when s is not closed under the bracket.
LieAlgebra restrict(const LieAlgebra& lie, const Subspace& s);

/// First basis pair (i < j) where the Leibniz rule fails, if any.
std::optional<std::pair<std::size_t, std::size_t>> leibniz_violation(const LieAlgebra& lie, const Matrix& d);
bool is_derivation(const LieAlgebra& lie, const Matrix& d);

} // namespace liederiv

#endif // LIEDERIV_LIE_ALGEBRA_HPP
