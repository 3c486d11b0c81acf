#ifndef LIEDERIV_PARABOLIC_HPP
#define LIEDERIV_PARABOLIC_HPP

#include "liederiv/lie_algebra.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liederiv {

/// Ordered block sizes of a standard parabolic of gl_n; sums to n.
struct BlockComposition {
    std::size_t n = 0;
    std::vector<std::size_t> blocks;

    /// Parses "3,2,1". Throws UsageError if malformed or if the blocks do not sum to n.
    static BlockComposition parse(std::string_view text, std::size_t n);
    /// Validates and returns the composition.
    static BlockComposition make(std::size_t n, std::vector<std::size_t> blocks);
    /// The composition whose selected simple roots are exactly `delta_prime` (1-based indices).
    static BlockComposition from_delta_prime(std::size_t n, const std::vector<std::size_t>& delta_prime);
    /// All 2^(n-1) compositions of n in lexicographic order of their cut sets.
    static std::vector<BlockComposition> all(std::size_t n);

    /// Block index (0-based) of matrix row/column i (0-based).
    std::size_t block_of(std::size_t i) const;
    std::string str() const;

    friend bool operator==(const BlockComposition&, const BlockComposition&) = default;
};

/// Root e_i - e_j of gl_n, stored with 0-based i != j.
struct Root {
    std::size_t i = 0;
    std::size_t j = 0;

    bool positive() const { return i < j; }
    Root negative() const { return {j, i}; }
    friend auto operator<=>(const Root&, const Root&) = default;
};

/// Type-A root data adapted to a block composition.
struct RootDatumA {
    std::size_t n = 0;
    /// delta_prime[k] is true iff simple root alpha_{k+1} (0-based k) lies in Delta'.
    std::vector<bool> delta_prime;
    /// Phi' in basis order.
    std::vector<Root> phi_prime;

    std::size_t simple_count() const { return n == 0 ? 0 : n - 1; }
    std::size_t selected_count() const;
    /// 1-based indices of Delta'.
    std::vector<std::size_t> delta_prime_indices() const;
    /// gamma in Phi' and -gamma in Phi' (the Levi roots).
    bool is_levi_root(const Root& r) const;
    bool contains(const Root& r) const;
};

struct ParabolicOptions {
    /// 0: parabolic of sl_n. 1: parabolic of gl_n. m > 1: gl_n with m - 1 extra central vectors.
    std::size_t center_dim = 1;
    /// Root vector normalization: x_(i,j) = upper_scale * e_ij for i < j, e_ij otherwise.
    Rational upper_scale = 1;
};

struct LanglandsDecomposition {
    Subspace levi;
    Subspace nilradical;
    Subspace levi_center;
    Subspace levi_semisimple;
};

struct AdaptedIndices {
    std::vector<std::size_t> center;
    std::vector<std::size_t> c;
    std::vector<std::size_t> derived;
};

/// Standard parabolic subalgebra q = g_Z + q_S of a reductive g with g_S = sl_n.
///
/// Basis order: central vectors (I, Z[1], ...), coroots H[k] = e_kk - e_{k+1,k+1},
/// then root vectors E[i,j] for (i,j) in Phi' in row-major order. All labels are 1-based.
class ParabolicAlgebra {
public:
    ParabolicAlgebra(BlockComposition composition, ParabolicOptions options = {});

    const LieAlgebra& algebra() const { return algebra_; }
    const BlockComposition& composition() const { return composition_; }
    const RootDatumA& root_datum() const { return roots_; }
    const ParabolicOptions& options() const { return options_; }
    std::size_t n() const { return composition_.n; }
    std::size_t dim() const { return algebra_.dim(); }
    std::size_t center_dim() const { return options_.center_dim; }

    /// Basis index of coroot h_k, k 1-based.
    std::size_t coroot_index(std::size_t k) const;
    /// Basis index of root vector x_gamma, if gamma is in Phi'.
    std::optional<std::size_t> root_index(const Root& gamma) const;
    const Rational& root_scale(const Root& gamma) const;

    /// Coordinates of the diagonal matrix diag(t) (trace zero) as an element of h.
    Vector cartan_element(const std::vector<Rational>& diagonal) const;
    /// Diagonal entries of an element of h. Throws PreconditionError if h is not in h.
    std::vector<Rational> cartan_diagonal(const Vector& h) const;

    /// Ambient coordinates of each basis vector: column b is basis vector b written in
    /// gl_n matrix units (row-major) followed by the extra central coordinates.
    const Matrix& ambient_embedding() const { return ambient_; }

    const Subspace& g_z() const { return g_z_; }
    const Subspace& cartan() const { return cartan_; }
    const Subspace& c() const { return c_; }
    const Subspace& t() const { return t_; }
    const Subspace& derived() const { return derived_; }
    const Subspace& semisimple_part() const { return q_s_; }
    const LanglandsDecomposition& langlands() const { return langlands_; }

private:
    void check_invariants() const;

    BlockComposition composition_;
    ParabolicOptions options_;
    RootDatumA roots_;
    LieAlgebra algebra_;
    std::vector<std::optional<std::size_t>> root_index_; // n*n, row-major
    Matrix ambient_;
    Subspace g_z_, cartan_, c_, t_, derived_, q_s_;
    LanglandsDecomposition langlands_;
};

LieAlgebra build_gl(std::size_t n);
LieAlgebra build_sl(std::size_t n);
ParabolicAlgebra build_standard_parabolic(const BlockComposition& composition, ParabolicOptions options = {});
LanglandsDecomposition langlands(const ParabolicAlgebra& q);
AdaptedIndices adapted_basis_indices(const ParabolicAlgebra& q);
/// gamma(h) = t_i - t_j for h = diag(t_1, ..., t_n) in h.
Rational root_value(const ParabolicAlgebra& q, const Root& gamma, const Vector& h);

} // namespace liederiv

#endif // LIEDERIV_PARABOLIC_HPP
