#ifndef LIEDERIV_DERIVATIONS_HPP
#define LIEDERIV_DERIVATIONS_HPP

#include "liederiv/parabolic.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace liederiv {

// Endomorphisms of an algebra of dimension d are flattened column-major into
// Q^(d*d) (see Matrix::flatten), so subspaces of End are ordinary Subspaces.

/// Der L, by solving the Leibniz system in the d^2 matrix unknowns.
Subspace derivation_algebra(const LieAlgebra& lie);

/// ad L = span{ad x_i}.
Subspace inner_derivations(const LieAlgebra& lie);
Subspace inner_derivations(const ParabolicAlgebra& q);

/// The ideal of maps q -> g_Z that kill [q,q], spanned by the elementary maps
/// sending one vector of g_Z + c to one vector of g_Z (adapted basis).
Subspace l_ideal(const ParabolicAlgebra& q);

/// Same ideal computed from its definition alone (image in the center, kernel
/// containing the derived algebra), without the adapted basis or any choice of c.
Subspace l_ideal_from_definition(const LieAlgebra& lie);

struct VerificationReport {
    std::size_t der_dim = 0;
    std::size_t l_dim = 0;
    std::size_t inner_dim = 0;
    std::size_t h1_dim = 0;
    std::size_t formula_dim = 0;
    bool direct_sum_ok = false;
    bool l_is_ideal_ok = false;
    bool inner_is_ideal_ok = false;
    bool formula_ok = false;
    std::optional<std::string> counterexample;

    bool all_ok() const { return direct_sum_ok && l_is_ideal_ok && inner_is_ideal_ok && formula_ok; }
};

/// Checks Der q = L (+) ad q: sum, trivial intersection, both summands ideals,
/// and the closed-form dimension.
VerificationReport verify_main_theorem(const ParabolicAlgebra& q);

struct RootScalar {
    Root root;
    Rational value;
};

/// Output of the first reduction step: D' = D - ad x.
struct RootReduction {
    Vector x;
    std::vector<RootScalar> d_gamma;
    Matrix d_prime;
};

struct DecompositionResult {
    Matrix l_part;
    Vector p;
    std::vector<RootScalar> d_gamma;
    std::vector<RootScalar> c_gamma;
    Vector x;
    Vector h_star;
};

/// Step one: reads d_gamma = a_gamma(h) / gamma(h) with h = e_ii - e_jj and
/// returns D' = D - ad x for x = -sum d_gamma x_gamma.
RootReduction reduce_root_components(const ParabolicAlgebra& q, const Matrix& d);

/// True iff d maps every root vector into its own root line, kills t and maps c into g_Z.
bool stabilizes_root_lines(const ParabolicAlgebra& q, const Matrix& d);

/// Writes a derivation D as L + ad p with L in the ideal L and p in q_S.
/// Throws PreconditionError if D is not a derivation, InvariantViolation if
/// the construction produces an L outside the ideal.
DecompositionResult constructive_decompose(const ParabolicAlgebra& q, const Matrix& d);

/// Independent route: coordinates of D in the concatenated bases of the ideal L
/// and ad q. Returns (L-part, inner part); nullopt if D is not in their sum.
std::optional<std::pair<Matrix, Matrix>> project_onto_l_ideal(const ParabolicAlgebra& q, const Matrix& d);

/// (n + |Delta| - |Delta'|) * n + dim q_S, with n the center dimension.
std::size_t dimension_formula(std::size_t center_dim, std::size_t simple_count, std::size_t selected_count,
                              std::size_t dim_qs);

/// dim Der q - dim ad q.
std::size_t h1_dimension(const ParabolicAlgebra& q);

/// Random element of a subspace of End with integer coordinates in [-9, 9]
/// against its canonical basis.
Matrix random_derivation(const Subspace& der, std::size_t dim, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Complexification, realized over Q as a doubled algebra with J^2 = -1.

struct Complexification {
    LieAlgebra algebra;  ///< basis x_1..x_d, Jx_1..Jx_d
    Matrix embedding;    ///< 2d x d, x_i -> x_i
    Matrix j;            ///< the complex structure
};

Complexification complexify(const LieAlgebra& lie);

/// span{v, Jv : v in s} inside the complexification.
Subspace complexified_image(const Complexification& cx, const Subspace& s);

/// D^(x + iy) = D(x) + i D(y). Throws PreconditionError unless d is a derivation.
Matrix extend_derivation(const LieAlgebra& lie, const Matrix& d);

// ---------------------------------------------------------------------------
// Sweep over compositions.

struct CaseReport {
    BlockComposition composition;
    std::size_t center_dim = 1;
    std::uint64_t seed = 0;
    VerificationReport theorem;
    std::size_t rounds = 0;
    std::size_t rounds_passed = 0;
    bool root_lines_ok = true;
    std::optional<std::string> counterexample;

    bool ok() const { return theorem.all_ok() && rounds_passed == rounds && root_lines_ok; }
};

/// Theorem check plus `rounds` seeded random decompositions, each compared with the projection route.
CaseReport verify_case(const ParabolicAlgebra& q, std::size_t rounds, std::uint64_t seed);

/// Every composition of every n in [1, max_n], results ordered by (n, composition).
std::vector<CaseReport> run_sweep(std::size_t max_n, std::size_t rounds, std::uint64_t seed,
                                  std::size_t center_dim = 1);

} // namespace liederiv

#endif // LIEDERIV_DERIVATIONS_HPP
