#include "liederiv/derivations.hpp"

#include "liederiv/errors.hpp"

#include <future>
#include <map>
#include <sstream>

namespace liederiv {

namespace {

// Unknown d_{a,b} (row a, column b) sits at b * dim + a, matching Matrix::flatten.
std::size_t unknown(std::size_t dim, std::size_t row, std::size_t col) { return col * dim + row; }

void accumulate(std::map<std::size_t, Rational>& acc, std::size_t idx, const Rational& v) {
    auto [it, inserted] = acc.try_emplace(idx, v);
    if (!inserted) it->second += v;
}

SparseEchelon::SparseRow to_row(const std::map<std::size_t, Rational>& acc) {
    SparseEchelon::SparseRow row;
    for (const auto& [k, v] : acc) {
        if (!v.is_zero()) row.emplace_back(k, v);
    }
    return row;
}

std::string root_str(const Root& r) {
    return "(" + std::to_string(r.i + 1) + "," + std::to_string(r.j + 1) + ")";
}

Matrix elementary(std::size_t dim, std::size_t row, std::size_t col) {
    Matrix m(dim, dim);
    m(row, col) = 1;
    return m;
}

} // namespace

Subspace derivation_algebra(const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    SparseEchelon ech(n * n);
    std::vector<std::map<std::size_t, Rational>> eq(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (auto& e : eq) e.clear();
            // d([x_i, x_j]) - [d x_i, x_j] - [x_i, d x_j], coordinate k
            for (const auto& [l, c] : lie.basis_bracket(i, j)) {
                for (std::size_t k = 0; k < n; ++k) accumulate(eq[k], unknown(n, k, l), c);
            }
            for (std::size_t l = 0; l < n; ++l) {
                for (const auto& [k, c] : lie.basis_bracket(l, j)) accumulate(eq[k], unknown(n, l, i), -c);
                for (const auto& [k, c] : lie.basis_bracket(i, l)) accumulate(eq[k], unknown(n, l, j), -c);
            }
            for (const auto& e : eq) ech.add_row(to_row(e));
        }
    }
    return ech.nullspace();
}

Subspace inner_derivations(const LieAlgebra& lie) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < lie.dim(); ++i) rows.push_back(ad_matrix(lie, lie.basis_vector(i)).flatten());
    return Subspace::span(lie.dim() * lie.dim(), rows);
}

Subspace inner_derivations(const ParabolicAlgebra& q) { return inner_derivations(q.algebra()); }

Subspace l_ideal(const ParabolicAlgebra& q) {
    const auto idx = adapted_basis_indices(q);
    std::vector<Vector> rows;
    for (auto z : idx.center) {
        for (auto u : idx.center) rows.push_back(elementary(q.dim(), z, u).flatten());
        for (auto u : idx.c) rows.push_back(elementary(q.dim(), z, u).flatten());
    }
    return Subspace::span(q.dim() * q.dim(), rows);
}

Subspace l_ideal_from_definition(const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    const Subspace z = center(lie);
    const Subspace derived = derived_algebra(lie);
    SparseEchelon ech(n * n);
    // L(y) = 0 for y in [q,q]
    for (std::size_t b = 0; b < derived.dim(); ++b) {
        for (std::size_t r = 0; r < n; ++r) {
            SparseEchelon::SparseRow row;
            for (std::size_t c = 0; c < n; ++c) {
                if (!derived.basis()(b, c).is_zero()) row.emplace_back(unknown(n, r, c), derived.basis()(b, c));
            }
            ech.add_row(row);
        }
    }
    // w . L(x_j) = 0 for every w annihilating the center
    const Subspace annihilator = nullspace(z.basis());
    for (std::size_t a = 0; a < annihilator.dim(); ++a) {
        for (std::size_t col = 0; col < n; ++col) {
            SparseEchelon::SparseRow row;
            for (std::size_t r = 0; r < n; ++r) {
                if (!annihilator.basis()(a, r).is_zero()) row.emplace_back(unknown(n, r, col), annihilator.basis()(a, r));
            }
            ech.add_row(row);
        }
    }
    return ech.nullspace();
}

std::size_t dimension_formula(std::size_t center_dim, std::size_t simple_count, std::size_t selected_count,
                              std::size_t dim_qs) {
    if (selected_count > simple_count) throw UsageError("|Delta'| cannot exceed |Delta|");
    return (center_dim + simple_count - selected_count) * center_dim + dim_qs;
}

VerificationReport verify_main_theorem(const ParabolicAlgebra& q) {
    const LieAlgebra& lie = q.algebra();
    const std::size_t n = lie.dim();
    VerificationReport rep;

    const Subspace der = derivation_algebra(lie);
    const Subspace l = l_ideal(q);
    const Subspace inner = inner_derivations(q);
    rep.der_dim = der.dim();
    rep.l_dim = l.dim();
    rep.inner_dim = inner.dim();
    rep.h1_dim = der.dim() - inner.dim();
    rep.formula_dim = dimension_formula(q.center_dim(), q.root_datum().simple_count(),
                                        q.root_datum().selected_count(), q.semisimple_part().dim());
    rep.formula_ok = rep.formula_dim == rep.der_dim;

    auto witness = [&rep](const std::string& w) {
        if (!rep.counterexample) rep.counterexample = w;
    };

    const bool sum_ok = subspace_sum(l, inner) == der;
    const bool meet_ok = subspace_intersect(l, inner).dim() == 0;
    rep.direct_sum_ok = sum_ok && meet_ok;
    if (!sum_ok) witness("Der q != L + ad q");
    if (!meet_ok) witness("L and ad q intersect nontrivially");

    std::vector<Matrix> ders;
    for (std::size_t a = 0; a < der.dim(); ++a) ders.push_back(Matrix::unflatten(der.basis_vector(a), n));

    rep.l_is_ideal_ok = true;
    for (std::size_t b = 0; b < l.dim() && rep.l_is_ideal_ok; ++b) {
        const Matrix lb = Matrix::unflatten(l.basis_vector(b), n);
        for (std::size_t a = 0; a < ders.size(); ++a) {
            if (!contains(l, commutator(ders[a], lb).flatten())) {
                rep.l_is_ideal_ok = false;
                witness("[D_" + std::to_string(a) + ", L_" + std::to_string(b) + "] not in L");
                break;
            }
        }
    }

    rep.inner_is_ideal_ok = true;
    for (std::size_t i = 0; i < n && rep.inner_is_ideal_ok; ++i) {
        const Vector xi = lie.basis_vector(i);
        const Matrix ad_xi = ad_matrix(lie, xi);
        for (std::size_t a = 0; a < ders.size(); ++a) {
            const Matrix comm = commutator(ders[a], ad_xi);
            if (comm != ad_matrix(lie, ders[a] * xi) || !contains(inner, comm.flatten())) {
                rep.inner_is_ideal_ok = false;
                witness("[D_" + std::to_string(a) + ", ad " + lie.labels()[i] + "] != ad(D " + lie.labels()[i] + ")");
                break;
            }
        }
    }
    if (!rep.formula_ok) {
        witness("dim Der q = " + std::to_string(rep.der_dim) + " but formula gives " + std::to_string(rep.formula_dim));
    }
    return rep;
}

RootReduction reduce_root_components(const ParabolicAlgebra& q, const Matrix& d) {
    RootReduction out{Vector(q.dim()), {}, {}};
    for (const auto& gamma : q.root_datum().phi_prime) {
        std::vector<Rational> diag(q.n());
        diag[gamma.i] = 1;
        diag[gamma.j] = -1;
        const Vector h = q.cartan_element(diag);
        const std::size_t idx = *q.root_index(gamma);
        const Rational a_gamma = (d * h)[idx];
        const Rational d_gamma = a_gamma / root_value(q, gamma, h);
        out.d_gamma.push_back({gamma, d_gamma});
        out.x[idx] -= d_gamma;
    }
    out.d_prime = d - ad_matrix(q.algebra(), out.x);
    return out;
}

bool stabilizes_root_lines(const ParabolicAlgebra& q, const Matrix& d) {
    for (const auto& gamma : q.root_datum().phi_prime) {
        const std::size_t idx = *q.root_index(gamma);
        for (std::size_t r = 0; r < q.dim(); ++r) {
            if (r != idx && !d(r, idx).is_zero()) return false;
        }
    }
    for (std::size_t b = 0; b < q.t().dim(); ++b) {
        if (!is_zero(d * q.t().basis_vector(b))) return false;
    }
    for (std::size_t b = 0; b < q.c().dim(); ++b) {
        if (!contains(q.g_z(), d * q.c().basis_vector(b))) return false;
    }
    return true;
}

DecompositionResult constructive_decompose(const ParabolicAlgebra& q, const Matrix& d) {
    const LieAlgebra& lie = q.algebra();
    if (d.rows() != q.dim() || d.cols() != q.dim()) throw UsageError("derivation matrix has wrong dimension");
    if (const auto bad = leibniz_violation(lie, d)) {
        throw PreconditionError("not a derivation: Leibniz rule fails on (" + std::to_string(bad->first) + ", " +
                                std::to_string(bad->second) + ")");
    }

    RootReduction step1 = reduce_root_components(q, d);
    const Matrix& d_prime = step1.d_prime;

    DecompositionResult out;
    out.d_gamma = std::move(step1.d_gamma);
    out.x = std::move(step1.x);
    for (const auto& gamma : q.root_datum().phi_prime) {
        const std::size_t idx = *q.root_index(gamma);
        out.c_gamma.push_back({gamma, d_prime(idx, idx)});
    }

    // h* with alpha_k(h*) = c_{alpha_k} for every simple root.
    const std::size_t simple = q.root_datum().simple_count();
    Matrix cartan(simple, simple);
    Vector rhs(simple);
    for (std::size_t k = 0; k < simple; ++k) {
        const Root alpha{k, k + 1};
        for (std::size_t m = 0; m < simple; ++m) {
            cartan(k, m) = root_value(q, alpha, lie.basis_vector(q.coroot_index(m + 1)));
        }
        rhs[k] = d_prime(*q.root_index(alpha), *q.root_index(alpha));
    }
    const auto coeffs = solve(cartan, rhs);
    if (!coeffs) throw InvariantViolation("Cartan matrix system is inconsistent");
    out.h_star = Vector(q.dim());
    for (std::size_t m = 0; m < simple; ++m) out.h_star[q.coroot_index(m + 1)] = (*coeffs)[m];

    out.l_part = d_prime - ad_matrix(lie, out.h_star);
    out.p = out.x + out.h_star;

    auto fail = [&](const std::string& what) {
        std::ostringstream diag;
        diag << "d_gamma:";
        for (const auto& e : out.d_gamma) diag << ' ' << root_str(e.root) << '=' << e.value;
        diag << "; c_gamma:";
        for (const auto& e : out.c_gamma) diag << ' ' << root_str(e.root) << '=' << e.value;
        throw InvariantViolation(what, diag.str());
    };
    if (out.l_part + ad_matrix(lie, out.p) != d) fail("D != L + ad p");
    if (!contains(l_ideal(q), out.l_part.flatten())) fail("constructed L is not in the ideal L");
    if (!contains(q.semisimple_part(), out.p)) fail("p is not in q_S");
    return out;
}

std::optional<std::pair<Matrix, Matrix>> project_onto_l_ideal(const ParabolicAlgebra& q, const Matrix& d) {
    const std::size_t n = q.dim();
    const Subspace l = l_ideal(q);
    const Subspace inner = inner_derivations(q);
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < l.dim(); ++a) cols.push_back(l.basis_vector(a));
    for (std::size_t a = 0; a < inner.dim(); ++a) cols.push_back(inner.basis_vector(a));
    const auto coords = solve(Matrix::from_columns(cols, n * n), d.flatten());
    if (!coords) return std::nullopt;
    Vector l_flat(n * n);
    for (std::size_t a = 0; a < l.dim(); ++a) l_flat = l_flat + (*coords)[a] * cols[a];
    const Matrix l_part = Matrix::unflatten(l_flat, n);
    return std::pair{l_part, d - l_part};
}

std::size_t h1_dimension(const ParabolicAlgebra& q) {
    return derivation_algebra(q.algebra()).dim() - inner_derivations(q).dim();
}

Matrix random_derivation(const Subspace& der, std::size_t dim, std::mt19937_64& rng) {
    Vector flat(dim * dim);
    for (std::size_t a = 0; a < der.dim(); ++a) {
        const long coeff = static_cast<long>(rng() % 19) - 9;
        if (coeff == 0) continue;
        const Rational c = coeff;
        for (std::size_t k = 0; k < flat.size(); ++k) {
            if (!der.basis()(a, k).is_zero()) flat[k].add_mul(c, der.basis()(a, k));
        }
    }
    return Matrix::unflatten(flat, dim);
}

// ---------------------------------------------------------------------------

Complexification complexify(const LieAlgebra& lie) {
    const std::size_t d = lie.dim();
    std::vector<std::string> labels = lie.labels();
    for (std::size_t i = 0; i < d; ++i) labels.push_back("J" + lie.labels()[i]);
    // [x + iy, u + iv] = [x,u] - [y,v] + i([x,v] + [y,u])
    std::vector<StructureConstant> table;
    for (const auto& sc : lie.structure_constants()) {
        table.push_back({sc.i, sc.j, sc.k, sc.value});               // [x_i, x_j]
        table.push_back({sc.i, d + sc.j, d + sc.k, sc.value});       // [x_i, Jx_j]
        table.push_back({d + sc.i, sc.j, d + sc.k, sc.value});       // [Jx_i, x_j]
        table.push_back({d + sc.i, d + sc.j, sc.k, -sc.value});      // [Jx_i, Jx_j]
    }
    Complexification cx{LieAlgebra(2 * d, std::move(labels), table), Matrix(2 * d, d), Matrix(2 * d, 2 * d)};
    for (std::size_t i = 0; i < d; ++i) {
        cx.embedding(i, i) = 1;
        cx.j(d + i, i) = 1;
        cx.j(i, d + i) = -1;
    }
    return cx;
}

Subspace complexified_image(const Complexification& cx, const Subspace& s) {
    const std::size_t d = s.ambient_dim();
    if (cx.algebra.dim() != 2 * d) throw UsageError("subspace does not belong to the real form");
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < s.dim(); ++a) {
        const Vector v = cx.embedding * s.basis_vector(a);
        rows.push_back(v);
        rows.push_back(cx.j * v);
    }
    return Subspace::span(2 * d, rows);
}

Matrix extend_derivation(const LieAlgebra& lie, const Matrix& d) {
    if (const auto bad = leibniz_violation(lie, d)) {
        throw PreconditionError("not a derivation: Leibniz rule fails on (" + std::to_string(bad->first) + ", " +
                                std::to_string(bad->second) + ")");
    }
    const std::size_t n = lie.dim();
    Matrix ext(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            ext(r, c) = d(r, c);
            ext(n + r, n + c) = d(r, c);
        }
    }
    return ext;
}

// ---------------------------------------------------------------------------

CaseReport verify_case(const ParabolicAlgebra& q, std::size_t rounds, std::uint64_t seed) {
    CaseReport rep{q.composition(), q.center_dim(), seed, verify_main_theorem(q), rounds, 0, true, std::nullopt};
    rep.counterexample = rep.theorem.counterexample;

    const Subspace der = derivation_algebra(q.algebra());
    const Subspace l = l_ideal(q);
    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < rounds; ++r) {
        const Matrix d = random_derivation(der, q.dim(), rng);
        try {
            const RootReduction step1 = reduce_root_components(q, d);
            if (!stabilizes_root_lines(q, step1.d_prime)) {
                rep.root_lines_ok = false;
                if (!rep.counterexample) rep.counterexample = "round " + std::to_string(r) + ": D' does not stabilize the root lines";
                continue;
            }
            const auto res = constructive_decompose(q, d);
            const auto proj = project_onto_l_ideal(q, d);
            const bool ok = proj && proj->first == res.l_part && contains(l, res.l_part.flatten()) &&
                            contains(q.semisimple_part(), res.p) &&
                            res.l_part + ad_matrix(q.algebra(), res.p) == d;
            if (ok) {
                ++rep.rounds_passed;
            } else if (!rep.counterexample) {
                rep.counterexample = "round " + std::to_string(r) + ": decomposition disagrees with projection";
            }
        } catch (const InvariantViolation& e) {
            if (!rep.counterexample) rep.counterexample = "round " + std::to_string(r) + ": " + e.what();
        }
    }
    return rep;
}

std::vector<CaseReport> run_sweep(std::size_t max_n, std::size_t rounds, std::uint64_t seed, std::size_t center_dim) {
    if (max_n == 0) throw UsageError("max-n must be at least 1");
    std::vector<std::future<CaseReport>> jobs;
    std::uint64_t case_index = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (center_dim == 0 && n == 1) continue;
        for (auto& comp : BlockComposition::all(n)) {
            const std::uint64_t case_seed = seed * 1000003ULL + case_index++;
            jobs.push_back(std::async(std::launch::async, [comp, center_dim, rounds, case_seed] {
                const ParabolicAlgebra q(comp, ParabolicOptions{center_dim, 1});
                return verify_case(q, rounds, case_seed);
            }));
        }
    }
    std::vector<CaseReport> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

} // namespace liederiv
