#include "liederiv/lie_algebra.hpp"

#include "liederiv/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace liederiv {

namespace {

void accumulate(std::map<std::size_t, Rational>& acc, std::size_t idx, const Rational& v) {
    auto [it, inserted] = acc.try_emplace(idx, v);
    if (!inserted) it->second += v;
}

SparseVector to_sparse(const std::map<std::size_t, Rational>& acc) {
    SparseVector out;
    for (const auto& [k, v] : acc) {
        if (!v.is_zero()) out.emplace_back(k, v);
    }
    return out;
}

// Dense products [x_i, x_j] from a raw table, keyed (i, j) in both orders as given.
std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> raw_entries(
    std::size_t dim, std::span<const StructureConstant> table) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> out;
    for (const auto& sc : table) {
        if (sc.i >= dim || sc.j >= dim || sc.k >= dim) throw UsageError("structure constant index out of range");
        auto [it, inserted] = out.try_emplace({sc.i, sc.j, sc.k}, sc.value);
        if (!inserted) it->second += sc.value;
    }
    return out;
}

std::string combination_label(const std::vector<std::string>& labels, const Vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const bool neg = v[i].sign() < 0;
        const Rational mag = neg ? -v[i] : v[i];
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        if (mag != Rational(1)) out += mag.str() + "*";
        out += labels[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels, std::span<const StructureConstant> table)
    : dim_(dim), labels_(std::move(labels)), products_(dim * dim) {
    if (labels_.empty()) {
        for (std::size_t i = 0; i < dim; ++i) labels_.push_back("x" + std::to_string(i));
    }
    if (labels_.size() != dim) throw UsageError("label count does not match dimension");

    const auto raw = raw_entries(dim, table);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> canon;
    for (const auto& [key, v] : raw) {
        auto [i, j, k] = key;
        if (i == j) {
            if (v.is_zero()) continue;
            throw PreconditionError("nonzero [x_" + std::to_string(i) + ", x_" + std::to_string(i) + "]");
        }
        auto mirror = raw.find({j, i, k});
        if (i < j) {
            if (mirror != raw.end() && mirror->second != -v) {
                throw PreconditionError("antisymmetry violated at (" + std::to_string(i) + "," + std::to_string(j) +
                                        "," + std::to_string(k) + ")");
            }
            if (!v.is_zero()) canon[{i, j, k}] = v;
        } else if (mirror == raw.end() && !v.is_zero()) {
            canon[{j, i, k}] = -v;
        }
    }

    std::vector<std::map<std::size_t, Rational>> acc(dim * dim);
    for (const auto& [key, v] : canon) {
        auto [i, j, k] = key;
        table_.push_back({i, j, k, v});
        accumulate(acc[i * dim + j], k, v);
        accumulate(acc[j * dim + i], k, -v);
    }
    for (std::size_t p = 0; p < acc.size(); ++p) products_[p] = to_sparse(acc[p]);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}, {}); }

Vector LieAlgebra::basis_vector(std::size_t i) const {
    if (i >= dim_) throw UsageError("basis index out of range");
    Vector v(dim_);
    v[i] = 1;
    return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw UsageError("elements do not belong to this algebra");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const Rational xy = x[i] * y[j];
            for (const auto& [k, c] : basis_bracket(i, j)) out[k].add_mul(xy, c);
        }
    }
    return out;
}

Vector LieAlgebra::bracket_with_basis(const Vector& x, std::size_t j) const {
    if (x.size() != dim_ || j >= dim_) throw UsageError("elements do not belong to this algebra");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [k, c] : basis_bracket(i, j)) out[k].add_mul(x[i], c);
    }
    return out;
}

ValidationReport validate_structure(std::size_t dim, std::span<const StructureConstant> table) {
    ValidationReport report;
    const auto raw = raw_entries(dim, table);
    for (const auto& [key, v] : raw) {
        auto [i, j, k] = key;
        if (i == j) {
            if (!v.is_zero()) report.violations.push_back({Violation::Kind::Antisymmetry, i, j, k, "c_ii^k = " + v.str()});
            continue;
        }
        if (i > j) continue;
        auto mirror = raw.find({j, i, k});
        if (mirror != raw.end() && mirror->second != -v) {
            report.violations.push_back({Violation::Kind::Antisymmetry, i, j, k,
                                         "c_ij^k = " + v.str() + " but c_ji^k = " + mirror->second.str()});
        }
    }
    if (!report.ok()) return report; // Jacobi is meaningless on an inconsistent table

    const LieAlgebra lie(dim, {}, table);
    const auto jacobi = validate_structure(lie);
    report.violations.insert(report.violations.end(), jacobi.violations.begin(), jacobi.violations.end());
    return report;
}

ValidationReport validate_structure(const LieAlgebra& lie) {
    ValidationReport report;
    const std::size_t n = lie.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                std::map<std::size_t, Rational> acc;
                auto add_term = [&](std::size_t a, std::size_t b, std::size_t c) {
                    // [[x_a, x_b], x_c]
                    for (const auto& [l, v] : lie.basis_bracket(a, b)) {
                        for (const auto& [m, w] : lie.basis_bracket(l, c)) accumulate(acc, m, v * w);
                    }
                };
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                const SparseVector residue = to_sparse(acc);
                if (!residue.empty()) {
                    std::ostringstream os;
                    os << "Jacobi sum has component " << residue.front().second << " on x_" << residue.front().first;
                    report.violations.push_back({Violation::Kind::Jacobi, i, j, k, os.str()});
                }
            }
        }
    }
    return report;
}

Subspace bracket_span(const LieAlgebra& lie, const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != lie.dim() || b.ambient_dim() != lie.dim()) {
        throw UsageError("subspace is not a subspace of this algebra");
    }
    SparseEchelon ech(lie.dim());
    for (std::size_t u = 0; u < a.dim(); ++u) {
        const Vector x = a.basis_vector(u);
        for (std::size_t v = 0; v < b.dim(); ++v) {
            ech.add_row(lie.bracket(x, b.basis_vector(v)));
            if (ech.rank() == lie.dim()) return Subspace::full(lie.dim());
        }
    }
    return ech.row_space();
}

Subspace derived_algebra(const LieAlgebra& lie) {
    const auto full = Subspace::full(lie.dim());
    return bracket_span(lie, full, full);
}

Subspace center(const LieAlgebra& lie) {
    // z is central iff sum_l z_l [x_l, x_i] = 0 for every i: one equation per (i, k).
    const std::size_t n = lie.dim();
    SparseEchelon ech(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::map<std::size_t, Rational>> eq(n);
        for (std::size_t l = 0; l < n; ++l) {
            for (const auto& [k, c] : lie.basis_bracket(l, i)) accumulate(eq[k], l, c);
        }
        for (const auto& e : eq) ech.add_row(to_sparse(e));
    }
    return ech.nullspace();
}

Matrix ad_matrix(const LieAlgebra& lie, const Vector& x) {
    Matrix m(lie.dim(), lie.dim());
    for (std::size_t j = 0; j < lie.dim(); ++j) m.set_col(j, lie.bracket_with_basis(x, j));
    return m;
}

LieAlgebra restrict(const LieAlgebra& lie, const Subspace& s) {
    if (s.ambient_dim() != lie.dim()) throw UsageError("subspace is not a subspace of this algebra");
    const std::size_t d = s.dim();
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d; ++a) labels.push_back(combination_label(lie.labels(), s.basis_vector(a)));

    std::vector<StructureConstant> table;
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            const auto coords = s.coordinates(lie.bracket(s.basis_vector(a), s.basis_vector(b)));
            if (!coords) {
                throw PreconditionError("subspace is not bracket-closed: [" + labels[a] + ", " + labels[b] +
                                        "] escapes");
            }
            for (std::size_t k = 0; k < d; ++k) {
                if (!(*coords)[k].is_zero()) table.push_back({a, b, k, (*coords)[k]});
            }
        }
    }
    return LieAlgebra(d, std::move(labels), table);
}

std::optional<std::pair<std::size_t, std::size_t>> leibniz_violation(const LieAlgebra& lie, const Matrix& d) {
    const std::size_t n = lie.dim();
    if (d.rows() != n || d.cols() != n) throw UsageError("endomorphism dimension does not match algebra");
    std::vector<Vector> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(d.col(i));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector lhs(n);
            for (const auto& [k, c] : lie.basis_bracket(i, j)) {
                for (std::size_t r = 0; r < n; ++r) {
                    if (!d(r, k).is_zero()) lhs[r].add_mul(c, d(r, k));
                }
            }
            // [d x_i, x_j] + [x_i, d x_j] = [d x_i, x_j] - [d x_j, x_i]
            const Vector rhs = lie.bracket_with_basis(images[i], j) - lie.bracket_with_basis(images[j], i);
            if (lhs != rhs) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

bool is_derivation(const LieAlgebra& lie, const Matrix& d) { return !leibniz_violation(lie, d).has_value(); }

} // namespace liederiv
