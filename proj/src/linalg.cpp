#include "liederiv/linalg.hpp"

#include "liederiv/errors.hpp"

#include <algorithm>

namespace liederiv {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix clear_denominators(const Matrix& m) {
    IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(r, c).is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m(r, c).raw();
            if (sgn(q) != 0) out[r][c] = q.get_num() * (l / q.get_den());
        }
    }
    return out;
}

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw UsageError("subspaces live in different ambient spaces");
}

std::vector<Vector> rows_of(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

Subspace nullspace_from_rref(const RrefResult& r, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> kernel;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
        kernel.push_back(std::move(v));
    }
    return Subspace::span(cols, kernel);
}

} // namespace

RrefResult rref(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix a = clear_denominators(m);

    // Fraction-free forward pass. Every division below is exact.
    std::vector<std::size_t> pivots;
    std::size_t k = 0;
    mpz_class prev = 1;
    mpz_class t;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t r = k;
        while (r < rows && a[r][col] == 0) ++r;
        if (r == rows) continue;
        if (r != k) std::swap(a[r], a[k]);
        const mpz_class& p = a[k][col];
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_mul(t.get_mpz_t(), a[i][j].get_mpz_t(), p.get_mpz_t());
                mpz_submul(t.get_mpz_t(), a[i][col].get_mpz_t(), a[k][j].get_mpz_t());
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[k][col];
        pivots.push_back(col);
        ++k;
    }

    // Back-substitution to reduced form.
    RrefResult out{Matrix(rows, cols), pivots.size(), pivots};
    Matrix& red = out.reduced;
    for (std::size_t i = 0; i < out.rank; ++i) {
        const mpz_class& p = a[i][pivots[i]];
        for (std::size_t j = pivots[i]; j < cols; ++j) {
            if (a[i][j] != 0) red(i, j) = Rational(a[i][j], p);
        }
    }
    for (std::size_t i = out.rank; i-- > 0;) {
        const std::size_t pc = pivots[i];
        for (std::size_t s = 0; s < i; ++s) {
            if (red(s, pc).is_zero()) continue;
            const Rational f = red(s, pc);
            for (std::size_t j = pc; j < cols; ++j) {
                if (!red(i, j).is_zero()) red(s, j).sub_mul(f, red(i, j));
            }
        }
    }
    return out;
}

Subspace::Subspace(std::size_t ambient_dim, RrefResult&& r) : ambient_dim_(ambient_dim), basis_(r.rank, ambient_dim) {
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < ambient_dim; ++c) basis_(i, c) = std::move(r.reduced(i, c));
    pivots_ = std::move(r.pivots);
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    return Subspace(ambient_dim, rref(Matrix::from_rows(vectors, ambient_dim)));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(m.cols(), rref(m)); }

Subspace Subspace::full(std::size_t ambient_dim) {
    return Subspace(ambient_dim, RrefResult{Matrix::identity(ambient_dim), ambient_dim, [&] {
                        std::vector<std::size_t> p(ambient_dim);
                        for (std::size_t i = 0; i < ambient_dim; ++i) p[i] = i;
                        return p;
                    }()});
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices) {
    std::vector<Vector> rows;
    for (auto i : indices) {
        if (i >= ambient_dim) throw UsageError("coordinate index out of range");
        Vector v(ambient_dim);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return span(ambient_dim, rows);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_dim_) throw UsageError("vector length does not match ambient dimension");
    Vector coords(dim());
    Vector residual(v);
    for (std::size_t i = 0; i < dim(); ++i) {
        coords[i] = residual[pivots_[i]];
        if (coords[i].is_zero()) continue;
        for (std::size_t c = pivots_[i]; c < ambient_dim_; ++c) {
            if (!basis_(i, c).is_zero()) residual[c].sub_mul(coords[i], basis_(i, c));
        }
    }
    if (!liederiv::is_zero(residual)) return std::nullopt;
    return coords;
}

Subspace nullspace(const Matrix& m) { return nullspace_from_rref(rref(m), m.cols()); }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw UsageError("right-hand side length does not match row count");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const RrefResult red = rref(aug);
    if (red.rank > 0 && red.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
    return x;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    std::vector<Vector> rows = rows_of(a.basis());
    for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return Subspace::span(a.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    const std::size_t n = a.ambient_dim();
    const std::size_t p = a.dim();
    const std::size_t q = b.dim();
    // Kernel of [A^T | -B^T]: pairs (u, w) with u·A = w·B.
    Matrix stacked(n, p + q);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < p; ++i) stacked(c, i) = a.basis()(i, c);
        for (std::size_t j = 0; j < q; ++j) stacked(c, p + j) = -b.basis()(j, c);
    }
    const Subspace kernel = nullspace(stacked);
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < kernel.dim(); ++k) {
        Vector v(n);
        for (std::size_t i = 0; i < p; ++i) {
            const Rational& u = kernel.basis()(k, i);
            if (u.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) v[c].add_mul(u, a.basis()(i, c));
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(n, rows);
}

bool contains(const Subspace& a, const Vector& v) { return a.coordinates(v).has_value(); }

bool is_subspace_of(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!contains(b, a.basis_vector(i))) return false;
    }
    return true;
}

bool is_direct_sum(std::span<const Subspace> parts, const Subspace& whole) {
    std::size_t total = 0;
    Subspace acc = Subspace::zero(whole.ambient_dim());
    for (const auto& part : parts) {
        require_same_ambient(part, whole);
        total += part.dim();
        acc = subspace_sum(acc, part);
    }
    return total == whole.dim() && acc == whole;
}

// ---------------------------------------------------------------------------

SparseEchelon::SparseEchelon(std::size_t cols) : cols_(cols), scratch_(cols) {}

bool SparseEchelon::add_row(const Vector& dense) {
    if (dense.size() != cols_) throw UsageError("row length mismatch");
    SparseRow row;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!dense[c].is_zero()) row.emplace_back(c, dense[c]);
    }
    return add_row(row);
}

bool SparseEchelon::add_row(const SparseRow& row) {
    if (row.empty()) return false;
    std::size_t lo = cols_;
    for (const auto& [c, v] : row) {
        if (c >= cols_) throw UsageError("sparse row column out of range");
        scratch_[c] += v;
        lo = std::min(lo, c);
    }

    // Pivot rows are fully reduced, so eliminating pivot column c only
    // changes free columns to the right of c.
    for (auto it = pivot_rows_.lower_bound(lo); it != pivot_rows_.end(); ++it) {
        const std::size_t pc = it->first;
        if (scratch_[pc].is_zero()) continue;
        const Rational f = scratch_[pc];
        for (const auto& [c, v] : it->second) scratch_[c].sub_mul(f, v);
    }

    std::size_t lead = cols_;
    for (std::size_t c = lo; c < cols_; ++c) {
        if (!scratch_[c].is_zero()) {
            lead = c;
            break;
        }
    }
    if (lead == cols_) return false;

    SparseRow fresh;
    const Rational inv = Rational(1) / scratch_[lead];
    for (std::size_t c = lead; c < cols_; ++c) {
        if (scratch_[c].is_zero()) continue;
        fresh.emplace_back(c, scratch_[c] * inv);
        scratch_[c] = 0;
    }

    for (auto& [pc, prow] : pivot_rows_) {
        auto hit = std::lower_bound(prow.begin(), prow.end(), lead,
                                    [](const auto& e, std::size_t c) { return e.first < c; });
        if (hit == prow.end() || hit->first != lead) continue;
        const Rational f = hit->second;
        SparseRow merged;
        merged.reserve(prow.size() + fresh.size());
        auto a = prow.begin();
        auto b = fresh.begin();
        while (a != prow.end() || b != fresh.end()) {
            if (b == fresh.end() || (a != prow.end() && a->first < b->first)) {
                merged.push_back(*a++);
            } else if (a == prow.end() || b->first < a->first) {
                merged.emplace_back(b->first, -(f * b->second));
                ++b;
            } else {
                Rational v = a->second;
                v.sub_mul(f, b->second);
                if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        prow = std::move(merged);
    }
    pivot_rows_.emplace(lead, std::move(fresh));
    return true;
}

RrefResult SparseEchelon::to_rref() const {
    RrefResult out{Matrix(pivot_rows_.size(), cols_), pivot_rows_.size(), {}};
    std::size_t i = 0;
    for (const auto& [pc, prow] : pivot_rows_) {
        out.pivots.push_back(pc);
        for (const auto& [c, v] : prow) out.reduced(i, c) = v;
        ++i;
    }
    return out;
}

Subspace SparseEchelon::nullspace() const { return nullspace_from_rref(to_rref(), cols_); }

Subspace SparseEchelon::row_space() const { return Subspace::row_space(to_rref().reduced); }

} // namespace liederiv
