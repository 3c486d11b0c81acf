#include "liederiv/parabolic.hpp"

#include "liederiv/errors.hpp"

#include <charconv>
#include <map>
#include <tuple>

namespace liederiv {

namespace {

struct Entry {
    std::size_t r, c;
    Rational v;
};
using SparseMatrix = std::vector<Entry>;

std::map<std::pair<std::size_t, std::size_t>, Rational> commutator(const SparseMatrix& a, const SparseMatrix& b) {
    std::map<std::pair<std::size_t, std::size_t>, Rational> out;
    auto product = [&](const SparseMatrix& x, const SparseMatrix& y, int sign) {
        for (const auto& ex : x) {
            for (const auto& ey : y) {
                if (ex.c != ey.r) continue;
                Rational v = ex.v * ey.v;
                if (sign < 0) v = -v;
                auto [it, inserted] = out.try_emplace({ex.r, ey.c}, v);
                if (!inserted) it->second += v;
            }
        }
    };
    product(a, b, 1);
    product(b, a, -1);
    return out;
}

std::string root_label(std::size_t i, std::size_t j) {
    return "E[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

void require(bool ok, const char* what) {
    if (!ok) throw InvariantViolation(std::string("parabolic construction: ") + what);
}

} // namespace

// ---------------------------------------------------------------------------
// BlockComposition

BlockComposition BlockComposition::make(std::size_t n, std::vector<std::size_t> blocks) {
    if (n == 0) throw UsageError("n must be at least 1");
    std::size_t sum = 0;
    for (auto b : blocks) {
        if (b == 0) throw UsageError("block sizes must be positive");
        sum += b;
    }
    if (sum != n) {
        throw UsageError("blocks sum to " + std::to_string(sum) + ", expected n = " + std::to_string(n));
    }
    return BlockComposition{n, std::move(blocks)};
}

BlockComposition BlockComposition::parse(std::string_view text, std::size_t n) {
    std::vector<std::size_t> blocks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw UsageError("malformed block composition: '" + std::string(text) + "'");
        }
        blocks.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return make(n, std::move(blocks));
}

BlockComposition BlockComposition::from_delta_prime(std::size_t n, const std::vector<std::size_t>& delta_prime) {
    if (n == 0) throw UsageError("n must be at least 1");
    std::vector<bool> selected(n, false);
    for (auto k : delta_prime) {
        if (k == 0 || k >= n) throw UsageError("simple root index out of range: " + std::to_string(k));
        selected[k - 1] = true;
    }
    std::vector<std::size_t> blocks{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (selected[k]) ++blocks.back();
        else blocks.push_back(1);
    }
    return make(n, std::move(blocks));
}

std::vector<BlockComposition> BlockComposition::all(std::size_t n) {
    if (n == 0) throw UsageError("n must be at least 1");
    std::vector<BlockComposition> out;
    const std::size_t cuts = n - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cuts); ++mask) {
        // bit k set: alpha_{k+1} is in Delta'
        std::vector<std::size_t> dp;
        for (std::size_t k = 0; k < cuts; ++k) {
            if (mask & (std::size_t{1} << (cuts - 1 - k))) dp.push_back(k + 1);
        }
        out.push_back(from_delta_prime(n, dp));
    }
    return out;
}

std::size_t BlockComposition::block_of(std::size_t i) const {
    std::size_t start = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        start += blocks[b];
        if (i < start) return b;
    }
    throw UsageError("row index out of range");
}

std::string BlockComposition::str() const {
    std::string s;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) s += ",";
        s += std::to_string(blocks[b]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// RootDatumA

std::size_t RootDatumA::selected_count() const {
    std::size_t c = 0;
    for (bool b : delta_prime) c += b ? 1 : 0;
    return c;
}

std::vector<std::size_t> RootDatumA::delta_prime_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < delta_prime.size(); ++k) {
        if (delta_prime[k]) out.push_back(k + 1);
    }
    return out;
}

bool RootDatumA::contains(const Root& r) const {
    if (r.i == r.j || r.i >= n || r.j >= n) return false;
    if (r.positive()) return true;
    // i > j: allowed iff alpha_{j+1}, ..., alpha_i are all in Delta'
    for (std::size_t k = r.j; k < r.i; ++k) {
        if (!delta_prime[k]) return false;
    }
    return true;
}

bool RootDatumA::is_levi_root(const Root& r) const { return contains(r) && contains(r.negative()); }

// ---------------------------------------------------------------------------
// ParabolicAlgebra

ParabolicAlgebra::ParabolicAlgebra(BlockComposition composition, ParabolicOptions options)
    : composition_(BlockComposition::make(composition.n, std::move(composition.blocks))),
      options_(std::move(options)) {
    const std::size_t n = composition_.n;
    if (options_.center_dim == 0 && n == 1) throw UsageError("the parabolic of sl_1 is the zero algebra");
    if (options_.upper_scale.is_zero()) throw UsageError("root vector scale must be nonzero");

    roots_.n = n;
    roots_.delta_prime.assign(n - 1, false);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        roots_.delta_prime[k] = composition_.block_of(k) == composition_.block_of(k + 1);
    }

    // Basis as sparse n x n matrices; extra central vectors have no matrix part.
    std::vector<SparseMatrix> mats;
    std::vector<std::string> labels;
    const std::size_t extra = options_.center_dim > 1 ? options_.center_dim - 1 : 0;
    if (options_.center_dim >= 1) {
        SparseMatrix identity;
        for (std::size_t i = 0; i < n; ++i) identity.push_back({i, i, 1});
        mats.push_back(std::move(identity));
        labels.emplace_back("I");
        for (std::size_t z = 1; z <= extra; ++z) {
            mats.emplace_back();
            labels.push_back("Z[" + std::to_string(z) + "]");
        }
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        mats.push_back({{k, k, 1}, {k + 1, k + 1, -1}});
        labels.push_back("H[" + std::to_string(k + 1) + "]");
    }
    root_index_.assign(n * n, std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Root r{i, j};
            if (!roots_.contains(r)) continue;
            roots_.phi_prime.push_back(r);
            root_index_[i * n + j] = mats.size();
            mats.push_back({{i, j, root_scale(r)}});
            labels.push_back(root_label(i, j));
        }
    }

    const std::size_t dim = mats.size();
    const std::size_t first_coroot = options_.center_dim;

    ambient_ = Matrix(n * n + extra, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        for (const auto& e : mats[b]) ambient_(e.r * n + e.c, b) = e.v;
    }
    for (std::size_t z = 1; z <= extra; ++z) ambient_(n * n + z - 1, z) = 1;

    std::vector<StructureConstant> table;
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a + 1; b < dim; ++b) {
            const auto prod = commutator(mats[a], mats[b]);
            std::vector<Rational> diag(n);
            for (const auto& [pos, v] : prod) {
                if (v.is_zero()) continue;
                const auto [r, c] = pos;
                if (r == c) {
                    diag[r] = v;
                    continue;
                }
                const auto idx = root_index_[r * n + c];
                require(idx.has_value(), "bracket leaves the parabolic");
                table.push_back({a, b, *idx, v / root_scale({r, c})});
            }
            // Commutators are traceless, so the diagonal part lies in h.
            Rational partial = 0;
            for (std::size_t k = 0; k + 1 < n; ++k) {
                partial += diag[k];
                if (!partial.is_zero()) table.push_back({a, b, first_coroot + k, partial});
            }
        }
    }
    algebra_ = LieAlgebra(dim, std::move(labels), table);

    std::vector<std::size_t> center_idx, cartan_idx, c_idx, t_idx, derived_idx, qs_idx, levi_idx, nil_idx;
    for (std::size_t z = 0; z < options_.center_dim; ++z) center_idx.push_back(z);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const std::size_t idx = first_coroot + k;
        cartan_idx.push_back(idx);
        qs_idx.push_back(idx);
        levi_idx.push_back(idx);
        if (roots_.delta_prime[k]) {
            t_idx.push_back(idx);
            derived_idx.push_back(idx);
        } else {
            c_idx.push_back(idx);
        }
    }
    for (const auto& r : roots_.phi_prime) {
        const std::size_t idx = *root_index(r);
        derived_idx.push_back(idx);
        qs_idx.push_back(idx);
        (roots_.is_levi_root(r) ? levi_idx : nil_idx).push_back(idx);
    }
    g_z_ = Subspace::coordinate(dim, center_idx);
    cartan_ = Subspace::coordinate(dim, cartan_idx);
    c_ = Subspace::coordinate(dim, c_idx);
    t_ = Subspace::coordinate(dim, t_idx);
    derived_ = Subspace::coordinate(dim, derived_idx);
    q_s_ = Subspace::coordinate(dim, qs_idx);

    langlands_.levi = Subspace::coordinate(dim, levi_idx);
    langlands_.nilradical = Subspace::coordinate(dim, nil_idx);
    const LieAlgebra levi = restrict(algebra_, langlands_.levi);
    const Subspace levi_center_local = liederiv::center(levi);
    std::vector<Vector> lc;
    for (std::size_t a = 0; a < levi_center_local.dim(); ++a) {
        const Vector local = levi_center_local.basis_vector(a);
        Vector v(dim);
        for (std::size_t b = 0; b < local.size(); ++b) {
            if (local[b].is_zero()) continue;
            for (std::size_t c = 0; c < dim; ++c) v[c].add_mul(local[b], langlands_.levi.basis()(b, c));
        }
        lc.push_back(std::move(v));
    }
    langlands_.levi_center = Subspace::span(dim, lc);
    langlands_.levi_semisimple = bracket_span(algebra_, langlands_.levi, langlands_.levi);

    check_invariants();
}

void ParabolicAlgebra::check_invariants() const {
    const auto& q = algebra_;
    const auto full = Subspace::full(dim());
    const auto& L = langlands_;

    require(validate_structure(q).ok(), "structure constants violate the Lie axioms");
    const Subspace h_parts[] = {c_, t_};
    require(is_direct_sum(h_parts, cartan_), "h != c + t");
    const Subspace q_parts[] = {g_z_, c_, derived_};
    require(is_direct_sum(q_parts, full), "q != g_Z + c + [q,q]");
    require(bracket_span(q, full, full) == derived_, "constructed [q,q] disagrees with bracket span");
    require(liederiv::center(q) == g_z_, "center of q is not g_Z");
    require(is_subspace_of(bracket_span(q, full, L.nilradical), L.nilradical), "n is not an ideal");
    require(is_subspace_of(bracket_span(q, L.levi, L.levi), L.levi), "l is not a subalgebra");
    const Subspace derived_parts[] = {L.levi_semisimple, L.nilradical};
    require(is_direct_sum(derived_parts, derived_), "[q,q] != l_S + n");
    const Subspace levi_parts[] = {L.levi_center, L.levi_semisimple};
    require(is_direct_sum(levi_parts, L.levi), "l != z(l) + l_S");
    // The Levi center is another complement of t in h, of the same dimension as c.
    const Subspace alt_h_parts[] = {L.levi_center, t_};
    require(is_direct_sum(alt_h_parts, cartan_), "center of l is not a complement of t in h");
}

std::size_t ParabolicAlgebra::coroot_index(std::size_t k) const {
    if (k == 0 || k >= n()) throw UsageError("coroot index out of range");
    return options_.center_dim + k - 1;
}

std::optional<std::size_t> ParabolicAlgebra::root_index(const Root& gamma) const {
    if (gamma.i >= n() || gamma.j >= n()) return std::nullopt;
    return root_index_[gamma.i * n() + gamma.j];
}

const Rational& ParabolicAlgebra::root_scale(const Root& gamma) const {
    static const Rational one = 1;
    return gamma.positive() ? options_.upper_scale : one;
}

Vector ParabolicAlgebra::cartan_element(const std::vector<Rational>& diagonal) const {
    if (diagonal.size() != n()) throw UsageError("diagonal length must be n");
    Rational partial = 0;
    Vector h(dim());
    for (std::size_t k = 0; k < n(); ++k) {
        partial += diagonal[k];
        if (k + 1 < n()) h[coroot_index(k + 1)] = partial;
    }
    if (!partial.is_zero()) throw PreconditionError("diagonal is not traceless");
    return h;
}

std::vector<Rational> ParabolicAlgebra::cartan_diagonal(const Vector& h) const {
    if (h.size() != dim()) throw UsageError("element does not belong to this algebra");
    if (!contains(cartan_, h)) throw PreconditionError("element is not in the Cartan subalgebra");
    std::vector<Rational> t(n());
    Rational prev = 0;
    for (std::size_t k = 1; k < n(); ++k) {
        const Rational& a = h[coroot_index(k)];
        t[k - 1] = a - prev;
        prev = a;
    }
    t[n() - 1] = -prev;
    return t;
}

// ---------------------------------------------------------------------------

LieAlgebra build_gl(std::size_t n) {
    if (n == 0) throw UsageError("n must be at least 1");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) labels.push_back(root_label(i, j));
    // e_ij e_kl = delta_jk e_il
    std::vector<StructureConstant> table;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (std::size_t a = 0; a < n * n; ++a) {
        for (std::size_t b = a + 1; b < n * n; ++b) {
            const std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
            std::map<std::size_t, Rational> acc;
            if (j == k) acc[idx(i, l)] += 1;
            if (l == i) acc[idx(k, j)] -= 1;
            for (const auto& [c, v] : acc) {
                if (!v.is_zero()) table.push_back({a, b, c, v});
            }
        }
    }
    return LieAlgebra(n * n, std::move(labels), table);
}

LieAlgebra build_sl(std::size_t n) {
    return ParabolicAlgebra(BlockComposition::make(n, {n}), ParabolicOptions{0, 1}).algebra();
}

ParabolicAlgebra build_standard_parabolic(const BlockComposition& composition, ParabolicOptions options) {
    return ParabolicAlgebra(composition, std::move(options));
}

LanglandsDecomposition langlands(const ParabolicAlgebra& q) { return q.langlands(); }

AdaptedIndices adapted_basis_indices(const ParabolicAlgebra& q) {
    AdaptedIndices out;
    for (std::size_t z = 0; z < q.center_dim(); ++z) out.center.push_back(z);
    for (std::size_t k = 1; k < q.n(); ++k) {
        (q.root_datum().delta_prime[k - 1] ? out.derived : out.c).push_back(q.coroot_index(k));
    }
    for (const auto& r : q.root_datum().phi_prime) out.derived.push_back(*q.root_index(r));
    return out;
}

Rational root_value(const ParabolicAlgebra& q, const Root& gamma, const Vector& h) {
    if (gamma.i == gamma.j || gamma.i >= q.n() || gamma.j >= q.n()) throw UsageError("not a root of gl_n");
    const auto t = q.cartan_diagonal(h);
    return t[gamma.i] - t[gamma.j];
}

} // namespace liederiv
