// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "liederiv/derivations.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace liederiv;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Subspace coroot_span(const ParabolicAlgebra& q, std::initializer_list<std::size_t> ks) {
    std::vector<std::size_t> idx;
    for (auto k : ks) idx.push_back(q.coroot_index(k));
    return Subspace::coordinate(q.dim(), idx);
}

Outcome golden() {
    Outcome o;
    const ParabolicAlgebra q(BlockComposition::parse("3,2,1", 6));
    o.require(q.dim() == 25, "dim q != 25");
    o.require(q.root_datum().delta_prime_indices() == std::vector<std::size_t>{1, 2, 4}, "Delta' != {1,2,4}");
    o.require(q.c() == coroot_span(q, {3, 5}), "c != span{h3,h5}");
    o.require(q.t() == coroot_span(q, {1, 2, 4}), "t != span{h1,h2,h4}");
    const std::size_t der = derivation_algebra(q.algebra()).dim();
    o.require(der == 27, "dim Der = " + std::to_string(der));
    o.require(dimension_formula(1, 5, 3, 24) == 27, "formula(1,5,3,24) != 27");
    o.require(q.semisimple_part().dim() == 24, "dim q_S != 24");
    if (o.ok) o.detail = "dim 25, Delta' {1,2,4}, c = span{h3,h5}, t = span{h1,h2,h4}, dim Der 27";
    return o;
}

std::vector<CaseReport> sweep_reports;

Outcome main_sweep() {
    Outcome o;
    sweep_reports = run_sweep(5, 20, 0);
    std::size_t count = 0;
    for (const auto& c : sweep_reports) {
        ++count;
        const auto& t = c.theorem;
        o.require(t.direct_sum_ok && t.l_is_ideal_ok && t.inner_is_ideal_ok && t.formula_ok,
                  "composition " + c.composition.str() + ": " + t.counterexample.value_or("flag false"));
    }
    o.require(count == 31, "expected 31 compositions, got " + std::to_string(count));
    if (o.ok) o.detail = "31 compositions (n <= 5): Der = L (+) ad q, both ideals, formula holds";
    return o;
}

Outcome corollaries() {
    Outcome o;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const auto& comp : BlockComposition::all(n)) {
            const ParabolicAlgebra g(comp);
            const LieAlgebra s = restrict(g.algebra(), g.semisimple_part());
            const Subspace der = derivation_algebra(s);
            o.require(der == inner_derivations(s), "sl_" + std::to_string(n) + " " + comp.str() + ": Der != ad");
            o.require(der.dim() == s.dim(), "sl_" + std::to_string(n) + " " + comp.str() + ": h1 != 0");
        }
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        const ParabolicAlgebra g(BlockComposition::make(n, {n}));
        const std::size_t d = derivation_algebra(g.algebra()).dim();
        o.require(d == n * n, "gl_" + std::to_string(n) + ": dim Der = " + std::to_string(d));
        o.require(d == 1 + inner_derivations(g).dim(), "gl_" + std::to_string(n) + ": Der != 1 + ad");
    }
    const ParabolicAlgebra b(BlockComposition::parse("1,1,1", 3));
    const std::size_t bd = derivation_algebra(b.algebra()).dim();
    o.require(bd == 8, "gl_3 Borel: dim Der = " + std::to_string(bd));
    o.require(l_ideal(b).dim() == 3 && inner_derivations(b).dim() == 5, "gl_3 Borel: L/ad split is not 3 + 5");
    if (o.ok) o.detail = "sl_n parabolics n <= 4 have h1 = 0; dim Der gl_n = n^2; gl_3 Borel 8 = 3 + 5";
    return o;
}

Outcome round_trips() {
    Outcome o;
    std::size_t rounds = 0;
    for (const auto& c : sweep_reports) {
        rounds += c.rounds_passed;
        o.require(c.rounds == 20 && c.rounds_passed == c.rounds,
                  "composition " + c.composition.str() + ": " + c.counterexample.value_or("round failed"));
        o.require(c.root_lines_ok, "composition " + c.composition.str() + ": midpoint fails root-line check");
    }
    o.require(!sweep_reports.empty(), "no sweep data");
    if (o.ok) o.detail = std::to_string(rounds) + " seeded decompositions exact, equal to the projection, midpoint ok";
    return o;
}

Outcome complexification() {
    Outcome o;
    const ParabolicAlgebra gl2(BlockComposition::parse("2", 2));
    ParabolicOptions semisimple;
    semisimple.center_dim = 0;
    const ParabolicAlgebra sl2(BlockComposition::parse("2", 2), semisimple);
    const ParabolicAlgebra borel(BlockComposition::parse("1,1,1", 3));
    for (const auto* q : {&gl2, &sl2, &borel}) {
        const auto& L = q->algebra();
        const std::string name = std::to_string(L.dim()) + "-dim fixture";
        const auto cx = complexify(L);
        o.require(center(cx.algebra) == complexified_image(cx, center(L)), name + ": center mismatch");
        o.require(cx.j * cx.j == Rational(-1) * Matrix::identity(cx.algebra.dim()), name + ": J^2 != -1");
        const Subspace real_form = Subspace::row_space(cx.embedding.transpose());
        const Subspace der = derivation_algebra(L);
        for (std::size_t a = 0; a < der.dim(); ++a) {
            const Matrix ext = extend_derivation(L, Matrix::unflatten(der.basis_vector(a), L.dim()));
            o.require(is_derivation(cx.algebra, ext), name + ": extension is not a derivation");
            for (std::size_t i = 0; i < real_form.dim(); ++i)
                o.require(contains(real_form, ext * real_form.basis_vector(i)), name + ": real form not stable");
        }
    }
    if (o.ok) o.detail = "gl_2, sl_2, gl_3 Borel: centers complexify, extensions are derivations preserving the real form";
    return o;
}

Outcome property_suites() {
    Outcome o;
    std::mt19937_64 rng(6);

    // Grassmann identity.
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 6;
        const auto a = Subspace::row_space(testing::random_matrix(rng, n, n, rng() % (n + 1)));
        const auto b = Subspace::row_space(testing::random_matrix(rng, n, n, rng() % (n + 1)));
        o.require(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim(), "Grassmann");
    }
    // rref canonicality against a textbook elimination and under row operations.
    for (int t = 0; t < 50; ++t) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        const Matrix m = testing::random_matrix(rng, r, c, rng() % (std::min(r, c) + 1));
        o.require(rref(m).reduced == testing::naive_rref(m).reduced, "rref differs from Gauss-Jordan");
        Matrix g = testing::random_matrix(rng, r, r, r);
        if (rref(g).rank == r) o.require(rref(g * m).reduced == rref(m).reduced, "rref not canonical");
    }
    // Structure validation on every fixture.
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const auto& comp : BlockComposition::all(n))
            o.require(validate_structure(ParabolicAlgebra(comp).algebra()).ok(), "Jacobi/antisymmetry " + comp.str());
    }
    const std::vector<StructureConstant> broken{{0, 1, 1, 1}, {0, 2, 2, 1}, {1, 2, 0, 1}};
    o.require(!validate_structure(3, broken).ok(), "Jacobi violation not detected");

    // Root coefficients of D on the Cartan: a_g(k) g(h) = a_g(h) g(k).
    for (const char* blocks : {"3,2,1", "1,1,1,1,1,1", "2,4"}) {
        const ParabolicAlgebra q(BlockComposition::parse(blocks, 6));
        const Subspace der = derivation_algebra(q.algebra());
        auto random_h = [&] {
            std::vector<Rational> diag(6);
            Rational sum = 0;
            for (std::size_t i = 0; i < 5; ++i) sum += diag[i] = testing::random_rational(rng);
            diag[5] = -sum;
            return q.cartan_element(diag);
        };
        for (int t = 0; t < 5; ++t) {
            const Matrix d = random_derivation(der, q.dim(), rng);
            const Vector h = random_h(), k = random_h();
            const Vector dh = d * h, dk = d * k;
            for (const auto& g : q.root_datum().phi_prime) {
                const std::size_t i = *q.root_index(g);
                o.require(dk[i] * root_value(q, g, h) == dh[i] * root_value(q, g, k), std::string("Cartan identity ") + blocks);
            }
        }
    }

    // Rescaling every upper root vector by 2 leaves (l_part, ad p) unchanged.
    for (const auto& [blocks, n] : {std::pair{"3,2,1", 6}, std::pair{"2,2", 4}, std::pair{"1,1,1", 3}}) {
        const ParabolicAlgebra q1(BlockComposition::parse(blocks, n));
        ParabolicOptions opts;
        opts.upper_scale = 2;
        const ParabolicAlgebra q2(BlockComposition::parse(blocks, n), opts);
        const std::size_t d = q1.dim();
        Matrix s = Matrix::identity(d), s_inv = Matrix::identity(d);
        for (const auto& g : q1.root_datum().phi_prime) {
            const std::size_t i = *q1.root_index(g);
            s(i, i) = q2.root_scale(g) / q1.root_scale(g);
            s_inv(i, i) = Rational(1) / s(i, i);
        }
        const Subspace der = derivation_algebra(q1.algebra());
        for (int t = 0; t < 5; ++t) {
            const Matrix d1 = random_derivation(der, d, rng);
            const auto r1 = constructive_decompose(q1, d1);
            const auto r2 = constructive_decompose(q2, s_inv * d1 * s);
            o.require(r1.l_part == s * r2.l_part * s_inv, std::string("l_part moved under rescaling ") + blocks);
            o.require(ad_matrix(q1.algebra(), r1.p) == s * ad_matrix(q2.algebra(), r2.p) * s_inv,
                      std::string("ad p moved under rescaling ") + blocks);
        }
    }
    if (o.ok) o.detail = "Grassmann, rref canonicality, structure validation, Cartan identity, rescaling invariance";
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"golden example", golden},
        {"main theorem sweep", main_sweep},
        {"corollaries", corollaries},
        {"decomposition round trips", round_trips},
        {"complexification", complexification},
        {"property suites", property_suites},
    };
    int failed = 0;
    int index = 1;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %-28s %s (%.1fs) %s\n", index++, name, o.ok ? "PASS" : "FAIL", secs,
                    o.detail.c_str());
        std::fflush(stdout);
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
