#include "liederiv/json_io.hpp"

#include "liederiv/errors.hpp"

namespace liederiv::io {

namespace {

json roots_to_json(const std::vector<RootScalar>& table) {
    json out = json::array();
    for (const auto& e : table) out.push_back(json::array({e.root.i + 1, e.root.j + 1, to_json(e.value)}));
    return out;
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw UsageError("expected a rational string or integer, got " + j.dump());
}

Vector vector_from_json(const json& j) {
    if (!j.is_array()) throw UsageError("expected an array of rationals");
    Vector v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return v;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw UsageError("expected a nested array");
    std::vector<Vector> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(r));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return Matrix::from_rows(rows, cols);
}

json algebra_to_json(const LieAlgebra& lie) {
    json sc = json::array();
    for (const auto& e : lie.structure_constants()) sc.push_back(json::array({e.i, e.j, e.k, e.value.str()}));
    return json{{"dim", lie.dim()}, {"basis", lie.labels()}, {"sc", sc}};
}

LieAlgebra algebra_from_json(const json& j) {
    try {
        const auto dim = j.at("dim").get<std::size_t>();
        std::vector<std::string> labels;
        if (j.contains("basis")) labels = j.at("basis").get<std::vector<std::string>>();
        std::vector<StructureConstant> table;
        for (const auto& e : j.at("sc")) {
            if (!e.is_array() || e.size() != 4) throw UsageError("structure constant entries must be [i, j, k, value]");
            table.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::size_t>(),
                             rational_from_json(e[3])});
        }
        LieAlgebra lie(dim, std::move(labels), table);
        const auto report = validate_structure(lie);
        if (!report.ok()) {
            const auto& v = report.violations.front();
            throw PreconditionError("not a Lie algebra: Jacobi fails at (" + std::to_string(v.i) + ", " +
                                    std::to_string(v.j) + ", " + std::to_string(v.k) + ")");
        }
        return lie;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed algebra JSON: ") + e.what());
    }
}

json parabolic_to_json(const ParabolicAlgebra& q) {
    json out = algebra_to_json(q.algebra());
    const auto& L = q.langlands();
    std::vector<std::size_t> delta;
    for (std::size_t k = 1; k < q.n(); ++k) delta.push_back(k);
    out["n"] = q.n();
    out["blocks"] = q.composition().blocks;
    out["center_dim"] = q.center_dim();
    out["delta"] = delta;
    out["delta_prime"] = q.root_datum().delta_prime_indices();
    out["c_dim"] = q.c().dim();
    out["t_dim"] = q.t().dim();
    out["derived_dim"] = q.derived().dim();
    out["qs_dim"] = q.semisimple_part().dim();
    out["levi_dim"] = L.levi.dim();
    out["nilradical_dim"] = L.nilradical.dim();
    out["levi_center_dim"] = L.levi_center.dim();
    out["levi_semisimple_dim"] = L.levi_semisimple.dim();
    out["subspaces"] = json{
        {"g_z", to_json(q.g_z().basis())},
        {"cartan", to_json(q.cartan().basis())},
        {"c", to_json(q.c().basis())},
        {"t", to_json(q.t().basis())},
        {"derived", to_json(q.derived().basis())},
        {"semisimple_part", to_json(q.semisimple_part().basis())},
        {"levi", to_json(L.levi.basis())},
        {"nilradical", to_json(L.nilradical.basis())},
        {"levi_center", to_json(L.levi_center.basis())},
        {"levi_semisimple", to_json(L.levi_semisimple.basis())},
    };
    return out;
}

json derivation_to_json(const Matrix& d) { return json{{"dim", d.rows()}, {"matrix", to_json(d)}}; }

Matrix derivation_from_json(const json& j) {
    try {
        const auto dim = j.at("dim").get<std::size_t>();
        Matrix m = matrix_from_json(j.at("matrix"));
        if (m.rows() != dim || m.cols() != dim) throw UsageError("derivation matrix is not dim x dim");
        return m;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed derivation JSON: ") + e.what());
    }
}

json decomposition_to_json(const DecompositionResult& r) {
    return json{{"l_part", to_json(r.l_part)},
                {"p", to_json(r.p)},
                {"d_gamma", roots_to_json(r.d_gamma)},
                {"c_gamma", roots_to_json(r.c_gamma)},
                {"h_star", to_json(r.h_star)}};
}

json report_to_json(const VerificationReport& r) {
    json out{{"der_dim", r.der_dim},
             {"l_dim", r.l_dim},
             {"inner_dim", r.inner_dim},
             {"h1_dim", r.h1_dim},
             {"formula_dim", r.formula_dim},
             {"direct_sum_ok", r.direct_sum_ok},
             {"l_is_ideal_ok", r.l_is_ideal_ok},
             {"inner_is_ideal_ok", r.inner_is_ideal_ok},
             {"formula_ok", r.formula_ok}};
    out["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
    return out;
}

json case_to_json(const CaseReport& c) {
    json out = report_to_json(c.theorem);
    out["n"] = c.composition.n;
    out["blocks"] = c.composition.blocks;
    out["center_dim"] = c.center_dim;
    out["seed"] = c.seed;
    out["rounds"] = c.rounds;
    out["rounds_passed"] = c.rounds_passed;
    out["root_lines_ok"] = c.root_lines_ok;
    out["ok"] = c.ok();
    out["counterexample"] = c.counterexample ? json(*c.counterexample) : json(nullptr);
    return out;
}

} // namespace liederiv::io
