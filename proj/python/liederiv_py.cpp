#include "liederiv/derivations.hpp"
#include "liederiv/errors.hpp"
#include "liederiv/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>

namespace py = pybind11;
using namespace liederiv;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints, Fractions and
// "p/q" strings are accepted on the way in.
py::object to_py(const Rational& r) {
    // leaked on purpose: a static py::object would be destroyed after the interpreter
    static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*fraction)(r.str());
}

Rational from_py(const py::handle& h) {
    if (py::isinstance<py::float_>(h)) throw UsageError("floats are not accepted; pass int, Fraction or 'p/q'");
    return Rational::parse(py::str(h).cast<std::string>());
}

py::list vec_to_py(const Vector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

Vector vec_from_py(const py::sequence& s) {
    Vector v;
    v.reserve(s.size());
    for (const auto& x : s) v.push_back(from_py(x));
    return v;
}

py::list mat_to_py(const Matrix& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.append(vec_to_py(m.row(r)));
    return rows;
}

Matrix mat_from_py(const py::sequence& rows) {
    std::vector<Vector> vs;
    for (const auto& r : rows) vs.push_back(vec_from_py(r.cast<py::sequence>()));
    if (vs.empty()) return Matrix();
    for (const auto& v : vs) {
        if (v.size() != vs.front().size()) throw UsageError("ragged matrix");
    }
    return Matrix::from_rows(vs, vs.front().size());
}

py::object json_to_py(const io::json& j) {
    static auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(j.dump());
}

py::list basis_to_py(const Subspace& s, std::size_t dim) {
    py::list out;
    for (std::size_t a = 0; a < s.dim(); ++a) out.append(mat_to_py(Matrix::unflatten(s.basis_vector(a), dim)));
    return out;
}

ParabolicAlgebra make_parabolic(std::size_t n, const std::optional<std::variant<std::string, std::vector<std::size_t>>>& blocks,
                                std::size_t center_dim, const py::object& upper_scale) {
    ParabolicOptions opts;
    opts.center_dim = center_dim;
    opts.upper_scale = from_py(upper_scale);
    BlockComposition comp;
    if (!blocks) comp = BlockComposition::make(n, {n});
    else if (const auto* s = std::get_if<std::string>(&*blocks)) comp = BlockComposition::parse(*s, n);
    else comp = BlockComposition::make(n, std::get<std::vector<std::size_t>>(*blocks));
    return ParabolicAlgebra(comp, opts);
}

} // namespace

PYBIND11_MODULE(_liederiv, m) {
    m.doc() = "Exact derivation algebras of standard parabolic subalgebras of gl_n and sl_n.";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<ParabolicAlgebra>(m, "Parabolic")
        .def(py::init(&make_parabolic), py::arg("n"), py::arg("blocks") = py::none(), py::arg("center_dim") = 1,
             py::arg("upper_scale") = 1,
             "Block upper triangular subalgebra of gl_n. blocks is '3,2,1' or [3, 2, 1]; center_dim=0 gives sl_n.")
        .def_property_readonly("n", &ParabolicAlgebra::n)
        .def_property_readonly("dim", &ParabolicAlgebra::dim)
        .def_property_readonly("center_dim", &ParabolicAlgebra::center_dim)
        .def_property_readonly("blocks", [](const ParabolicAlgebra& q) { return q.composition().blocks; })
        .def_property_readonly("labels", [](const ParabolicAlgebra& q) { return q.algebra().labels(); })
        .def_property_readonly("delta_prime", [](const ParabolicAlgebra& q) { return q.root_datum().delta_prime_indices(); })
        .def("describe", [](const ParabolicAlgebra& q) { return json_to_py(io::parabolic_to_json(q)); },
             "Dimensions, root data and subspace bases as a dict.")
        .def("bracket",
             [](const ParabolicAlgebra& q, const py::sequence& x, const py::sequence& y) {
                 return vec_to_py(q.algebra().bracket(vec_from_py(x), vec_from_py(y)));
             })
        .def("ad", [](const ParabolicAlgebra& q, const py::sequence& x) {
            return mat_to_py(ad_matrix(q.algebra(), vec_from_py(x)));
        })
        .def("is_derivation", [](const ParabolicAlgebra& q, const py::sequence& d) {
            return is_derivation(q.algebra(), mat_from_py(d));
        })
        .def("derivation_basis", [](const ParabolicAlgebra& q) { return basis_to_py(derivation_algebra(q.algebra()), q.dim()); })
        .def("inner_basis", [](const ParabolicAlgebra& q) { return basis_to_py(inner_derivations(q), q.dim()); })
        .def("l_basis", [](const ParabolicAlgebra& q) { return basis_to_py(l_ideal(q), q.dim()); })
        .def("h1_dim", &h1_dimension)
        .def("verify", [](const ParabolicAlgebra& q) { return json_to_py(io::report_to_json(verify_main_theorem(q))); },
             "Checks Der = L + ad q as a direct sum of ideals and the dimension formula.")
        .def("decompose",
             [](const ParabolicAlgebra& q, const py::sequence& d) {
                 return json_to_py(io::decomposition_to_json(constructive_decompose(q, mat_from_py(d))));
             },
             "Writes a derivation as l_part + ad p; rationals come back as 'p/q' strings.")
        .def("__repr__", [](const ParabolicAlgebra& q) {
            return "Parabolic(n=" + std::to_string(q.n()) + ", blocks='" + q.composition().str() +
                   "', center_dim=" + std::to_string(q.center_dim()) + ")";
        });

    m.def("dimension_formula", &dimension_formula, py::arg("center_dim"), py::arg("simple_count"),
          py::arg("selected_count"), py::arg("dim_qs"));

    m.def(
        "verify_sweep",
        [](std::size_t max_n, std::size_t rounds, std::uint64_t seed, std::size_t center_dim) {
            std::vector<CaseReport> cases;
            {
                py::gil_scoped_release release;
                cases = run_sweep(max_n, rounds, seed, center_dim);
            }
            py::list out;
            for (const auto& c : cases) out.append(json_to_py(io::case_to_json(c)));
            return out;
        },
        py::arg("max_n"), py::arg("rounds") = 20, py::arg("seed") = 0, py::arg("center_dim") = 1);
}
