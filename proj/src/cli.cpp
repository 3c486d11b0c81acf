#include "liederiv/cli.hpp"

#include "liederiv/errors.hpp"
#include "liederiv/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace liederiv::cli {

namespace {

using io::json;

struct Request {
    std::size_t n = 0;
    std::string blocks;
    std::size_t extra_center = 0;
    bool semisimple = false;
    std::string input_path;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::size_t max_n = 5;
    std::size_t rounds = 20;
};

ParabolicAlgebra make_parabolic(const Request& req) {
    if (req.n == 0) throw UsageError("--n is required and must be at least 1");
    if (req.semisimple && req.extra_center > 0) throw UsageError("--semisimple and --extra-center are exclusive");
    const std::string blocks = req.blocks.empty() ? std::to_string(req.n) : req.blocks;
    ParabolicOptions opts;
    opts.center_dim = req.semisimple ? 0 : 1 + req.extra_center;
    return ParabolicAlgebra(BlockComposition::parse(blocks, req.n), opts);
}

void print_kv(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(22) << key << value << '\n';
}

std::string list_str(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// ASCII rendering of the block form of maps in the ideal L.
void print_l_block_form(std::ostream& out, const ParabolicAlgebra& q) {
    const auto idx = adapted_basis_indices(q);
    const std::string names[3] = {"g_Z(" + std::to_string(idx.center.size()) + ")",
                                  "c(" + std::to_string(idx.c.size()) + ")",
                                  "[q,q](" + std::to_string(idx.derived.size()) + ")"};
    const char* cells[3][3] = {{"*", "*", "0"}, {"0", "0", "0"}, {"0", "0", "0"}};
    out << "block form of L:\n" << std::setw(12) << "";
    for (const auto& nm : names) out << std::setw(12) << nm;
    out << '\n';
    for (int r = 0; r < 3; ++r) {
        out << std::setw(12) << names[r];
        for (int c = 0; c < 3; ++c) out << std::setw(12) << cells[r][c];
        out << '\n';
    }
}

int cmd_describe(const Request& req, std::ostream& out) {
    const ParabolicAlgebra q = make_parabolic(req);
    const json dump = io::parabolic_to_json(q);
    if (req.format == "json") {
        out << dump.dump(2) << '\n';
        return kOk;
    }
    print_kv(out, "n", std::to_string(q.n()));
    print_kv(out, "blocks", q.composition().str());
    print_kv(out, "dim", std::to_string(q.dim()));
    print_kv(out, "delta_prime", list_str(q.root_datum().delta_prime_indices()));
    for (const char* key : {"center_dim", "c_dim", "t_dim", "derived_dim", "qs_dim", "levi_dim", "nilradical_dim",
                            "levi_center_dim", "levi_semisimple_dim"}) {
        print_kv(out, key, dump.at(key).dump());
    }
    out << "basis:";
    for (const auto& l : q.algebra().labels()) out << ' ' << l;
    out << '\n';
    return kOk;
}

int cmd_der(const Request& req, std::ostream& out) {
    const ParabolicAlgebra q = make_parabolic(req);
    const VerificationReport rep = verify_main_theorem(q);
    if (req.format == "json") {
        out << io::report_to_json(rep).dump(2) << '\n';
    } else {
        print_kv(out, "der_dim", std::to_string(rep.der_dim));
        print_kv(out, "l_dim", std::to_string(rep.l_dim));
        print_kv(out, "inner_dim", std::to_string(rep.inner_dim));
        print_kv(out, "h1_dim", std::to_string(rep.h1_dim));
        print_kv(out, "formula_dim", std::to_string(rep.formula_dim));
        print_kv(out, "formula_ok", rep.formula_ok ? "true" : "false");
        print_kv(out, "direct_sum_ok", rep.direct_sum_ok ? "true" : "false");
        print_kv(out, "l_is_ideal_ok", rep.l_is_ideal_ok ? "true" : "false");
        print_kv(out, "inner_is_ideal_ok", rep.inner_is_ideal_ok ? "true" : "false");
        print_l_block_form(out, q);
    }
    return rep.all_ok() ? kOk : kViolation;
}

int cmd_h1(const Request& req, std::ostream& out) {
    const ParabolicAlgebra q = make_parabolic(req);
    const std::size_t h1 = h1_dimension(q);
    if (req.format == "json") out << json{{"h1_dim", h1}}.dump(2) << '\n';
    else print_kv(out, "h1_dim", std::to_string(h1));
    return kOk;
}

int cmd_decompose(const Request& req, std::ostream& out, std::ostream& err) {
    const ParabolicAlgebra q = make_parabolic(req);
    if (req.input_path.empty()) throw UsageError("decompose needs --input <derivation.json>");
    std::ifstream in(req.input_path);
    if (!in) throw UsageError("cannot open " + req.input_path);
    json payload;
    try {
        payload = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
    const Matrix d = io::derivation_from_json(payload);
    if (d.rows() != q.dim()) {
        throw UsageError("derivation has dim " + std::to_string(d.rows()) + " but the algebra has dim " +
                         std::to_string(q.dim()));
    }
    if (const auto bad = leibniz_violation(q.algebra(), d)) {
        err << "error: input is not a derivation; Leibniz rule fails on basis pair (" << bad->first << ", "
            << bad->second << ") = (" << q.algebra().labels()[bad->first] << ", "
            << q.algebra().labels()[bad->second] << ")\n";
        return kInvalidInput;
    }
    const DecompositionResult res = constructive_decompose(q, d);
    if (req.format == "json") {
        out << io::decomposition_to_json(res).dump(2) << '\n';
        return kOk;
    }
    auto show = [&](const std::string& name, const Vector& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            s += (s.empty() ? "" : " + ") + v[i].str() + "*" + q.algebra().labels()[i];
        }
        print_kv(out, name, s.empty() ? "0" : s);
    };
    show("p", res.p);
    show("h_star", res.h_star);
    print_kv(out, "l_part_is_zero", res.l_part.is_zero() ? "true" : "false");
    out << "l_part:\n";
    for (std::size_t r = 0; r < res.l_part.rows(); ++r) {
        for (std::size_t c = 0; c < res.l_part.cols(); ++c) out << (c ? " " : "  ") << res.l_part(r, c);
        out << '\n';
    }
    return kOk;
}

int cmd_verify(const Request& req, std::ostream& out, std::ostream& err, bool single_case) {
    std::vector<CaseReport> cases;
    if (single_case) {
        cases.push_back(verify_case(make_parabolic(req), req.rounds, req.seed));
    } else {
        if (req.max_n == 0) throw UsageError("--max-n must be at least 1");
        cases = run_sweep(req.max_n, req.rounds, req.seed, req.semisimple ? 0 : 1 + req.extra_center);
    }
    std::size_t passed = 0;
    for (const auto& c : cases) passed += c.ok() ? 1 : 0;
    const bool all_ok = passed == cases.size();

    if (req.format == "json") {
        json rows = json::array();
        for (const auto& c : cases) rows.push_back(io::case_to_json(c));
        out << json{{"cases", rows},
                    {"summary", {{"cases", cases.size()}, {"passed", passed}, {"all_ok", all_ok}, {"seed", req.seed}}}}
                   .dump(2)
            << '\n';
    } else {
        out << std::left << std::setw(4) << "n" << std::setw(14) << "blocks" << std::setw(8) << "der" << std::setw(6)
            << "L" << std::setw(7) << "ad" << std::setw(5) << "h1" << std::setw(10) << "rounds" << "ok\n";
        for (const auto& c : cases) {
            out << std::setw(4) << c.composition.n << std::setw(14) << c.composition.str() << std::setw(8)
                << c.theorem.der_dim << std::setw(6) << c.theorem.l_dim << std::setw(7) << c.theorem.inner_dim
                << std::setw(5) << c.theorem.h1_dim << std::setw(10)
                << (std::to_string(c.rounds_passed) + "/" + std::to_string(c.rounds)) << (c.ok() ? "yes" : "NO")
                << '\n';
        }
        out << passed << "/" << cases.size() << " cases passed\n";
    }
    if (!all_ok) {
        for (const auto& c : cases) {
            if (!c.ok()) err << "witness: " << io::case_to_json(c).dump() << '\n';
        }
        return kViolation;
    }
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derivation algebras of parabolic subalgebras of gl_n / sl_n, in exact arithmetic"};
    app.require_subcommand(1);
    Request req;

    auto add_algebra_opts = [&req](CLI::App* sub, bool required) {
        auto* n = sub->add_option("--n", req.n, "matrix size n");
        if (required) n->required();
        sub->add_option("--blocks", req.blocks, "block composition, e.g. 3,2,1 (default: one block)");
        sub->add_option("--extra-center", req.extra_center, "extra central basis vectors beyond I");
        sub->add_flag("--semisimple", req.semisimple, "use the sl_n parabolic (no center)");
        sub->add_option("--format", req.format, "output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* describe = app.add_subcommand("describe", "dump the parabolic, its root data and subspaces");
    add_algebra_opts(describe, true);
    auto* der = app.add_subcommand("der", "derivation algebra dimensions and theorem check");
    add_algebra_opts(der, true);
    auto* h1 = app.add_subcommand("h1", "dim H^1(q; q) = dim Der q - dim ad q");
    add_algebra_opts(h1, true);
    auto* decompose = app.add_subcommand("decompose", "write a derivation as L + ad p");
    add_algebra_opts(decompose, true);
    decompose->add_option("--input", req.input_path, "derivation JSON {\"dim\", \"matrix\"}")->required();
    auto* verify = app.add_subcommand("verify", "sweep all compositions up to --max-n (or one case via --n)");
    add_algebra_opts(verify, false);
    verify->add_option("--max-n", req.max_n, "largest n in the sweep (default 5)");
    verify->add_option("--rounds", req.rounds, "random decompositions per case (default 20)");
    verify->add_option("--seed", req.seed, "seed for the random derivations (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*describe) return cmd_describe(req, out);
        if (*der) return cmd_der(req, out);
        if (*h1) return cmd_h1(req, out);
        if (*decompose) return cmd_decompose(req, out, err);
        if (*verify) return cmd_verify(req, out, err, req.n != 0);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        if (!e.diagnostics().empty()) err << e.diagnostics() << '\n';
        return kViolation;
    }
    return kUsage;
}

} // namespace liederiv::cli
