// Command-line front end: arrangement analysis, connection matrices,
// individual integrals, and the numerical verification suite.
//
// Exit codes: 0 success, 1 failed verification / internal error,
//             2 malformed input or invalid request, 3 genericity violation.

#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyparr/arrangement.hpp"
#include "hyparr/errors.hpp"
#include "hyparr/integrals.hpp"
#include "hyparr/io.hpp"
#include "hyparr/ode.hpp"
#include "hyparr/stokes.hpp"
#include "hyparr/verify.hpp"

namespace {

using hyparr::Arrangement;
using nlohmann::json;

void emit(const std::string& path, const json& j) {
    const std::string text = hyparr::dump_deterministic(j);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw hyparr::SchemaError("cannot open output file '" + path + "'");
    file << text;
}

json ode_json(const Arrangement& arr) {
    json out;
    const Eigen::VectorXd a = hyparr::ode_a_diagonal(arr);
    const Eigen::MatrixXd b = hyparr::ode_b_matrix(arr);
    json ja = json::array();
    for (int i = 0; i < a.size(); ++i) ja.push_back(a(i));
    out["a_diagonal"] = std::move(ja);
    json jb = json::array();
    for (int r = 0; r < b.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < b.cols(); ++c) row.push_back(b(r, c));
        jb.push_back(std::move(row));
    }
    out["b"] = std::move(jb);
    return out;
}

int run_analyze(const std::string& input, const std::string& out_path) {
    const Arrangement arr(hyparr::load_arrangement(input));
    emit(out_path, hyparr::arrangement_json(arr));
    return 0;
}

int run_stokes(const std::string& input, const std::string& out_path) {
    const Arrangement arr(hyparr::load_arrangement(input));
    json out = hyparr::stokes_json(arr, hyparr::stokes_matrices(arr));
    out["ode"] = ode_json(arr);
    emit(out_path, out);
    return 0;
}

int run_integrate(const std::string& input, const std::string& kind, int target, int component,
                  std::vector<int> denoms, const std::vector<double>& lambda, double quad_tol,
                  int max_nodes, const std::string& out_path) {
    const Arrangement arr(hyparr::load_arrangement(input));
    hyparr::Integrator integ(arr);
    hyparr::QuadOptions opt;
    opt.tol = quad_tol;
    opt.max_nodes = max_nodes;
    if (lambda.empty() || lambda.size() > 2)
        throw hyparr::SchemaError("--lambda takes one (real) or two (real imag) values");
    const std::complex<double> z(lambda[0], lambda.size() == 2 ? lambda[1] : 0.0);

    hyparr::QuadResult result;
    json out;
    if (kind == "chamber") {
        if (z.imag() != 0.0)
            throw hyparr::DomainError("chamber integrals require real lambda");
        if (target < 0 || target >= static_cast<int>(arr.chambers().size()))
            throw hyparr::SchemaError("--target chamber index out of range");
        if (denoms.empty()) {
            const int mv = arr.chambers()[static_cast<size_t>(target)].min_vertex;
            if (mv < 0)
                throw hyparr::DomainError(
                    "chamber has no minimizing vertex; pass --denoms explicitly");
            denoms = arr.vertices()[static_cast<size_t>(mv)].forms;
        }
        result = integ.chamber_integral(target, denoms, z.real(), opt);
        out["denominators"] = denoms;
    } else if (kind == "cone_plus" || kind == "cone_minus") {
        if (component < 0) component = target;
        result = kind == "cone_plus" ? integ.i_plus(target, component, z, opt)
                                     : integ.i_minus(target, component, z, opt);
        out["component"] = component;
    } else {
        throw hyparr::SchemaError("--kind must be chamber, cone_plus, or cone_minus");
    }
    out["kind"] = kind;
    out["target"] = target;
    out["lambda"] = hyparr::complex_json(z);
    out["result"] = hyparr::quad_json(result);
    emit(out_path, out);
    return 0;
}

int run_verify(const std::string& input, std::vector<std::string> checks,
               const hyparr::VerifyOptions& opt, const std::string& out_path) {
    const Arrangement arr(hyparr::load_arrangement(input));

    using CheckFn = hyparr::CheckReport (*)(const Arrangement&, hyparr::Integrator&,
                                            const hyparr::VerifyOptions&);
    const std::map<std::string, CheckFn> table = {
        {"decomposition", hyparr::check_decomposition},
        {"inversion", hyparr::check_inversion},
        {"stokes-c0", hyparr::check_stokes_c0},
        {"stokes-c1", hyparr::check_stokes_c1},
        {"ode", hyparr::check_ode},
        {"differentiation", hyparr::check_cohomological},
        {"asymptotics", hyparr::check_asymptotics},
        {"wronskian", hyparr::check_wronskian},
    };
    if (checks.empty())
        for (const auto& [name, fn] : table) checks.push_back(name);

    hyparr::Integrator integ(arr);
    std::vector<hyparr::CheckReport> reports;
    for (const std::string& name : checks) {
        const auto it = table.find(name);
        if (it == table.end()) throw hyparr::SchemaError("unknown check '" + name + "'");
        reports.push_back(it->second(arr, integ, opt));
    }

    bool all_passed = true;
    for (const hyparr::CheckReport& r : reports) {
        all_passed = all_passed && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name
                  << "  residual=" << r.max_residual << "  tolerance=" << r.tolerance;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    if (!out_path.empty()) emit(out_path, hyparr::reports_json(reports));
    return all_passed ? 0 : 1;
}

int run_demo(const std::string& which, int n, double a, double b, const std::string& out_path) {
    json out;
    if (which == "line") {
        if (n < 1 || n > 20) throw hyparr::SchemaError("--n must be in [1, 20]");
        out["k"] = 1;
        json forms = json::array();
        json weights = json::array();
        for (int j = 0; j < n; ++j) {
            forms.push_back({{"linear", json::array({1})}, {"constant", -j}});
            weights.push_back((3 + j) / 10.0);
        }
        out["forms"] = std::move(forms);
        out["weights"] = std::move(weights);
        out["f0"] = json::array({1});
    } else if (which == "triangle") {
        if (!(a > b && b > 0)) throw hyparr::SchemaError("requires a > b > 0");
        out["k"] = 2;
        out["forms"] = json::array({
            json{{"linear", json::array({1, 0})}, {"constant", 0}},
            json{{"linear", json::array({0, 1})}, {"constant", 0}},
            json{{"linear", json::array({1, 1})}, {"constant", -1}},
        });
        out["weights"] = json::array({0.3, 0.4, 0.5});
        out["f0"] = json::array({a, b});
    } else {
        throw hyparr::SchemaError("demo target must be 'line' or 'triangle'");
    }
    emit(out_path, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generic hyperplane-arrangement integrals: combinatorics, connection "
                 "matrices, quadrature, and verification"};
    app.require_subcommand(1);
    std::function<int()> action;

    // analyze
    {
        auto* sub = app.add_subcommand("analyze", "Combinatorial analysis of an arrangement");
        auto input = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("input", *input, "arrangement JSON file")->required();
        sub->add_option("-o,--output", *out, "write JSON here instead of stdout");
        sub->callback([&action, input, out] {
            action = [input, out] { return run_analyze(*input, *out); };
        });
    }
    // stokes
    {
        auto* sub = app.add_subcommand("stokes", "Connection matrices and ODE data");
        auto input = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        sub->add_option("input", *input, "arrangement JSON file")->required();
        sub->add_option("-o,--output", *out, "write JSON here instead of stdout");
        sub->callback([&action, input, out] {
            action = [input, out] { return run_stokes(*input, *out); };
        });
    }
    // integrate
    {
        auto* sub = app.add_subcommand("integrate", "Evaluate a single integral");
        auto input = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto kind = std::make_shared<std::string>("chamber");
        auto target = std::make_shared<int>(0);
        auto component = std::make_shared<int>(-1);
        auto denoms = std::make_shared<std::vector<int>>();
        auto lambda = std::make_shared<std::vector<double>>();
        auto quad_tol = std::make_shared<double>(1e-12);
        auto max_nodes = std::make_shared<int>(1536);
        sub->add_option("input", *input, "arrangement JSON file")->required();
        sub->add_option("--kind", *kind, "chamber | cone_plus | cone_minus");
        sub->add_option("--target", *target, "chamber index (chamber) or base vertex (cone)")
            ->required();
        sub->add_option("--component", *component, "component vertex (cone kinds)");
        sub->add_option("--denoms", *denoms, "denominator hyperplane indices (chamber kind)");
        sub->add_option("--lambda", *lambda, "evaluation point: re [im]")
            ->required()
            ->expected(1, 2);
        sub->add_option("--quad-tol", *quad_tol, "relative refinement target");
        sub->add_option("--max-nodes", *max_nodes, "per-axis node ceiling");
        sub->add_option("-o,--output", *out, "write JSON here instead of stdout");
        sub->callback([&action, input, out, kind, target, component, denoms, lambda, quad_tol,
                       max_nodes] {
            action = [=] {
                return run_integrate(*input, *kind, *target, *component, *denoms, *lambda,
                                     *quad_tol, *max_nodes, *out);
            };
        });
    }
    // verify
    {
        auto* sub = app.add_subcommand("verify", "Run the numerical verification suite");
        auto input = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto checks = std::make_shared<std::vector<std::string>>();
        auto opt = std::make_shared<hyparr::VerifyOptions>();
        sub->add_option("input", *input, "arrangement JSON file")->required();
        sub->add_option("--checks", *checks,
                        "subset of: decomposition inversion stokes-c0 stokes-c1 ode "
                        "differentiation asymptotics wronskian");
        sub->add_option("--tol", opt->tol, "pass threshold for relative residuals");
        sub->add_option("--quad-tol", opt->quad_tol, "quadrature refinement target");
        sub->add_option("--lambda", opt->lambdas, "positive evaluation points");
        sub->add_option("--lambda-negative", opt->lambdas_negative,
                        "negative evaluation points");
        sub->add_option("--asym-tol", opt->asym_tol, "asymptotics deviation bound");
        sub->add_option("-o,--output", *out, "write the JSON report here");
        sub->callback([&action, input, out, checks, opt] {
            action = [input, out, checks, opt] {
                return run_verify(*input, *checks, *opt, *out);
            };
        });
    }
    // demo
    {
        auto* sub = app.add_subcommand("demo", "Emit a ready-made arrangement input");
        auto which = std::make_shared<std::string>();
        auto n = std::make_shared<int>(3);
        auto a = std::make_shared<double>(2);
        auto b = std::make_shared<double>(1);
        auto out = std::make_shared<std::string>();
        sub->add_option("which", *which, "'line' (weighted points on a line) or 'triangle'")
            ->required();
        sub->add_option("--n", *n, "number of points (line demo)");
        sub->add_option("--a", *a, "first direction coefficient (triangle demo)");
        sub->add_option("--b", *b, "second direction coefficient (triangle demo)");
        sub->add_option("-o,--output", *out, "write JSON here instead of stdout");
        sub->callback([&action, which, n, a, b, out] {
            action = [which, n, a, b, out] { return run_demo(*which, *n, *a, *b, *out); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 0;
    } catch (const hyparr::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const hyparr::GenericityError& e) {
        std::cerr << "genericity violation: " << e.what() << "\n";
        for (const auto& v : e.report.violations) {
            std::cerr << "  " << v.kind << " [";
            for (size_t i = 0; i < v.indices.size(); ++i)
                std::cerr << (i ? ", " : "") << v.indices[i];
            std::cerr << "] " << v.detail << "\n";
        }
        return 3;
    } catch (const hyparr::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
