#include "hyparr/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hyparr/errors.hpp"

namespace hyparr {

namespace {

using nlohmann::json;

Rat parse_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(static_cast<long long>(v.get<int64_t>()));
    if (v.is_number_unsigned()) return Rat(static_cast<unsigned long long>(v.get<uint64_t>()));
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (!std::isfinite(d)) throw SchemaError(where + ": number must be finite");
        return rat_from_double(d);
    }
    if (v.is_string()) {
        const auto parsed = rat_parse(v.get<std::string>());
        if (!parsed) throw SchemaError(where + ": cannot parse rational '" +
                                       v.get<std::string>() + "'");
        return *parsed;
    }
    throw SchemaError(where + ": expected a number or a rational string");
}

double parse_weight(const json& v, const std::string& where) {
    double d = 0;
    if (v.is_number()) {
        d = v.get<double>();
    } else if (v.is_string()) {
        const auto parsed = rat_parse(v.get<std::string>());
        if (!parsed) throw SchemaError(where + ": cannot parse weight '" +
                                       v.get<std::string>() + "'");
        d = rat_to_double(*parsed);
    } else {
        throw SchemaError(where + ": expected a number");
    }
    if (!(d > 0) || !std::isfinite(d))
        throw SchemaError(where + ": weights must be positive finite numbers");
    return d;
}

RatVec parse_rational_array(const json& v, size_t size, const std::string& where) {
    if (!v.is_array() || v.size() != size)
        throw SchemaError(where + ": expected an array of " + std::to_string(size) +
                          " rationals");
    RatVec out(size);
    for (size_t i = 0; i < size; ++i)
        out[i] = parse_rational(v[i], where + "[" + std::to_string(i) + "]");
    return out;
}

}  // namespace

ArrangementInput parse_arrangement(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("top-level value must be an object");
    for (const char* key : {"k", "forms", "weights", "f0"})
        if (!j.contains(key)) throw SchemaError(std::string("missing required key '") + key + "'");

    ArrangementInput in;
    const json& jk = j.at("k");
    if (!jk.is_number_integer() && !jk.is_number_unsigned())
        throw SchemaError("'k' must be an integer");
    in.k = jk.get<int>();
    if (in.k < 1) throw SchemaError("'k' must be at least 1");

    const json& jf = j.at("forms");
    if (!jf.is_array() || jf.empty()) throw SchemaError("'forms' must be a non-empty array");
    const size_t k = static_cast<size_t>(in.k);
    for (size_t i = 0; i < jf.size(); ++i) {
        const std::string where = "forms[" + std::to_string(i) + "]";
        const json& f = jf[i];
        if (!f.is_object() || !f.contains("linear") || !f.contains("constant"))
            throw SchemaError(where + ": expected {\"linear\": [...], \"constant\": ...}");
        AffineForm form;
        form.linear = parse_rational_array(f.at("linear"), k, where + ".linear");
        form.constant = parse_rational(f.at("constant"), where + ".constant");
        in.forms.push_back(std::move(form));
    }

    const json& jw = j.at("weights");
    if (!jw.is_array() || jw.size() != jf.size())
        throw SchemaError("'weights' must be an array matching the number of forms");
    for (size_t i = 0; i < jw.size(); ++i)
        in.weights.push_back(parse_weight(jw[i], "weights[" + std::to_string(i) + "]"));

    in.f0 = parse_rational_array(j.at("f0"), k, "f0");
    return in;
}

ArrangementInput load_arrangement(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw SchemaError("cannot open input file '" + path + "'");
    json j;
    try {
        file >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    return parse_arrangement(j);
}

nlohmann::json rational_json(const Rat& r) { return rat_to_string(r); }

nlohmann::json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

nlohmann::json arrangement_json(const Arrangement& arr) {
    json out;
    out["k"] = arr.k();
    out["n"] = arr.n();
    out["weights"] = arr.weights();

    json vertices = json::array();
    for (const Vertex& v : arr.vertices()) {
        json jv;
        jv["forms"] = v.forms;
        json point = json::array();
        for (const Rat& c : v.point) point.push_back(rational_json(c));
        jv["point"] = point;
        jv["f0"] = rational_json(v.f0_value);
        jv["f0_approx"] = rat_to_double(v.f0_value);
        jv["cone_signs"] = v.cone_signs;
        jv["chamber_above"] = v.dplus_chamber;
        jv["chamber_below"] = v.dminus_chamber;
        vertices.push_back(std::move(jv));
    }
    out["vertices"] = std::move(vertices);

    json edges = json::array();
    for (const Edge& e : arr.edges()) {
        json je;
        je["forms"] = e.forms;
        json dir = json::array();
        for (const Rat& c : e.direction) dir.push_back(rational_json(c));
        je["direction"] = dir;
        edges.push_back(std::move(je));
    }
    out["edges"] = std::move(edges);

    json chambers = json::array();
    for (const Chamber& c : arr.chambers()) {
        json jc;
        jc["signs"] = c.signs;
        jc["bounded"] = c.bounded;
        jc["bounded_below"] = c.bounded_below;
        jc["min_vertex"] = c.min_vertex;
        jc["closure_vertices"] = c.closure_vertices;
        chambers.push_back(std::move(jc));
    }
    out["chambers"] = std::move(chambers);
    out["bounded_below_chambers"] = arr.dplus();
    return out;
}

nlohmann::json stokes_json(const Arrangement& arr, const StokesMatrices& sm) {
    json out;
    const Eigen::MatrixXcd c0 = sm.c0_values(arr);
    const Eigen::MatrixXcd c1 = sm.c1_values(arr);
    const auto matrix_json = [](const Eigen::MatrixXcd& m) {
        json rows = json::array();
        for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    out["c0"] = matrix_json(c0);
    out["c1"] = matrix_json(c1);
    const auto pairs_json = [](const std::vector<std::pair<int, int>>& pairs) {
        json a = json::array();
        for (const auto& p : pairs) a.push_back(json::array({p.first, p.second}));
        return a;
    };
    out["c0_vanishing_pairs"] = pairs_json(sm.positive_exceptional_pairs);
    out["c1_vanishing_pairs"] = pairs_json(sm.negative_exceptional_pairs);
    return out;
}

nlohmann::json quad_json(const QuadResult& r) {
    json out;
    out["value"] = complex_json(r.value);
    out["error_estimate"] = r.error_estimate;
    out["nodes"] = r.nodes;
    return out;
}

nlohmann::json reports_json(const std::vector<CheckReport>& reports) {
    json out = json::array();
    for (const CheckReport& r : reports) {
        json jr;
        jr["name"] = r.name;
        jr["passed"] = r.passed;
        jr["max_residual"] = r.max_residual;
        jr["tolerance"] = r.tolerance;
        jr["detail"] = r.detail;
        out.push_back(std::move(jr));
    }
    return out;
}

std::string dump_deterministic(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace hyparr
