#include "hyparr/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hyparr/lp.hpp"

namespace hyparr {

std::vector<IndexSet> index_subsets(int n, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    IndexSet cur(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

namespace {

RatMat linear_rows(const ArrangementInput& in, const IndexSet& rows) {
    RatMat m(rows.size(), in.k);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < in.k; ++j) m(i, j) = in.forms[rows[i]].linear[j];
    return m;
}

/// Solve the k x k system f_j(z) = 0, j in X. Requires independence.
RatVec vertex_point(const ArrangementInput& in, const IndexSet& X) {
    RatMat m = linear_rows(in, X);
    RatVec b(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) b[i] = -in.forms[X[i]].constant;
    return solve(std::move(m), std::move(b));
}

}  // namespace

GenericityReport Arrangement::check_genericity(const ArrangementInput& in) {
    GenericityReport rep;
    const int n = static_cast<int>(in.forms.size()), k = in.k;
    auto add = [&rep](std::string kind, IndexSet idx, std::string detail) {
        rep.ok = false;
        rep.violations.push_back({std::move(kind), std::move(idx), std::move(detail)});
    };

    // (a) every k linear parts independent
    for (const auto& X : index_subsets(n, k))
        if (det(linear_rows(in, X)) == 0)
            add("dependent_linear_parts", X, "k linear parts are linearly dependent");
    if (!rep.ok) return rep;  // later checks assume (a)

    // (b) no k+1 hyperplanes through one point
    for (const auto& S : index_subsets(n, k + 1)) {
        IndexSet head(S.begin(), S.begin() + k);
        RatVec p = vertex_point(in, head);
        if (in.forms[S[k]].eval(p) == 0)
            add("overdetermined_intersection", S, "k+1 hyperplanes share a point");
    }

    // (d) f0 nonconstant along every edge line
    for (const auto& U : index_subsets(n, k - 1)) {
        RatVec d = kernel_direction(linear_rows(in, U));
        if (d.empty() || dot(in.f0, d) == 0)
            add("f0_constant_on_edge", U, "f0 vanishes on an edge direction");
    }
    if (!rep.ok) {
        // f0 degenerate data makes the vertex-value check uninformative.
        return rep;
    }

    // (c) f0 distinct on vertices
    auto subsets = index_subsets(n, k);
    std::vector<std::pair<Rat, std::size_t>> vals;
    vals.reserve(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        vals.emplace_back(dot(in.f0, vertex_point(in, subsets[i])), i);
    std::sort(vals.begin(), vals.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        if (vals[i].first == vals[i + 1].first) {
            IndexSet joined = subsets[vals[i].second];
            for (int j : subsets[vals[i + 1].second]) joined.push_back(j);
            std::sort(joined.begin(), joined.end());
            joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
            add("f0_vertex_collision", joined, "two vertices share an f0 value");
        }
    }
    return rep;
}

std::optional<RatVec> region_interior_point(const ArrangementInput& in,
                                            const std::vector<int>& signs,
                                            std::size_t active_count) {
    // maximize delta s.t. sign_j f_j(x) >= delta (j < active_count), delta <= 1
    const int k = in.k;
    const std::size_t m = active_count + 1;
    RatMat A(m, k + 1);
    RatVec b(m), c(static_cast<std::size_t>(k) + 1, Rat(0));
    for (std::size_t j = 0; j < active_count; ++j) {
        for (int i = 0; i < k; ++i) A(j, i) = -signs[j] * in.forms[j].linear[i];
        A(j, k) = 1;
        b[j] = signs[j] * in.forms[j].constant;
    }
    A(active_count, k) = 1;
    b[active_count] = 1;
    c[k] = 1;
    LpResult r = lp_maximize(A, b, c);
    if (r.status != LpResult::Status::kOptimal || r.objective <= 0) return std::nullopt;
    RatVec x(r.x.begin(), r.x.begin() + k);
    return x;
}

Arrangement::Arrangement(ArrangementInput in) : in_(std::move(in)) {
    const int n = static_cast<int>(in_.forms.size());
    if (in_.k < 1 || in_.k > 6) throw SchemaError("k must be between 1 and 6");
    if (n < in_.k) throw SchemaError("need at least k hyperplanes");
    if (n > 20) throw SchemaError("at most 20 hyperplanes supported");
    if (static_cast<int>(in_.weights.size()) != n)
        throw SchemaError("weights size must match the number of forms");
    for (double w : in_.weights)
        if (!(w > 0) || !std::isfinite(w)) throw SchemaError("weights must be positive finite");
    if (static_cast<int>(in_.f0.size()) != in_.k) throw SchemaError("f0 must have k entries");
    for (const auto& f : in_.forms)
        if (static_cast<int>(f.linear.size()) != in_.k)
            throw SchemaError("every form needs k linear coefficients");

    GenericityReport rep = check_genericity(in_);
    if (!rep.ok) throw GenericityError(std::move(rep));
    build();
}

void Arrangement::build() {
    const int n = this->n(), k = this->k();

    // Edges: (k-1)-subsets with f0-normalized kernel direction.
    for (const auto& U : index_subsets(n, k - 1)) {
        RatVec d = kernel_direction(linear_rows(in_, U));
        Rat f0d = dot(in_.f0, d);
        for (auto& v : d) v /= f0d;  // f0(e_U) = 1
        edge_by_forms_[U] = static_cast<int>(edges_.size());
        edges_.push_back({U, std::move(d)});
    }

    // Vertices, sorted by f0 value.
    for (const auto& X : index_subsets(n, k)) {
        Vertex v;
        v.forms = X;
        v.point = vertex_point(in_, X);
        v.f0_value = dot(in_.f0, v.point);
        v.orientation_sign = sgn(det(linear_rows(in_, X)));
        for (int j : X) {
            IndexSet U;
            for (int other : X)
                if (other != j) U.push_back(other);
            const Edge& e = edges_[edge_by_forms_.at(U)];
            v.cone_dirs.push_back(e.direction);
            int s = sgn(l_of(j, e.direction));
            if (s == 0) throw std::logic_error("zero l_j(e_U) despite genericity");
            v.cone_signs.push_back(s);
        }
        vertices_.push_back(std::move(v));
    }
    std::sort(vertices_.begin(), vertices_.end(),
              [](const Vertex& a, const Vertex& b) { return a.f0_value < b.f0_value; });
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        vertex_by_forms_[vertices_[i].forms] = static_cast<int>(i);

    // Chambers: depth-first over sign prefixes, pruning infeasible prefixes.
    std::vector<int> signs(n, 0);
    std::function<void(int)> dfs = [&](int depth) {
        if (depth == n) {
            auto pt = region_interior_point(in_, signs, n);
            if (!pt) return;
            Chamber c;
            c.signs = signs;
            c.interior_point = std::move(*pt);
            chamber_by_signs_[c.signs] = static_cast<int>(chambers_.size());
            chambers_.push_back(std::move(c));
            return;
        }
        for (int s : {+1, -1}) {
            signs[depth] = s;
            if (region_interior_point(in_, signs, depth + 1)) dfs(depth + 1);
        }
        signs[depth] = 0;
    };
    dfs(0);

    // Per-chamber recession analysis and closure vertices.
    for (auto& c : chambers_) {
        // min f0 over recession directions capped at f0 >= -1: nonzero iff
        // f0 is unbounded below on the chamber.
        RatMat A(n + 1, k);
        RatVec b(static_cast<std::size_t>(n) + 1, Rat(0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < k; ++i) A(j, i) = -c.signs[j] * in_.forms[j].linear[i];
        for (int i = 0; i < k; ++i) A(n, i) = -in_.f0[i];
        b[n] = 1;
        RatVec obj(k);
        for (int i = 0; i < k; ++i) obj[i] = -in_.f0[i];
        LpResult down = lp_maximize(A, b, obj);
        c.bounded_below = (down.status == LpResult::Status::kOptimal && down.objective == 0);

        // bounded: every recession coordinate pinned to zero.
        c.bounded = true;
        for (int i = 0; i < k && c.bounded; ++i) {
            for (int dir : {+1, -1}) {
                RatMat A2(n + 1, k);
                RatVec b2(static_cast<std::size_t>(n) + 1, Rat(0));
                for (int j = 0; j < n; ++j)
                    for (int t = 0; t < k; ++t) A2(j, t) = -c.signs[j] * in_.forms[j].linear[t];
                A2(n, i) = dir;
                b2[n] = 1;
                RatVec obj2(k, Rat(0));
                obj2[i] = dir;
                LpResult r = lp_maximize(A2, b2, obj2);
                if (!(r.status == LpResult::Status::kOptimal && r.objective == 0)) {
                    c.bounded = false;
                    break;
                }
            }
        }

        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            bool inside = true;
            for (int j = 0; j < n && inside; ++j) {
                Rat val = in_.forms[j].eval(vertices_[v].point);
                if (c.signs[j] * val < 0) inside = false;
            }
            if (inside) c.closure_vertices.push_back(static_cast<int>(v));
        }
        if (c.bounded_below) {
            if (c.closure_vertices.empty())
                throw std::logic_error("bounded-below chamber without boundary vertices");
            int best = c.closure_vertices.front();
            for (int v : c.closure_vertices)
                if (vertices_[v].f0_value < vertices_[best].f0_value) best = v;
            c.min_vertex = best;
        }
    }

    // Vertex -> adjacent chamber inside each cone, and the D+ bijection.
    for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
        Vertex& v = vertices_[vi];
        std::vector<int> plus(n, 0), minus(n, 0);
        for (int j = 0; j < n; ++j) {
            auto pos = std::find(v.forms.begin(), v.forms.end(), j);
            if (pos == v.forms.end()) {
                int s = sgn(in_.forms[j].eval(v.point));
                plus[j] = s;
                minus[j] = s;
            } else {
                int idx = static_cast<int>(pos - v.forms.begin());
                plus[j] = v.cone_signs[idx];
                minus[j] = -v.cone_signs[idx];
            }
        }
        v.dplus_chamber = chamber_index(plus);
        v.dminus_chamber = chamber_index(minus);
        if (v.dplus_chamber < 0 || v.dminus_chamber < 0)
            throw std::logic_error("vertex-adjacent chamber missing from enumeration");
        const Chamber& cp = chambers_[v.dplus_chamber];
        if (!cp.bounded_below || cp.min_vertex != static_cast<int>(vi))
            throw std::logic_error("vertex/chamber correspondence violated");
    }

    for (std::size_t vi = 0; vi < vertices_.size(); ++vi)
        dplus_.push_back(vertices_[vi].dplus_chamber);

    // The correspondence must be onto: every bounded-below chamber is some
    // vertex's adjacent chamber.
    std::size_t bb = 0;
    for (const auto& c : chambers_)
        if (c.bounded_below) ++bb;
    if (bb != vertices_.size())
        throw std::logic_error("bounded-below chamber count differs from vertex count");
}

int Arrangement::vertex_index(const IndexSet& X) const {
    auto it = vertex_by_forms_.find(X);
    return it == vertex_by_forms_.end() ? -1 : it->second;
}

int Arrangement::chamber_index(const std::vector<int>& signs) const {
    auto it = chamber_by_signs_.find(signs);
    return it == chamber_by_signs_.end() ? -1 : it->second;
}

const Edge& Arrangement::edge(const IndexSet& U) const {
    return edges_[edge_by_forms_.at(U)];
}

RatVec Arrangement::cone_coords(int vertex, const RatVec& p) const {
    const Vertex& v = vertices_[vertex];
    const int k = this->k();
    RatMat E(k, k);
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) E(i, j) = v.cone_dirs[j][i];
        rhs[i] = p[i] - v.point[i];
    }
    return solve(std::move(E), std::move(rhs));
}

Arrangement::ConePos Arrangement::cone_position(int vertex, const RatVec& p) const {
    RatVec a = cone_coords(vertex, p);
    bool boundary = false;
    for (const Rat& ai : a) {
        if (ai < 0) return ConePos::kOutside;
        if (ai == 0) boundary = true;
    }
    return boundary ? ConePos::kBoundary : ConePos::kInterior;
}

int Arrangement::chamber_of_point(const std::vector<double>& p, double tol) const {
    const int n = this->n();
    std::vector<int> signs(n, 0);
    for (int j = 0; j < n; ++j) {
        double val = rat_to_double(in_.forms[j].constant);
        double scale = 1.0 + std::abs(val);
        for (int i = 0; i < k(); ++i) {
            double term = rat_to_double(in_.forms[j].linear[i]) * p[i];
            val += term;
            scale += std::abs(term);
        }
        if (std::abs(val) <= tol * scale) return -1;
        signs[j] = val > 0 ? 1 : -1;
    }
    return chamber_index(signs);
}

Arrangement Arrangement::reflected() const {
    ArrangementInput in = in_;
    for (auto& v : in.f0) v = -v;
    return Arrangement(std::move(in));
}

IndexSet Arrangement::separating_set(int chamber_a, int chamber_b) const {
    const auto& a = chambers_[chamber_a].signs;
    const auto& b = chambers_[chamber_b].signs;
    IndexSet out;
    for (int j = 0; j < n(); ++j)
        if (a[j] != b[j]) out.push_back(j);
    return out;
}

double Arrangement::weight_sum(const IndexSet& s) const {
    double total = 0;
    for (int j : s) total += in_.weights[j];
    return total;
}

Rat Arrangement::vertex_sample_eps(int vertex) const {
    const Vertex& v = vertices_[vertex];
    RatVec dbar(k(), Rat(0));
    for (const auto& d : v.cone_dirs)
        for (int i = 0; i < k(); ++i) dbar[i] += d[i];
    Rat eps;
    bool first = true;
    for (int j = 0; j < n(); ++j) {
        if (std::find(v.forms.begin(), v.forms.end(), j) != v.forms.end()) continue;
        Rat bound = rat_abs(in_.forms[j].eval(v.point)) / (Rat(1) + rat_abs(l_of(j, dbar)));
        if (first || bound < eps) {
            eps = bound;
            first = false;
        }
    }
    if (first) eps = Rat(1);  // N == k: no constraining hyperplanes
    return eps / 2;
}

}  // namespace hyparr
