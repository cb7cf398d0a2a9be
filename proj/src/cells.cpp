#include "hyparr/cells.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyparr/errors.hpp"

namespace hyparr {

namespace {

bool is_zero(const BiRat& b) {
    return b.c00 == 0 && b.c10 == 0 && b.c01 == 0 && b.c11 == 0;
}

/// Signed 2-D cross product helper for jacobians: for maps z(x,y) given per
/// coordinate as bilinears, J = dz1/dx * dz2/dy - dz2/dx * dz1/dy. The x*y
/// terms cancel, so the result is again bilinear (with zero xy-coefficient).
BiRat map_jacobian2(const std::vector<BiRat>& z) {
    const BiRat& a = z[0];
    const BiRat& b = z[1];
    BiRat j;
    j.c00 = a.c10 * b.c01 - b.c10 * a.c01;
    j.c10 = a.c10 * b.c11 - b.c10 * a.c11;
    j.c01 = a.c11 * b.c01 - b.c11 * a.c01;
    j.c11 = 0;
    return j;
}

/// f o z for an affine form and a bilinear coordinate map.
BiRat compose_form(const AffineForm& f, const std::vector<BiRat>& z) {
    BiRat out;
    out.c00 = f.constant;
    for (std::size_t i = 0; i < z.size(); ++i) {
        out.c00 += f.linear[i] * z[i].c00;
        out.c10 += f.linear[i] * z[i].c10;
        out.c01 += f.linear[i] * z[i].c01;
        out.c11 += f.linear[i] * z[i].c11;
    }
    return out;
}

struct FactorSplit {
    FacePow faces;
    BiRat rest;
    int sign = 0;
};

FactorSplit split_factor(BiRat b, CellDomain domain, const Rat& start) {
    if (is_zero(b)) throw std::logic_error("form vanishes identically on a cell");
    FactorSplit out;
    out.faces = extract_faces(b, domain, start);
    out.sign = strict_sign(b, domain, start);
    if (out.sign == 0) throw std::logic_error("cell factor is not strictly signed");
    out.rest = std::move(b);
    return out;
}

CellFactor make_factor(int form, const BiRat& composed, CellDomain domain, const Rat& start,
                       int expected_sign) {
    FactorSplit s = split_factor(composed, domain, start);
    if (expected_sign != 0 && s.sign != expected_sign)
        throw std::logic_error("cell factor sign disagrees with the chamber sign");
    CellFactor f;
    f.form = form;
    f.faces = s.faces;
    f.rest = BiD::from(s.rest);
    f.rest_sign = s.sign;
    return f;
}

/// Builds a cell from a local->ambient bilinear map.
Cell build_cell(const Arrangement& arr, int chamber, std::vector<BiRat> map, CellDomain domain,
                const Rat& start) {
    Cell cell;
    cell.domain = domain;
    cell.start = rat_to_double(start);

    BiRat jac;
    if (arr.k() == 1) {
        jac.c00 = map[0].c10;  // dz/dx is constant for 1-D affine maps
    } else {
        jac = map_jacobian2(map);
    }
    FactorSplit js = split_factor(std::move(jac), domain, start);
    cell.jac_faces = js.faces;
    cell.jac_rest = BiD::from(js.rest);

    const auto& signs = arr.chambers()[chamber].signs;
    for (int j = 0; j < arr.n(); ++j) {
        BiRat composed = compose_form(arr.input().forms[j], map);
        cell.factors.push_back(make_factor(j, composed, domain, start, signs[j]));
    }

    BiRat f0;
    for (int i = 0; i < arr.k(); ++i) {
        f0.c00 += arr.input().f0[i] * map[i].c00;
        f0.c10 += arr.input().f0[i] * map[i].c10;
        f0.c01 += arr.input().f0[i] * map[i].c01;
        f0.c11 += arr.input().f0[i] * map[i].c11;
    }
    if (domain == CellDomain::kRay || domain == CellDomain::kCollar) {
        if (!(f0.c00 == 0 && f0.c10 == 1 && f0.c01 == 0 && f0.c11 == 0))
            throw std::logic_error("half-unbounded cell is not parametrized by f0");
        cell.f0_is_x = true;
    }
    cell.f0 = BiD::from(f0);
    return cell;
}

/// Exact counterclockwise order of points around an interior center.
std::vector<RatVec> sort_polygon(std::vector<RatVec> pts) {
    RatVec center(2, Rat(0));
    for (const auto& p : pts) {
        center[0] += p[0];
        center[1] += p[1];
    }
    center[0] /= int(pts.size());
    center[1] /= int(pts.size());
    auto upper = [&](const RatVec& p) {
        Rat dy = p[1] - center[1];
        if (dy != 0) return dy > 0;
        return p[0] - center[0] > 0;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVec& a, const RatVec& b) {
        bool ua = upper(a), ub = upper(b);
        if (ua != ub) return ua;
        Rat cross = (a[0] - center[0]) * (b[1] - center[1]) -
                    (a[1] - center[1]) * (b[0] - center[0]);
        return cross > 0;
    });
    return pts;
}

/// Map for the Duffy square covering triangle (apex, p1, p2), with the apex
/// blown up along the x-axis: z = apex + x*(p1-apex) + x*y*(p2-p1).
std::vector<BiRat> duffy_map(const RatVec& apex, const RatVec& p1, const RatVec& p2) {
    std::vector<BiRat> z(2);
    for (int i = 0; i < 2; ++i) {
        z[i].c00 = apex[i];
        z[i].c10 = p1[i] - apex[i];
        z[i].c01 = 0;
        z[i].c11 = p2[i] - p1[i];
    }
    return z;
}

void append_polygon_cells(const Arrangement& arr, int chamber, const std::vector<RatVec>& corners,
                          std::vector<Cell>& out) {
    const std::size_t m = corners.size();
    RatVec center(2, Rat(0));
    for (const auto& p : corners) {
        center[0] += p[0];
        center[1] += p[1];
    }
    center[0] /= int(m);
    center[1] /= int(m);
    for (std::size_t i = 0; i < m; ++i) {
        const RatVec& a = corners[i];
        const RatVec& b = corners[(i + 1) % m];
        RatVec mid{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2};
        out.push_back(build_cell(arr, chamber, duffy_map(a, mid, center), CellDomain::kSquare,
                                 Rat(0)));
        out.push_back(build_cell(arr, chamber, duffy_map(b, mid, center), CellDomain::kSquare,
                                 Rat(0)));
    }
}

/// Point on hyperplane j with f0 = t, as an affine function of t (k = 2).
/// Returns per-coordinate {c00 = base, c10 = direction}.
std::vector<BiRat> level_point_on_hyperplane(const Arrangement& arr, int j) {
    RatMat m(2, 2);
    for (int i = 0; i < 2; ++i) {
        m(0, i) = arr.input().forms[j].linear[i];
        m(1, i) = arr.input().f0[i];
    }
    RatMat m2 = m;
    RatVec base = solve(std::move(m), RatVec{-arr.input().forms[j].constant, Rat(0)});
    RatVec dir = solve(std::move(m2), RatVec{Rat(0), Rat(1)});
    std::vector<BiRat> q(2);
    for (int i = 0; i < 2; ++i) {
        q[i].c00 = base[i];
        q[i].c10 = dir[i];
    }
    return q;
}

}  // namespace

FacePow extract_faces(BiRat& b, CellDomain domain, const Rat& start) {
    FacePow faces;
    bool changed = true;
    bool half_x = domain == CellDomain::kRay || domain == CellDomain::kCollar;
    bool has_y = domain == CellDomain::kSquare || domain == CellDomain::kCollar;
    while (changed && !is_zero(b)) {
        changed = false;
        if (half_x) {
            // (x - start) * (c10 + c11 y)
            if (b.c00 == -start * b.c10 && b.c01 == -start * b.c11 &&
                !(b.c10 == 0 && b.c11 == 0)) {
                faces.x0++;
                b = BiRat{b.c10, Rat(0), b.c11, Rat(0)};
                changed = true;
            }
        } else {
            if (b.c00 == 0 && b.c01 == 0 && !(b.c10 == 0 && b.c11 == 0)) {  // x * (...)
                faces.x0++;
                b = BiRat{b.c10, Rat(0), b.c11, Rat(0)};
                changed = true;
            } else if (b.c00 + b.c10 == 0 && b.c01 + b.c11 == 0 &&
                       !(b.c00 == 0 && b.c01 == 0)) {  // (1-x) * (...)
                faces.x1++;
                b = BiRat{b.c00, Rat(0), b.c01, Rat(0)};
                changed = true;
            }
        }
        if (has_y && !changed) {
            if (b.c00 == 0 && b.c10 == 0 && !(b.c01 == 0 && b.c11 == 0)) {  // y * (...)
                faces.y0++;
                b = BiRat{b.c01, b.c11, Rat(0), Rat(0)};
                changed = true;
            } else if (b.c00 + b.c01 == 0 && b.c10 + b.c11 == 0 &&
                       !(b.c00 == 0 && b.c10 == 0)) {  // (1-y) * (...)
                faces.y1++;
                b = BiRat{b.c00, b.c10, Rat(0), Rat(0)};
                changed = true;
            }
        }
    }
    return faces;
}

int strict_sign(const BiRat& b, CellDomain domain, const Rat& start) {
    auto s = [](const Rat& v) { return sgn(v); };
    switch (domain) {
        case CellDomain::kInterval: {
            int s0 = s(b.eval(Rat(0), Rat(0))), s1 = s(b.eval(Rat(1), Rat(0)));
            return (s0 != 0 && s0 == s1) ? s0 : 0;
        }
        case CellDomain::kRay: {
            int s0 = s(b.eval(start, Rat(0)));
            int sl = s(b.c10);
            if (s0 == 0) return 0;
            return (sl == 0 || sl == s0) ? s0 : 0;
        }
        case CellDomain::kSquare: {
            int s00 = s(b.eval(Rat(0), Rat(0)));
            if (s00 == 0) return 0;
            for (int x = 0; x <= 1; ++x)
                for (int y = 0; y <= 1; ++y)
                    if (s(b.eval(Rat(x), Rat(y))) != s00) return 0;
            return s00;
        }
        case CellDomain::kCollar: {
            int s0 = s(b.eval(start, Rat(0)));
            if (s0 == 0 || s(b.eval(start, Rat(1))) != s0) return 0;
            int l0 = s(b.c10), l1 = s(b.c10 + b.c11);  // x-slopes at y = 0, 1
            if ((l0 != 0 && l0 != s0) || (l1 != 0 && l1 != s0)) return 0;
            return s0;
        }
    }
    return 0;
}

std::vector<Cell> chamber_cells(const Arrangement& arr, int chamber) {
    const Chamber& ch = arr.chambers()[chamber];
    if (!ch.bounded_below)
        throw DomainError("chamber cells requested for a chamber unbounded below");
    if (arr.k() > 2) throw DomainError("exact chamber cells only implemented for k <= 2");

    std::vector<Cell> out;
    if (arr.k() == 1) {
        if (ch.bounded) {
            if (ch.closure_vertices.size() != 2)
                throw std::logic_error("bounded 1-D chamber without two endpoints");
            Rat a = arr.vertices()[ch.closure_vertices[0]].point[0];
            Rat b = arr.vertices()[ch.closure_vertices[1]].point[0];
            if (a > b) std::swap(a, b);
            std::vector<BiRat> map(1);
            map[0].c00 = a;
            map[0].c10 = b - a;
            out.push_back(build_cell(arr, chamber, std::move(map), CellDomain::kInterval, Rat(0)));
        } else {
            const Vertex& v = arr.vertices()[ch.min_vertex];
            Rat c = v.f0_value;
            // z(t) = p + (t - c) e, with f0(e) = 1.
            const RatVec& e = arr.edge(IndexSet{}).direction;
            std::vector<BiRat> map(1);
            map[0].c00 = v.point[0] - c * e[0];
            map[0].c10 = e[0];
            out.push_back(build_cell(arr, chamber, std::move(map), CellDomain::kRay, c));
        }
        return out;
    }

    // k == 2.
    std::vector<RatVec> corners;
    for (int vi : ch.closure_vertices) corners.push_back(arr.vertices()[vi].point);

    if (!ch.bounded) {
        // Cap level strictly above every vertex value.
        Rat cap = arr.vertices().back().f0_value + 1;

        // The two hyperplanes carrying the unbounded edges: j such that the
        // f0-normalized kernel direction of H_j lies in the recession cone.
        std::vector<int> rays;
        for (int j = 0; j < arr.n(); ++j) {
            const RatVec& e = arr.edge(IndexSet{j}).direction;
            bool inside = true;
            for (int r = 0; r < arr.n() && inside; ++r)
                if (ch.signs[r] * arr.l_of(r, e) < 0) inside = false;
            if (inside) rays.push_back(j);
        }
        if (rays.size() != 2)
            throw std::logic_error("unbounded 2-D chamber without exactly two boundary rays");

        std::vector<std::vector<BiRat>> q;
        for (int j : rays) q.push_back(level_point_on_hyperplane(arr, j));
        for (const auto& qr : q) {
            RatVec pt{qr[0].eval(cap, Rat(0)), qr[1].eval(cap, Rat(0))};
            corners.push_back(std::move(pt));
        }

        // Collar cell: z(x, y) = (1-y) q0(x) + y q1(x), x = f0-value >= cap.
        std::vector<BiRat> map(2);
        for (int i = 0; i < 2; ++i) {
            map[i].c00 = q[0][i].c00;
            map[i].c10 = q[0][i].c10;
            map[i].c01 = q[1][i].c00 - q[0][i].c00;
            map[i].c11 = q[1][i].c10 - q[0][i].c10;
        }
        out.push_back(build_cell(arr, chamber, std::move(map), CellDomain::kCollar, cap));
    }

    if (corners.size() < 3) throw std::logic_error("polygon with fewer than three corners");
    append_polygon_cells(arr, chamber, sort_polygon(std::move(corners)), out);
    return out;
}

}  // namespace hyparr
