#include "pltop/fixpoint.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pltop/scenarios.hpp"

namespace pltop {

const char* certificate_status_name(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::TheoremConfirmed: return "TheoremConfirmed";
        case CertificateStatus::TheoremNotApplicable_FixedPointAnyway:
            return "TheoremNotApplicable_FixedPointAnyway";
        case CertificateStatus::TheoremNotApplicable_NoFixedPoint:
            return "TheoremNotApplicable_NoFixedPoint";
        case CertificateStatus::Inconsistent: return "Inconsistent";
    }
    return "?";
}

namespace {

// Vertices of a bounded polytope given in half-space form, dim <= 3:
// brute force over hyperplane subsets.
std::vector<VecQ> polytope_vertices(const ConvexBody& b) {
    int k = b.dim();
    const auto& cons = b.constraints();
    int m = int(cons.size());
    std::vector<VecQ> verts;
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            MatQ M(k, k);
            VecQ rhs(k);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) M(i, j) = cons[idx[i]].a[j];
                rhs[i] = cons[idx[i]].b;
            }
            if (M.rank() < k) return;
            auto x = M.solve(rhs);
            if (x && b.contains_point(*x)) verts.push_back(*x);
            return;
        }
        for (int i = start; i < m; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    if (k == 0) {
        VecQ origin;
        if (b.contains_point(origin)) verts.push_back(origin);
    } else {
        rec(0, 0);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

FixedPointComponent::Kind kind_of(const std::vector<VecQ>& pts) {
    int d = affine_dim(pts);
    if (d == 0) return FixedPointComponent::Kind::Point;
    if (d == 1) return FixedPointComponent::Kind::Segment;
    return FixedPointComponent::Kind::Polytope;
}

}  // namespace

FixedPointSet exact_pl_fixed_points(const PLMap& f, const SimplicialComplex& X) {
    if (f.target_ambient_dim != X.ambient_dim)
        fail(ErrorCode::GeometryError, "fixed points need a self-map of the ambient space");
    FixedPointSet out;
    std::set<std::vector<VecQ>> seen;
    int n = X.ambient_dim;
    for (int s = 0; s < int(X.top_simplices.size()); ++s) {
        AffineMap A = f.simplex_affine(s);
        MatQ M(n, n);
        VecQ rhs(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) M(i, j) = A.A(i, j) - Rational(int(i == j));
            rhs[i] = -A.b[i];
        }
        auto x0 = M.solve(rhs);
        if (!x0) continue;
        std::vector<VecQ> basis = M.nullspace();
        int k = int(basis.size());
        ConvexBody sb = X.simplex_body(s);
        std::vector<VecQ> pts;
        if (k == 0) {
            if (sb.contains_point(*x0)) pts.push_back(*x0);
        } else {
            // Solution space x = x0 + B t; pull the simplex into t-space.
            ConvexBody tb(k);
            for (const auto& con : sb.constraints()) {
                VecQ a(k);
                for (int i = 0; i < k; ++i) a[i] = dot(con.a, basis[i]);
                tb.add({a, con.b - dot(con.a, *x0), con.equality});
            }
            for (const auto& t : polytope_vertices(tb)) {
                VecQ x = *x0;
                for (int i = 0; i < k; ++i) x = vec_add(x, vec_scale(t[i], basis[i]));
                pts.push_back(x);
            }
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        }
        if (pts.empty()) continue;
        if (!seen.insert(pts).second) continue;
        FixedPointComponent comp;
        comp.carrier = s;
        comp.kind = kind_of(pts);
        comp.points = pts;
        out.components.push_back(std::move(comp));
    }
    out.exact = true;
    return out;
}

namespace {

struct ShellData {
    SimplicialComplex B;
    std::vector<VecQ> images;        // star retraction images
    std::vector<int> outer_to_base;  // new scaled vertex id -> boundary vertex id
};

// Supporting hyperplane of a boundary facet, oriented so the adjacent top
// simplex satisfies a . x > b.
void facet_hyperplane(const SimplicialComplex& X, const std::vector<int>& facet, VecQ& a,
                      Rational& b) {
    int n = X.ambient_dim;
    if (n == 1) {
        a = {Rational(1)};
        b = X.vertices[facet[0]][0];
    } else {
        MatQ rows(int(facet.size()) - 1, n);
        for (int i = 1; i < int(facet.size()); ++i) {
            VecQ d = vec_sub(X.vertices[facet[i]], X.vertices[facet[0]]);
            for (int j = 0; j < n; ++j) rows(i - 1, j) = d[j];
        }
        auto ns = rows.nullspace();
        if (ns.size() != 1) fail(ErrorCode::GeometryError, "degenerate boundary facet");
        a = ns[0];
        b = dot(a, X.vertices[facet[0]]);
    }
    // Orient toward the interior of the adjacent simplex.
    for (int s = 0; s < int(X.top_simplices.size()); ++s) {
        const auto& top = X.top_simplices[s];
        bool has = std::all_of(facet.begin(), facet.end(), [&](int v) {
            return std::find(top.begin(), top.end(), v) != top.end();
        });
        if (!has) continue;
        for (int w : top)
            if (std::find(facet.begin(), facet.end(), w) == facet.end()) {
                Rational side = dot(a, X.vertices[w]) - b;
                if (side < 0) {
                    for (auto& c : a) c = -c;
                    b = -b;
                }
                return;
            }
    }
    fail(ErrorCode::GeometryError, "boundary facet without a top simplex");
}

ShellData build_shell(const SimplicialComplex& X, const VecQ& c, const Rational& margin) {
    if (X.dim != X.ambient_dim || X.dim < 1 || X.dim > 2)
        fail(ErrorCode::GeometryError, "star retraction supports full-dimensional X, dim 1 or 2");
    SimplicialComplex bd = boundary_subcomplex(orient(X));
    for (const auto& face : bd.top_simplices)
        if (body_from_points(X.simplex_points(face)).contains_point(c))
            fail(ErrorCode::CenterOnBoundary, "star center lies on the boundary");
    if (locate_point(X, c).kind == PointLocation::Kind::Outside)
        fail(ErrorCode::NotStarShaped, "star center lies outside X");
    // Kernel test: c must be strictly inside the supporting hyperplane of
    // every boundary facet.
    for (const auto& face : bd.top_simplices) {
        VecQ a;
        Rational b;
        facet_hyperplane(X, face, a, b);
        if (dot(a, c) <= b)
            fail(ErrorCode::NotStarShaped, "a boundary facet is not visible from the center");
    }

    ShellData sh;
    std::vector<VecQ> verts = X.vertices;
    std::map<int, int> scaled;  // boundary vertex -> scaled copy id
    std::set<int> bd_verts;
    for (const auto& face : bd.top_simplices)
        for (int v : face) bd_verts.insert(v);
    Rational s = Rational(1) + margin;
    for (int v : bd_verts) {
        scaled[v] = int(verts.size());
        verts.push_back(vec_add(c, vec_scale(s, vec_sub(X.vertices[v], c))));
    }
    std::vector<std::vector<int>> tops = X.top_simplices;
    if (X.dim == 1) {
        for (const auto& face : bd.top_simplices) tops.push_back({face[0], scaled[face[0]]});
    } else {
        for (const auto& face : bd.top_simplices) {
            int u = face[0], v = face[1];
            tops.push_back({u, v, scaled[v]});
            tops.push_back({u, scaled[v], scaled[u]});
        }
    }
    sh.B = build_complex(X.ambient_dim, verts, tops);
    sh.images = X.vertices;
    sh.outer_to_base.assign(verts.size(), -1);
    for (auto& [v, sv] : scaled) {
        sh.images.push_back(X.vertices[v]);
        sh.outer_to_base[sv] = v;
    }
    return sh;
}

}  // namespace

PLMap build_star_retraction(const SimplicialComplex& X, const VecQ& c, const Rational& margin) {
    ShellData sh = build_shell(X, c, margin);
    return make_pl_map(sh.B, sh.images);
}

PLMap build_Y_retraction(const SimplicialComplex& X, const VecQ& c, const SubBall& Y,
                         const Rational& margin) {
    if (X.dim != 2) fail(ErrorCode::GeometryError, "Y-retraction is a planar construction");
    ShellData sh = build_shell(X, c, margin);
    SimplicialComplex bd = boundary_subcomplex(orient(X));
    CircleParam par(bd);
    Rational L = par.length();

    std::vector<int> ends = arc_endpoints(Y.simplices);
    if (ends.size() != 2) fail(ErrorCode::GeometryError, "Y must be a boundary arc");
    Rational pu = par.param_of(X.vertices[ends[0]]);
    Rational pv = par.param_of(X.vertices[ends[1]]);
    Rational lenY = Rational(int(Y.simplices.size()));
    // Y runs either from pu or from pv in the coherent direction; pick the
    // start whose forward arc of length |Y| lands on the other endpoint and
    // whose midpoint lies on Y.
    std::vector<ConvexBody> y_bodies;
    for (const auto& e : Y.simplices) y_bodies.push_back(body_from_points(X.simplex_points(e)));
    auto on_y = [&](const VecQ& x) {
        for (const auto& b : y_bodies)
            if (b.contains_point(x)) return true;
        return false;
    };
    Rational a = pu;
    if (!on_y(par.point_at(a + lenY / 2))) a = pv;
    if (!on_y(par.point_at(a + lenY / 2)))
        fail(ErrorCode::GeometryError, "Y is not a parameter interval of the boundary");

    // Fold of the boundary circle onto Y: identity on Y, the complement arc
    // traverses Y backward.
    auto fold = [&](const VecQ& x) -> VecQ {
        Rational p = par.param_of(x) - a;
        while (p < 0) p += L;
        while (p >= L) p -= L;
        if (p <= lenY) return x;
        Rational phi = (p - lenY) / (L - lenY);
        return par.point_at(a + lenY - phi * lenY);
    };
    for (int v = 0; v < int(sh.B.vertices.size()); ++v)
        if (sh.outer_to_base[v] >= 0)
            sh.images[v] = fold(X.vertices[sh.outer_to_base[v]]);
    return make_pl_map(sh.B, sh.images);
}

PLMap conjugate_h(const PLMap& f, const PLMap& beta) { return compose(beta, f); }

Certificate certify(const Scenario& sc, std::optional<Theorem> hint, int max_depth) {
    Certificate cert;
    cert.scenario = sc.name;
    Theorem th = hint ? *hint : sc.theorem.value_or(Theorem::T33);
    cert.report.theorem = th;
    if (!sc.Y) {
        cert.report.checks.push_back(
            {"scenario supplies the data the theorem needs", CheckStatus::Fail, "no Y sub-ball"});
        cert.report.finalize();
    } else {
        switch (th) {
            case Theorem::T33:
            case Theorem::Cor34:
                cert.report = check_T33(sc.map, sc.X, *sc.Y, max_depth);
                break;
            case Theorem::T35:
            case Theorem::Cor36:
                cert.report = check_T35(sc.map, sc.X, *sc.Y, max_depth);
                break;
            case Theorem::T47:
                if (!sc.D) {
                    cert.report.checks.push_back({"scenario supplies the data the theorem needs",
                                                  CheckStatus::Fail, "no D sub-ball"});
                    cert.report.finalize();
                } else {
                    cert.report = check_T47(sc.map, sc.X, *sc.Y, *sc.D, max_depth);
                }
                break;
            case Theorem::T48:
            case Theorem::Cor49:
                cert.report = check_T48(sc.map, sc.X, *sc.Y, max_depth);
                break;
        }
    }
    cert.fixed_points = exact_pl_fixed_points(sc.map, sc.X);
    cert.residual = Rational(0);
    bool guaranteed = cert.report.conclusion == Conclusion::FixedPointGuaranteed;
    bool nonempty = !cert.fixed_points.empty();
    if (guaranteed && nonempty)
        cert.status = CertificateStatus::TheoremConfirmed;
    else if (guaranteed)
        cert.status = CertificateStatus::Inconsistent;
    else if (nonempty)
        cert.status = CertificateStatus::TheoremNotApplicable_FixedPointAnyway;
    else
        cert.status = CertificateStatus::TheoremNotApplicable_NoFixedPoint;
    return cert;
}

namespace {

double residual_at(const std::function<std::vector<double>(const std::vector<double>&)>& f,
                   const std::vector<double>& x) {
    std::vector<double> y = f(x);
    double r2 = 0;
    for (size_t i = 0; i < x.size(); ++i) r2 += (y[i] - x[i]) * (y[i] - x[i]);
    return std::sqrt(r2);
}

}  // namespace

std::vector<ApproxFixedPoint> sampled_residual_search(
    const std::function<std::vector<double>(const std::vector<double>&)>& f,
    const SimplicialComplex& X, int grid_depth, double tol) {
    int n = X.ambient_dim;
    int g = std::max(2, grid_depth);
    std::vector<ApproxFixedPoint> found;
    auto record = [&](const std::vector<double>& x, double r) {
        for (const auto& p : found) {
            double d2 = 0;
            for (int i = 0; i < n; ++i) d2 += (p.x[i] - x[i]) * (p.x[i] - x[i]);
            if (d2 < 1e-14) return;
        }
        found.push_back({x, r});
    };

    for (int s = 0; s < int(X.top_simplices.size()); ++s) {
        std::vector<std::vector<double>> corners;
        for (int v : X.top_simplices[s]) {
            std::vector<double> p;
            for (const auto& c : X.vertices[v]) p.push_back(c.convert_to<double>());
            corners.push_back(p);
        }
        int k = int(corners.size());
        auto at = [&](const std::vector<double>& bary) {
            std::vector<double> x(n, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j) x[j] += bary[i] * corners[i][j];
            return x;
        };
        // Coarse barycentric lattice scan for the best cell.
        std::vector<double> best_bary(k, 1.0 / k);
        double best = residual_at(f, at(best_bary));
        std::vector<int> ks(k, 0);
        std::function<void(int, int)> scan = [&](int pos, int left) {
            if (pos == k - 1) {
                ks[pos] = left;
                std::vector<double> bary(k);
                for (int i = 0; i < k; ++i) bary[i] = double(ks[i]) / g;
                double r = residual_at(f, at(bary));
                if (r < best) {
                    best = r;
                    best_bary = bary;
                }
                return;
            }
            for (int i = 0; i <= left; ++i) {
                ks[pos] = i;
                scan(pos + 1, left - i);
            }
        };
        scan(0, g);
        // Pattern descent toward the corners, halving steps.
        double h = 1.0 / g;
        for (int round = 0; round < 80 && best > tol; ++round) {
            bool improved = false;
            for (int i = 0; i < k; ++i) {
                std::vector<double> cand = best_bary;
                for (int j = 0; j < k; ++j)
                    cand[j] = (1 - h) * cand[j] + (j == i ? h : 0.0);
                double r = residual_at(f, at(cand));
                if (r < best) {
                    best = r;
                    best_bary = cand;
                    improved = true;
                }
            }
            if (!improved) h /= 2;
            if (h < 1e-18) break;
        }
        if (best <= tol) record(at(best_bary), best);
    }
    if (found.empty())
        fail(ErrorCode::ToleranceNotReached, "no sample point reached the requested residual");
    return found;
}

}  // namespace pltop
