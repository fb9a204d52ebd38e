#include "pltop/hypotheses.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pltop {

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "Pass";
        case CheckStatus::Fail: return "Fail";
        case CheckStatus::Undecided: return "Undecided";
    }
    return "?";
}

const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::T33: return "T33";
        case Theorem::T35: return "T35";
        case Theorem::T47: return "T47";
        case Theorem::T48: return "T48";
        case Theorem::Cor34: return "Cor34";
        case Theorem::Cor36: return "Cor36";
        case Theorem::Cor49: return "Cor49";
    }
    return "?";
}

void HypothesisReport::finalize() {
    bool all = std::all_of(checks.begin(), checks.end(),
                           [](const Check& c) { return c.status == CheckStatus::Pass; });
    conclusion = all ? Conclusion::FixedPointGuaranteed : Conclusion::NotApplicable;
}

std::vector<int> arc_endpoints(const std::vector<std::vector<int>>& edges) {
    std::map<int, int> deg;
    for (const auto& e : edges)
        for (int v : e) ++deg[v];
    std::vector<int> ends;
    for (auto& [v, d] : deg)
        if (d == 1) ends.push_back(v);
    return ends;
}

namespace {

// {x in sigma : f(x) in target}, via the affine extension of f on sigma.
ConvexBody pullback_into(const ConvexBody& sigma, const AffineMap& A, const ConvexBody& target) {
    ConvexBody p = sigma;
    for (const auto& con : target.constraints()) {
        VecQ a = A.A.transpose().mul(con.a);
        Rational b = con.b - dot(con.a, A.b);
        p.add({a, b, con.equality});
    }
    return p;
}

std::vector<ConvexBody> simplex_bodies(const SimplicialComplex& k,
                                       const std::vector<std::vector<int>>& simps) {
    std::vector<ConvexBody> out;
    for (const auto& s : simps) out.push_back(body_from_points(k.simplex_points(s)));
    return out;
}

std::vector<ConvexBody> all_bodies(const SimplicialComplex& k) {
    return simplex_bodies(k, k.top_simplices);
}

// PLMap on a refinement of f's domain (images re-evaluated exactly).
PLMap refined_map(const PLMap& f, int depth) {
    PLMap r;
    r.domain = barycentric_subdivide(f.domain, depth);
    r.target_ambient_dim = f.target_ambient_dim;
    for (const auto& v : r.domain.vertices) r.vertex_images.push_back(evaluate(f, v));
    return r;
}

// Tangent cone of a body at one of its points, truncated by a unit box so
// the LP machinery stays bounded. Coverage of the truncations is
// equivalent to coverage of the cones (everything is scale-invariant
// around v).
ConvexBody tangent_cone(const ConvexBody& b, const VecQ& v) {
    ConvexBody c(b.dim());
    for (const auto& con : b.constraints())
        if (con.equality || dot(con.a, v) == con.b) c.add(con);
    for (int j = 0; j < b.dim(); ++j) {
        VecQ e(b.dim(), Rational(0));
        e[j] = 1;
        c.add({e, v[j] - 1, false});
        VecQ ne(b.dim(), Rational(0));
        ne[j] = -1;
        c.add({ne, -v[j] - 1, false});
    }
    return c;
}

// Exact local test: does every neighborhood of v (within the domain)
// contain points mapping outside X? True iff the tangent cone of some
// carrier simplex at v escapes the tangent cones of the pullbacks of X.
bool escapes_near(const PLMap& f, const std::vector<ConvexBody>& x_bodies, const VecQ& v) {
    for (int s = 0; s < int(f.domain.top_simplices.size()); ++s) {
        ConvexBody sb = f.domain.simplex_body(s);
        if (!sb.contains_point(v)) continue;
        AffineMap A = f.simplex_affine(s);
        std::vector<ConvexBody> cones;
        for (const auto& xb : x_bodies) {
            ConvexBody q = pullback_into(sb, A, xb);
            if (q.contains_point(v)) cones.push_back(tangent_cone(q, v));
        }
        if (!covered_by(tangent_cone(sb, v), cones)) return true;
    }
    return false;
}

bool image_inside(const PLMap& f, const std::vector<int>& simplex,
                  const std::vector<ConvexBody>& x_bodies) {
    std::vector<VecQ> img;
    for (int v : simplex) img.push_back(f.vertex_images[v]);
    return covered_by(body_from_points(img), x_bodies);
}

}  // namespace

BlockadingWitness check_blockading(const PLMap& f, const SimplicialComplex& X,
                                   const std::vector<std::vector<int>>& V, int max_depth) {
    BlockadingWitness w;
    if (V.empty()) {
        w.result = BlockadingResult::Blockading;
        return w;
    }
    std::vector<ConvexBody> v_bodies = simplex_bodies(X, V);
    std::vector<ConvexBody> x_bodies = all_bodies(X);

    // Fast path: the image of the whole domain misses V.
    bool image_meets_v = false;
    for (int s = 0; s < int(f.domain.top_simplices.size()) && !image_meets_v; ++s) {
        ConvexBody img = f.simplex_image_body(s);
        for (const auto& vb : v_bodies)
            if (bodies_intersect(img, vb)) {
                image_meets_v = true;
                break;
            }
    }
    if (!image_meets_v) {
        w.result = BlockadingResult::Blockading;
        return w;
    }

    SimplicialComplex region;
    region.dim = int(V[0].size()) - 1;
    region.ambient_dim = X.ambient_dim;
    region.vertices = X.vertices;
    region.top_simplices = V;

    for (int depth = 0; depth <= max_depth; ++depth) {
        w.depth_used = depth;
        PLMap fr = refined_map(f, depth);
        PreimageSandwich ps = preimage_subcomplex(fr, region, 0);
        // Closed star of the preimage hull.
        std::set<int> hull_verts;
        for (int s : ps.hull)
            for (int v : fr.domain.top_simplices[s]) hull_verts.insert(v);
        std::vector<int> star;
        for (int s = 0; s < int(fr.domain.top_simplices.size()); ++s)
            for (int v : fr.domain.top_simplices[s])
                if (hull_verts.count(v)) {
                    star.push_back(s);
                    break;
                }
        bool inside = true;
        for (int s : star)
            if (!image_inside(fr, fr.domain.top_simplices[s], x_bodies)) {
                inside = false;
                break;
            }
        if (inside) {
            w.result = BlockadingResult::Blockading;
            SimplicialComplex u;
            u.dim = fr.domain.dim;
            u.ambient_dim = fr.domain.ambient_dim;
            u.vertices = fr.domain.vertices;
            for (int s : star) u.top_simplices.push_back(fr.domain.top_simplices[s]);
            w.witness_U = std::move(u);
            return w;
        }
        // Refutation: a refined vertex mapping into V near which the map
        // provably escapes X, no matter how small the neighborhood.
        for (int v : hull_verts) {
            VecQ fv = fr.vertex_images[v];
            bool in_v = false;
            for (const auto& vb : v_bodies)
                if (vb.contains_point(fv)) { in_v = true; break; }
            if (!in_v) continue;
            if (escapes_near(f, x_bodies, fr.domain.vertices[v])) {
                w.result = BlockadingResult::NotBlockading;
                w.refutation = fr.domain.vertices[v];
                return w;
            }
        }
    }
    w.result = BlockadingResult::Undecided;
    return w;
}

namespace {

SimplicialComplex oriented_boundary(const SimplicialComplex& X) {
    return boundary_subcomplex(X.orientation ? X : orient(X));
}

Check ball_in_boundary_check(const SimplicialComplex& bd, const SubBall& Y) {
    Check c{"Y is a certified ball subcomplex of the boundary", CheckStatus::Pass, ""};
    if (!(Y.parent == bd) || !is_subcomplex_of(bd, Y.simplices)) {
        c.status = CheckStatus::Fail;
        c.detail = "Y does not live in the boundary complex of X";
    }
    return c;
}

Check image_of_Y_in_X_check(const PLMap& f, const SimplicialComplex& X, const SubBall& Y) {
    Check c{"f(Y) lies in X", CheckStatus::Pass, ""};
    std::vector<ConvexBody> x_bodies = all_bodies(X);
    for (const auto& s : Y.simplices)
        if (!image_inside(f, s, x_bodies)) {
            c.status = CheckStatus::Fail;
            c.detail = "some simplex of Y maps partially outside X";
            break;
        }
    return c;
}

// The preimage condition f^{-1}(bdX - Y) = int Y, in its equivalent split
// form: f(int Y) inside bdX - Y, and f(X - int Y) misses bdX - Y.
Check preimage_condition_check(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                               const SimplicialComplex& bd) {
    Check c{"preimage of (bdX - Y) is exactly the interior of Y", CheckStatus::Pass, ""};
    auto compl_simps = complement_simplices(bd, Y.simplices);
    std::vector<ConvexBody> y_bodies = simplex_bodies(X, Y.simplices);
    std::vector<ConvexBody> bd_bodies = all_bodies(bd);
    std::vector<ConvexBody> compl_bodies = simplex_bodies(X, compl_simps);
    std::vector<int> ends = arc_endpoints(Y.simplices);
    std::vector<ConvexBody> end_bodies;
    for (int v : ends) end_bodies.push_back(body_from_points({X.vertices[v]}));

    // Half 1: on each simplex of Y, points mapping into Y are confined to
    // the arc endpoints, and the image stays on the boundary sphere.
    for (const auto& s : Y.simplices) {
        std::vector<VecQ> dom_pts, img_pts;
        for (int v : s) {
            dom_pts.push_back(X.vertices[v]);
            img_pts.push_back(f.vertex_images[v]);
        }
        if (!covered_by(body_from_points(img_pts), bd_bodies)) {
            c.status = CheckStatus::Fail;
            c.detail = "interior of Y maps off the boundary sphere";
            return c;
        }
        ConvexBody sb = body_from_points(dom_pts);
        AffineMap A = affine_through(dom_pts, img_pts);
        for (const auto& yb : y_bodies) {
            ConvexBody p = pullback_into(sb, A, yb);
            if (!covered_by(p, end_bodies)) {
                c.status = CheckStatus::Fail;
                c.detail = "a point interior to Y maps back into Y";
                return c;
            }
        }
    }

    // Half 2: on each top simplex of X, points mapping onto bdX - Y lie in
    // Y (junction images excepted), and the junction vertices themselves do
    // not map onto bdX - Y.
    for (int s = 0; s < int(X.top_simplices.size()); ++s) {
        ConvexBody sb = X.simplex_body(s);
        AffineMap A = f.simplex_affine(s);
        std::vector<ConvexBody> allowed = y_bodies;
        for (int v : ends)
            allowed.push_back(pullback_into(sb, A, body_from_points({X.vertices[v]})));
        for (const auto& cb : compl_bodies) {
            ConvexBody p = pullback_into(sb, A, cb);
            if (!covered_by(p, allowed)) {
                c.status = CheckStatus::Fail;
                c.detail = "a point outside the interior of Y maps onto bdX - Y";
                return c;
            }
        }
    }
    for (int v : ends) {
        VecQ fv = f.vertex_images[v];
        bool in_compl = false, in_y = false;
        for (const auto& cb : compl_bodies)
            if (cb.contains_point(fv)) in_compl = true;
        for (const auto& yb : y_bodies)
            if (yb.contains_point(fv)) in_y = true;
        if (in_compl && !in_y) {
            c.status = CheckStatus::Fail;
            c.detail = "an endpoint of Y maps onto bdX - Y";
            return c;
        }
    }
    return c;
}

Check inward_star_check(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                        int max_depth) {
    Check c{"some interior point of Y has a neighborhood mapping into X", CheckStatus::Undecided,
            ""};
    std::vector<ConvexBody> y_bodies = simplex_bodies(X, Y.simplices);
    std::vector<int> ends = arc_endpoints(Y.simplices);
    std::vector<VecQ> end_pts;
    for (int v : ends) end_pts.push_back(X.vertices[v]);
    std::vector<ConvexBody> x_bodies = all_bodies(X);

    for (int depth = 0; depth <= max_depth; ++depth) {
        PLMap fr = refined_map(f, depth);
        for (int v = 0; v < int(fr.domain.vertices.size()); ++v) {
            const VecQ& p = fr.domain.vertices[v];
            bool on_y = false;
            for (const auto& yb : y_bodies)
                if (yb.contains_point(p)) { on_y = true; break; }
            if (!on_y) continue;
            if (std::find(end_pts.begin(), end_pts.end(), p) != end_pts.end()) continue;
            bool star_inside = true;
            bool in_any = false;
            for (int s = 0; s < int(fr.domain.top_simplices.size()) && star_inside; ++s) {
                const auto& simp = fr.domain.top_simplices[s];
                if (std::find(simp.begin(), simp.end(), v) == simp.end()) continue;
                in_any = true;
                if (!image_inside(fr, simp, x_bodies)) star_inside = false;
            }
            if (in_any && star_inside) {
                c.status = CheckStatus::Pass;
                c.detail = "witness vertex at (" + format_rational(p[0]) +
                           (p.size() > 1 ? ", " + format_rational(p[1]) : "") + ")";
                return c;
            }
        }
    }
    c.detail = "no inward vertex star found up to the refinement limit";
    return c;
}

}  // namespace

HypothesisReport check_T33(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                           int max_depth) {
    HypothesisReport r;
    r.theorem = Theorem::T33;
    SimplicialComplex bd = oriented_boundary(X);

    r.checks.push_back(ball_in_boundary_check(bd, Y));
    r.checks.push_back(image_of_Y_in_X_check(f, X, Y));

    Check blk{"bdX - Y is a blockading set", CheckStatus::Undecided, ""};
    if (r.checks[0].status == CheckStatus::Pass) {
        auto v = complement_simplices(bd, Y.simplices);
        BlockadingWitness bw = check_blockading(f, X, v, max_depth);
        switch (bw.result) {
            case BlockadingResult::Blockading:
                blk.status = CheckStatus::Pass;
                blk.detail = "verified at refinement depth " + std::to_string(bw.depth_used);
                break;
            case BlockadingResult::NotBlockading:
                blk.status = CheckStatus::Fail;
                blk.detail = "refuted by an escaping preimage point";
                break;
            case BlockadingResult::Undecided:
                blk.status = CheckStatus::Undecided;
                blk.detail = "not settled at the refinement limit";
                break;
        }
    } else {
        blk.detail = "skipped: Y is not a boundary ball";
    }
    r.checks.push_back(blk);
    r.finalize();
    return r;
}

HypothesisReport check_T35(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                           int max_depth) {
    HypothesisReport r;
    r.theorem = Theorem::T35;
    SimplicialComplex bd = oriented_boundary(X);
    Check ball = ball_in_boundary_check(bd, Y);
    r.checks.push_back(ball);
    if (ball.status == CheckStatus::Pass) {
        r.checks.push_back(preimage_condition_check(f, X, Y, bd));
        r.checks.push_back(inward_star_check(f, X, Y, max_depth));
    } else {
        r.checks.push_back({"preimage of (bdX - Y) is exactly the interior of Y",
                            CheckStatus::Undecided, "skipped"});
        r.checks.push_back({"some interior point of Y has a neighborhood mapping into X",
                            CheckStatus::Undecided, "skipped"});
    }
    r.finalize();
    return r;
}

HypothesisReport check_T47(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                           const SubBall& D, int max_depth) {
    HypothesisReport r;
    r.theorem = Theorem::T47;
    SimplicialComplex bd = oriented_boundary(X);

    // (1) E = bdD intersect bdX is an (n-1)-ball interior to Y.
    Check e_check{"E = bdD cap bdX is a ball in the interior of Y", CheckStatus::Pass, ""};
    std::vector<std::vector<int>> E;
    try {
        SimplicialComplex dD = boundary_subcomplex(D.as_complex());
        std::vector<ConvexBody> bd_bodies = all_bodies(bd);
        for (const auto& face : dD.top_simplices)
            if (covered_by(body_from_points(X.simplex_points(face)), bd_bodies))
                E.push_back(face);
        if (E.empty()) {
            e_check.status = CheckStatus::Fail;
            e_check.detail = "bdD does not touch bdX";
        } else {
            make_sub_ball(dD, E, dD.dim);  // throws unless E is a ball
            std::vector<ConvexBody> y_bodies = simplex_bodies(X, Y.simplices);
            std::vector<int> ends = arc_endpoints(Y.simplices);
            for (const auto& face : E) {
                ConvexBody fb = body_from_points(X.simplex_points(face));
                if (!covered_by(fb, y_bodies)) {
                    e_check.status = CheckStatus::Fail;
                    e_check.detail = "E leaves Y";
                    break;
                }
                for (int v : ends)
                    if (fb.contains_point(X.vertices[v])) {
                        e_check.status = CheckStatus::Fail;
                        e_check.detail = "E touches an endpoint of Y";
                        break;
                    }
            }
        }
    } catch (const PltopError& e) {
        e_check.status = CheckStatus::Fail;
        e_check.detail = e.what();
    }
    r.checks.push_back(e_check);

    // (2) f bijective on D.
    Check bij{"f is bijective on D", CheckStatus::Pass, ""};
    auto b = is_bijective_on(f, D, max_depth);
    if (b.verdict == BijectivityResult::Verdict::No) {
        bij.status = CheckStatus::Fail;
        bij.detail = "witness found";
    } else if (b.verdict == BijectivityResult::Verdict::Undecided) {
        bij.status = CheckStatus::Undecided;
    }
    r.checks.push_back(bij);

    // (3) preimage condition.
    r.checks.push_back(preimage_condition_check(f, X, Y, bd));

    // (4) deg(f_D) = -deg(f restricted to bdY).
    Check deg{"deg(f_D) = -deg(f on bdY)", CheckStatus::Pass, ""};
    try {
        DegreeValue dd = degree_injective_ball_map(restrict_map(f, D));
        std::vector<int> ends = arc_endpoints(Y.simplices);
        int dy;
        if (int(ends.size()) == 2) {
            SimplicialComplex s0;
            s0.dim = 0;
            s0.ambient_dim = X.ambient_dim;
            s0.vertices = X.vertices;
            s0.top_simplices = {{ends[0]}, {ends[1]}};
            PLMap fy = f;
            fy.domain = s0;
            dy = degree_zero_sphere_map(fy).value;
        } else {
            fail(ErrorCode::GeometryError, "bdY is not a 0-sphere");
        }
        if (dd.value != -dy) {
            deg.status = CheckStatus::Fail;
            deg.detail = "deg(f_D) = " + std::to_string(dd.value) + ", deg(f on bdY) = " +
                         std::to_string(dy);
        } else {
            deg.detail = "deg(f_D) = " + std::to_string(dd.value);
        }
    } catch (const PltopError& e) {
        deg.status = CheckStatus::Fail;
        deg.detail = e.what();
    }
    r.checks.push_back(deg);
    r.finalize();
    return r;
}

HypothesisReport check_T48(const PLMap& f, const SimplicialComplex& X, const SubBall& Y,
                           int max_depth) {
    (void)max_depth;
    HypothesisReport r;
    r.theorem = Theorem::T48;
    SimplicialComplex bd = oriented_boundary(X);

    Check inj{"f is injective on X", CheckStatus::Pass, ""};
    auto b = is_injective_on(f, X);
    if (b.verdict != BijectivityResult::Verdict::Yes) {
        inj.status = CheckStatus::Fail;
        inj.detail = "collision witness found";
    }
    r.checks.push_back(inj);

    Check ball = ball_in_boundary_check(bd, Y);
    Check img{"f(Y) equals bdX minus the interior of Y", CheckStatus::Pass, ""};
    if (ball.status != CheckStatus::Pass) {
        img = ball;
    } else {
        auto compl_simps = complement_simplices(bd, Y.simplices);
        std::vector<ConvexBody> compl_bodies = simplex_bodies(X, compl_simps);
        std::vector<ConvexBody> img_bodies;
        for (const auto& s : Y.simplices) {
            std::vector<VecQ> pts;
            for (int v : s) pts.push_back(f.vertex_images[v]);
            img_bodies.push_back(body_from_points(pts));
        }
        for (const auto& ib : img_bodies)
            if (!covered_by(ib, compl_bodies)) {
                img.status = CheckStatus::Fail;
                img.detail = "f(Y) is not contained in bdX minus the interior of Y";
            }
        if (img.status == CheckStatus::Pass)
            for (const auto& cb : compl_bodies)
                if (!covered_by(cb, img_bodies)) {
                    img.status = CheckStatus::Fail;
                    img.detail = "f(Y) does not cover bdX minus the interior of Y";
                }
    }
    r.checks.push_back(img);

    Check deg{"deg(f) = -deg(f on bdY)", CheckStatus::Pass, ""};
    try {
        DegreeValue df = degree_injective_ball_map(f);
        std::vector<int> ends = arc_endpoints(Y.simplices);
        if (int(ends.size()) != 2) fail(ErrorCode::GeometryError, "bdY is not a 0-sphere");
        SimplicialComplex s0;
        s0.dim = 0;
        s0.ambient_dim = X.ambient_dim;
        s0.vertices = X.vertices;
        s0.top_simplices = {{ends[0]}, {ends[1]}};
        PLMap fy = f;
        fy.domain = s0;
        int dy = degree_zero_sphere_map(fy).value;
        if (df.value != -dy) {
            deg.status = CheckStatus::Fail;
            deg.detail = "deg(f) = " + std::to_string(df.value) + ", deg(f on bdY) = " +
                         std::to_string(dy);
        } else {
            deg.detail = "deg(f) = " + std::to_string(df.value);
        }
    } catch (const PltopError& e) {
        deg.status = CheckStatus::Fail;
        deg.detail = e.what();
    }
    r.checks.push_back(deg);
    r.finalize();
    return r;
}

}  // namespace pltop
