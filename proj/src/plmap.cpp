#include "pltop/plmap.hpp"

#include <algorithm>
#include <set>

namespace pltop {

namespace {

std::vector<int> sorted_tuple(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<VecQ> PLMap::simplex_image_points(int s) const {
    return simplex_image_points(domain.top_simplices[s]);
}

std::vector<VecQ> PLMap::simplex_image_points(const std::vector<int>& verts) const {
    std::vector<VecQ> pts;
    for (int v : verts) pts.push_back(vertex_images[v]);
    return pts;
}

ConvexBody PLMap::simplex_image_body(int s) const {
    return body_from_points(simplex_image_points(s));
}

AffineMap PLMap::simplex_affine(int s) const {
    return affine_through(domain.simplex_points(s), simplex_image_points(s));
}

PLMap make_pl_map(SimplicialComplex domain, std::vector<VecQ> images) {
    if (images.size() < domain.vertices.size())
        fail(ErrorCode::MissingVertexImage,
             "have " + std::to_string(images.size()) + " images for " +
                 std::to_string(domain.vertices.size()) + " vertices");
    if (images.size() > domain.vertices.size())
        fail(ErrorCode::ArityMismatch, "more images than vertices");
    if (images.empty()) fail(ErrorCode::MissingVertexImage, "empty image table");
    size_t arity = images[0].size();
    for (const auto& img : images)
        if (img.size() != arity) fail(ErrorCode::ArityMismatch, "mixed image arities");
    PLMap f;
    f.domain = std::move(domain);
    f.target_ambient_dim = int(arity);
    f.vertex_images = std::move(images);
    return f;
}

PLMap make_pl_map(SimplicialComplex domain, const std::map<int, VecQ>& images) {
    std::vector<VecQ> table;
    for (int v = 0; v < int(domain.vertices.size()); ++v) {
        auto it = images.find(v);
        if (it == images.end())
            fail(ErrorCode::MissingVertexImage, "no image for vertex " + std::to_string(v));
        table.push_back(it->second);
    }
    return make_pl_map(std::move(domain), std::move(table));
}

VecQ evaluate(const PLMap& f, const VecQ& x) {
    PointLocation loc = locate_point(f.domain, x);
    if (loc.kind == PointLocation::Kind::Outside)
        fail(ErrorCode::PointOutsideDomain, "evaluation point outside the domain");
    const auto& verts = f.domain.top_simplices[loc.carrier];
    VecQ y(f.target_ambient_dim, Rational(0));
    for (size_t i = 0; i < verts.size(); ++i)
        y = vec_add(y, vec_scale(loc.barycentric[i], f.vertex_images[verts[i]]));
    return y;
}

PLMap restrict_map(const PLMap& f, const SubBall& V) {
    if (!(V.parent == f.domain))
        fail(ErrorCode::NotSubcomplex, "sub-ball belongs to a different parent complex");
    return restrict_map(f, V.as_complex());
}

PLMap restrict_map(const PLMap& f, const SimplicialComplex& sub) {
    if (sub.vertices != f.domain.vertices || !is_subcomplex_of(f.domain, sub.top_simplices))
        fail(ErrorCode::NotSubcomplex, "not a subcomplex of the map's domain");
    PLMap r = f;
    r.domain = sub;
    return r;
}

namespace {

// Indices of g-domain simplices on which g coincides with the affine
// extension of g over simplex tau.
std::vector<ConvexBody> agreement_region(const PLMap& g, int tau) {
    AffineMap gt = g.simplex_affine(tau);
    std::vector<ConvexBody> region;
    for (int s = 0; s < int(g.domain.top_simplices.size()); ++s) {
        bool agrees = true;
        for (int v : g.domain.top_simplices[s])
            if (gt.apply(g.domain.vertices[v]) != g.vertex_images[v]) {
                agrees = false;
                break;
            }
        if (agrees) region.push_back(g.domain.simplex_body(s));
    }
    return region;
}

}  // namespace

PLMap compose(const PLMap& g, const PLMap& f, int refinement_depth) {
    if (f.target_ambient_dim != g.domain.ambient_dim)
        fail(ErrorCode::ArityMismatch, "image arity of f != domain arity of g");
    std::vector<ConvexBody> g_bodies;
    for (int s = 0; s < int(g.domain.top_simplices.size()); ++s)
        g_bodies.push_back(g.domain.simplex_body(s));

    SimplicialComplex cur = f.domain;
    auto images_of = [&](const SimplicialComplex& k) {
        std::vector<VecQ> imgs;
        for (const auto& v : k.vertices) imgs.push_back(evaluate(f, v));
        return imgs;
    };
    std::vector<VecQ> cur_images = f.vertex_images;

    for (int round = 0;; ++round) {
        bool ok = true;
        for (int s = 0; s < int(cur.top_simplices.size()) && ok; ++s) {
            std::vector<VecQ> img_pts;
            for (int v : cur.top_simplices[s]) img_pts.push_back(cur_images[v]);
            ConvexBody img = body_from_points(img_pts);
            // Fast path: image inside one simplex of g's domain.
            bool carried = false;
            for (const auto& gb : g_bodies)
                if (gb.contains_body(img)) {
                    carried = true;
                    break;
                }
            // General path: image covered by a region where g is one affine map.
            if (!carried) {
                for (int tau = 0; tau < int(g_bodies.size()) && !carried; ++tau) {
                    if (!bodies_intersect(g_bodies[tau], img)) continue;
                    auto region = agreement_region(g, tau);
                    if (covered_by(img, region)) carried = true;
                }
            }
            if (!carried) {
                if (!covered_by(img, g_bodies))
                    fail(ErrorCode::ImageEscapesDomain,
                         "image of f leaves the domain of g");
                ok = false;
            }
        }
        if (ok) break;
        if (round == refinement_depth)
            fail(ErrorCode::RefinementExhausted,
                 "no affine carrier in g for some simplex image at max depth");
        cur = barycentric_subdivide(cur, 1);
        cur_images = images_of(cur);
    }

    PLMap h;
    h.domain = std::move(cur);
    h.target_ambient_dim = g.target_ambient_dim;
    for (const auto& y : cur_images) h.vertex_images.push_back(evaluate(g, y));
    return h;
}

bool RegionClassification::all_inside() const {
    return std::all_of(labels.begin(), labels.end(), [](RegionLabel l) {
        return l == RegionLabel::ImageInside || l == RegionLabel::ImageOnBoundary;
    });
}

bool RegionClassification::none_inside() const {
    return std::all_of(labels.begin(), labels.end(),
                       [](RegionLabel l) { return l == RegionLabel::ImageOutside; });
}

RegionClassification classify_against(const PLMap& f, const SimplicialComplex& X, int depth) {
    if (X.dim != X.ambient_dim)
        fail(ErrorCode::GeometryError, "reference complex must be full-dimensional");
    RegionClassification rc;
    rc.refined_domain = barycentric_subdivide(f.domain, depth);
    std::vector<VecQ> images;
    for (const auto& v : rc.refined_domain.vertices) images.push_back(evaluate(f, v));

    std::vector<ConvexBody> x_bodies;
    for (int s = 0; s < int(X.top_simplices.size()); ++s) x_bodies.push_back(X.simplex_body(s));
    SimplicialComplex bd = boundary_subcomplex(X);
    std::vector<ConvexBody> bd_bodies;
    for (int s = 0; s < int(bd.top_simplices.size()); ++s) bd_bodies.push_back(bd.simplex_body(s));

    for (const auto& verts : rc.refined_domain.top_simplices) {
        std::vector<VecQ> img_pts;
        for (int v : verts) img_pts.push_back(images[v]);
        ConvexBody img = body_from_points(img_pts);
        if (covered_by(img, x_bodies)) {
            rc.labels.push_back(covered_by(img, bd_bodies) ? RegionLabel::ImageOnBoundary
                                                           : RegionLabel::ImageInside);
            continue;
        }
        bool meets_interior = false;
        for (const auto& xb : x_bodies) {
            ConvexBody j = img.intersect(xb);
            if (j.nonempty() && !covered_by(j, bd_bodies)) {
                meets_interior = true;
                break;
            }
        }
        rc.labels.push_back(meets_interior ? RegionLabel::Straddles : RegionLabel::ImageOutside);
    }
    return rc;
}

PreimageSandwich preimage_subcomplex(const PLMap& f, const SimplicialComplex& region, int depth) {
    PreimageSandwich ps;
    ps.refined_domain = barycentric_subdivide(f.domain, depth);
    std::vector<VecQ> images;
    for (const auto& v : ps.refined_domain.vertices) images.push_back(evaluate(f, v));
    std::vector<ConvexBody> r_bodies;
    for (int s = 0; s < int(region.top_simplices.size()); ++s)
        r_bodies.push_back(region.simplex_body(s));
    for (int s = 0; s < int(ps.refined_domain.top_simplices.size()); ++s) {
        std::vector<VecQ> img_pts;
        for (int v : ps.refined_domain.top_simplices[s]) img_pts.push_back(images[v]);
        ConvexBody img = body_from_points(img_pts);
        bool meets = false;
        for (const auto& rb : r_bodies)
            if (bodies_intersect(img, rb)) {
                meets = true;
                break;
            }
        if (meets) ps.hull.push_back(s);
        if (meets && covered_by(img, r_bodies)) ps.inner.push_back(s);
    }
    return ps;
}

namespace {

// Preimage of y inside simplex s: barycentric feasibility on the images.
std::optional<VecQ> point_mapping_to(const PLMap& f, int s, const VecQ& y) {
    const auto& verts = f.domain.top_simplices[s];
    int k = int(verts.size());
    std::vector<LinCon> cons;
    VecQ ones(k, Rational(1));
    cons.push_back({ones, Rational(1), true});
    for (int d = 0; d < f.target_ambient_dim; ++d) {
        VecQ row(k);
        for (int i = 0; i < k; ++i) row[i] = f.vertex_images[verts[i]][d];
        cons.push_back({row, y[d], true});
    }
    for (int i = 0; i < k; ++i) {
        VecQ row(k, Rational(0));
        row[i] = 1;
        cons.push_back({row, Rational(0), false});
    }
    auto b = lp_feasible_point(k, cons);
    if (!b) return std::nullopt;
    VecQ x(f.domain.ambient_dim, Rational(0));
    for (int i = 0; i < k; ++i)
        x = vec_add(x, vec_scale((*b)[i], f.domain.vertices[verts[i]]));
    return x;
}

}  // namespace

BijectivityResult is_injective_on(const PLMap& f, const SimplicialComplex& V) {
    // Per-simplex injectivity: a degenerate image folds the simplex.
    for (int s = 0; s < int(V.top_simplices.size()); ++s) {
        const auto& verts = V.top_simplices[s];
        int k = int(verts.size());
        std::vector<VecQ> imgs;
        for (int v : verts) imgs.push_back(f.vertex_images[v]);
        if (affine_dim(imgs) == k - 1) continue;
        // Barycentric direction d with sum 0 and sum d_i img_i = 0.
        MatQ m(f.target_ambient_dim + 1, k);
        for (int i = 0; i < k; ++i) {
            m(0, i) = 1;
            for (int r = 0; r < f.target_ambient_dim; ++r) m(r + 1, i) = imgs[i][r];
        }
        auto ns = m.nullspace();
        if (ns.empty()) fail(ErrorCode::InternalError, "degenerate image without fold direction");
        VecQ d = ns[0];
        Rational maxabs = 0;
        for (const auto& c : d) {
            Rational a = c < 0 ? -c : c;
            if (a > maxabs) maxabs = a;
        }
        Rational eps = Rational(1) / (2 * k * maxabs);
        VecQ x1(V.ambient_dim, Rational(0)), shift(V.ambient_dim, Rational(0));
        for (int i = 0; i < k; ++i) {
            x1 = vec_add(x1, vec_scale(Rational(1, k), V.vertices[verts[i]]));
            shift = vec_add(shift, vec_scale(eps * d[i], V.vertices[verts[i]]));
        }
        VecQ x2 = vec_add(x1, shift);
        BijectivityWitness w;
        w.points = {x1, x2};
        w.image = evaluate(f, x1);
        return {BijectivityResult::Verdict::No, w};
    }
    // Pairwise: image intersections only inside the shared face image.
    for (int a = 0; a < int(V.top_simplices.size()); ++a) {
        std::vector<VecQ> ia;
        for (int v : V.top_simplices[a]) ia.push_back(f.vertex_images[v]);
        ConvexBody ba = body_from_points(ia);
        for (int b = a + 1; b < int(V.top_simplices.size()); ++b) {
            std::vector<VecQ> ib;
            for (int v : V.top_simplices[b]) ib.push_back(f.vertex_images[v]);
            ConvexBody inter = ba.intersect(body_from_points(ib));
            if (!inter.nonempty()) continue;
            std::vector<int> shared;
            for (int v : V.top_simplices[a])
                if (std::find(V.top_simplices[b].begin(), V.top_simplices[b].end(), v) !=
                    V.top_simplices[b].end())
                    shared.push_back(v);
            std::optional<VecQ> y;
            if (shared.empty()) {
                y = inter.any_point();
            } else {
                std::vector<VecQ> shared_imgs;
                for (int v : shared) shared_imgs.push_back(f.vertex_images[v]);
                std::vector<ConvexBody> allowed = {body_from_points(shared_imgs)};
                VecQ w;
                if (!covered_by(inter, allowed, &w)) y = w;
            }
            if (y) {
                PLMap fa = f, fb = f;
                fa.domain = V;
                fb.domain = V;
                auto xa = point_mapping_to(fa, a, *y);
                auto xb = point_mapping_to(fb, b, *y);
                if (!xa || !xb) fail(ErrorCode::InternalError, "lost collision preimage");
                BijectivityWitness w;
                w.points = {*xa, *xb};
                w.image = *y;
                return {BijectivityResult::Verdict::No, w};
            }
        }
    }
    return {BijectivityResult::Verdict::Yes, std::nullopt};
}

BijectivityResult is_bijective_on(const PLMap& f, const SubBall& V, int depth) {
    (void)depth;  // condition (b) is decided exactly, no refinement needed
    if (!(V.parent == f.domain))
        fail(ErrorCode::NotSubcomplex, "sub-ball belongs to a different parent complex");
    auto inj = is_injective_on(f, V.as_complex());
    if (inj.verdict != BijectivityResult::Verdict::Yes) return inj;

    // Condition (b): f^{-1}(f(V)) = V. For each domain simplex sigma and
    // each image simplex f(tau), tau in V, the set
    // {x in sigma : f(x) in f(tau)} must lie in V; it is a polytope in
    // x-space via the affine extension of f on sigma.
    std::set<std::vector<int>> v_set;
    for (const auto& s : V.simplices) v_set.insert(sorted_tuple(s));
    std::vector<ConvexBody> v_bodies;
    for (const auto& s : V.simplices) v_bodies.push_back(body_from_points(f.domain.simplex_points(s)));
    std::vector<ConvexBody> image_bodies;
    for (const auto& s : V.simplices)
        image_bodies.push_back(body_from_points(f.simplex_image_points(s)));

    for (int s = 0; s < int(f.domain.top_simplices.size()); ++s) {
        if (v_set.count(sorted_tuple(f.domain.top_simplices[s]))) continue;
        ConvexBody sigma = f.domain.simplex_body(s);
        AffineMap A = f.simplex_affine(s);
        for (const auto& tb : image_bodies) {
            ConvexBody p = sigma;
            for (const auto& con : tb.constraints()) {
                // a.(Ax + b0) >= b  ->  (A^T a).x >= b - a.b0
                VecQ a = A.A.transpose().mul(con.a);
                Rational b = con.b - dot(con.a, A.b);
                p.add({a, b, con.equality});
            }
            VecQ w;
            if (!covered_by(p, v_bodies, &w)) {
                BijectivityWitness bw;
                bw.points = {w};
                bw.image = evaluate(f, w);
                return {BijectivityResult::Verdict::No, bw};
            }
        }
    }
    return {BijectivityResult::Verdict::Yes, std::nullopt};
}

}  // namespace pltop
