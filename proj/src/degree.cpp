#include "pltop/degree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pltop {

namespace {

int permutation_parity(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> perm;
    for (int x : from) {
        auto it = std::find(to.begin(), to.end(), x);
        if (it == to.end()) fail(ErrorCode::InternalError, "parity of non-permutation");
        perm.push_back(int(it - to.begin()));
    }
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

Rational rational_floor(const Rational& r) {
    Integer num = numerator(r), den = denominator(r);
    Integer q = num / den;  // truncates toward zero
    if (q * den > num) --q;
    return Rational(q);
}

Rational mod_length(const Rational& p, const Rational& len) {
    Rational f = rational_floor(p / len);
    return p - f * len;
}

std::vector<int> sorted_tuple(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

const char* degree_method_name(DegreeMethod m) {
    switch (m) {
        case DegreeMethod::SphereCyclePushforward: return "SphereCyclePushforward";
        case DegreeMethod::RegularValueCount: return "RegularValueCount";
        case DegreeMethod::BoundaryRestriction: return "BoundaryRestriction";
        case DegreeMethod::OrientationSign: return "OrientationSign";
        case DegreeMethod::SphereInjection: return "SphereInjection";
        case DegreeMethod::ZeroSphere: return "ZeroSphere";
    }
    return "?";
}

CircleParam::CircleParam(const SimplicialComplex& circle) : circle_(circle) {
    if (circle.dim != 1) fail(ErrorCode::GeometryError, "not a 1-complex");
    if (!circle.orientation) fail(ErrorCode::OrientationMissing, "circle must be oriented");
    std::map<int, int> next;  // tail -> head along the coherent direction
    for (size_t i = 0; i < circle.top_simplices.size(); ++i) {
        int a = circle.top_simplices[i][0], b = circle.top_simplices[i][1];
        if ((*circle.orientation)[i] < 0) std::swap(a, b);
        if (next.count(a)) fail(ErrorCode::GeometryError, "not a simple cycle");
        next[a] = b;
    }
    int start = next.begin()->first;
    for (auto& [a, b] : next)
        if (a < start) start = a;
    int cur = start;
    do {
        order_.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) fail(ErrorCode::GeometryError, "cycle is not closed");
        cur = it->second;
    } while (cur != start && order_.size() <= next.size());
    if (order_.size() != next.size()) fail(ErrorCode::NotConnected, "circle is not one cycle");
}

VecQ CircleParam::point_at(const Rational& param) const {
    Rational p = mod_length(param, length());
    Rational fl = rational_floor(p);
    int i = int(static_cast<long>(numerator(fl)));
    Rational t = p - fl;
    const VecQ& a = circle_.vertices[order_[i]];
    const VecQ& b = circle_.vertices[order_[(i + 1) % order_.size()]];
    return vec_add(a, vec_scale(t, vec_sub(b, a)));
}

Rational CircleParam::param_of(const VecQ& x) const {
    int m = int(order_.size());
    for (int i = 0; i < m; ++i) {
        const VecQ& a = circle_.vertices[order_[i]];
        const VecQ& b = circle_.vertices[order_[(i + 1) % m]];
        auto bc = barycentric_coords({a, b}, x);
        if (!bc) continue;
        Rational t = (*bc)[1];
        if (t < 0 || t >= 1) continue;
        return Rational(i) + t;
    }
    // x might be the closing vertex seen only as t == 1 of the last edge.
    if (x == circle_.vertices[order_[0]]) return 0;
    fail(ErrorCode::GeometryError, "point does not lie on the circle");
}

DegreeValue degree_sphere_map(const PLMap& f, const SimplicialComplex& T) {
    const SimplicialComplex& S = f.domain;
    if (S.dim != T.dim) fail(ErrorCode::ArityMismatch, "sphere dimensions differ");
    if (!S.orientation || !T.orientation)
        fail(ErrorCode::OrientationMissing, "both spheres must be coherently oriented");

    std::map<VecQ, int> t_vertex;
    for (int v = 0; v < int(T.vertices.size()); ++v) t_vertex[T.vertices[v]] = v;
    std::map<std::vector<int>, int> t_simplex;
    for (int s = 0; s < int(T.top_simplices.size()); ++s)
        t_simplex[sorted_tuple(T.top_simplices[s])] = s;

    std::vector<long long> coeff(T.top_simplices.size(), 0);
    struct Carried {
        int src;
        int tgt;
        int sign;  // o_S * parity * o_T
    };
    std::vector<Carried> carried;
    for (int s = 0; s < int(S.top_simplices.size()); ++s) {
        std::vector<int> ids;
        for (int v : S.top_simplices[s]) {
            auto it = t_vertex.find(f.vertex_images[v]);
            if (it == t_vertex.end())
                fail(ErrorCode::NotSimplicial, "a vertex image is not a vertex of the target");
            ids.push_back(it->second);
        }
        std::set<int> uniq(ids.begin(), ids.end());
        if (uniq.size() != ids.size()) continue;  // degenerate, contributes 0
        auto it = t_simplex.find(sorted_tuple(ids));
        if (it == t_simplex.end())
            fail(ErrorCode::NotSimplicial, "a simplex image is not a simplex of the target");
        int tgt = it->second;
        int sign = (*S.orientation)[s] * permutation_parity(ids, T.top_simplices[tgt]) *
                   (*T.orientation)[tgt];
        coeff[tgt] += (*S.orientation)[s] * permutation_parity(ids, T.top_simplices[tgt]);
        carried.push_back({s, tgt, sign});
    }
    // The pushforward of the fundamental cycle must be lambda times the
    // target's fundamental cycle.
    long long lambda = coeff[0] * (*T.orientation)[0];
    for (int t = 1; t < int(T.top_simplices.size()); ++t)
        if (coeff[t] * (*T.orientation)[t] != lambda)
            fail(ErrorCode::InternalError, "pushforward is not a multiple of the target cycle");

    // Independent route: signed count of preimages of a regular value, the
    // barycenter of the lexicographically first target simplex.
    int tgt0 = 0;
    for (int t = 1; t < int(T.top_simplices.size()); ++t)
        if (sorted_tuple(T.top_simplices[t]) < sorted_tuple(T.top_simplices[tgt0])) tgt0 = t;
    VecQ b(T.ambient_dim, Rational(0));
    for (int v : T.top_simplices[tgt0]) b = vec_add(b, T.vertices[v]);
    b = vec_scale(Rational(1, int(T.top_simplices[tgt0].size())), b);
    long long count = 0;
    for (const auto& c : carried) {
        auto bc = barycentric_coords(f.simplex_image_points(c.src), b);
        if (!bc) continue;
        bool interior = true;
        for (const auto& w : *bc)
            if (w <= 0) { interior = false; break; }
        if (interior) count += c.sign;
    }
    if (count != lambda)
        fail(ErrorCode::InternalError, "regular-value count disagrees with pushforward");

    DegreeValue d;
    d.value = int(lambda);
    d.method = DegreeMethod::SphereCyclePushforward;
    d.provenance = "fundamental-cycle pushforward; confirmed by signed preimage count of a "
                   "regular value";
    return d;
}

DegreeValue degree_zero_sphere_map(const PLMap& f) {
    if (f.domain.dim != 0 || f.domain.top_simplices.size() != 2)
        fail(ErrorCode::GeometryError, "domain is not a two-point space");
    int u = f.domain.top_simplices[0][0];
    int v = f.domain.top_simplices[1][0];
    const VecQ& pu = f.domain.vertices[u];
    const VecQ& pv = f.domain.vertices[v];
    const VecQ& fu = f.vertex_images[u];
    const VecQ& fv = f.vertex_images[v];
    DegreeValue d;
    d.method = DegreeMethod::ZeroSphere;
    if (fu == pu && fv == pv) {
        d.value = 1;
        d.provenance = "two-point map fixing both points";
        return d;
    }
    if (fu == pv && fv == pu) {
        d.value = -1;
        d.provenance = "two-point map swapping the points";
        return d;
    }
    fail(ErrorCode::NotBijection, "map is not a bijection of the two-point space");
}

DegreeValue degree_relative_ball_map(const PLMap& f) {
    SimplicialComplex Y = f.domain;
    if (Y.dim != Y.ambient_dim)
        fail(ErrorCode::GeometryError, "ball must be full-dimensional");
    if (!Y.orientation) Y = orient(Y);

    RegionClassification rc = classify_against(f, Y, 0);
    if (!rc.all_inside())
        fail(ErrorCode::BoundaryNotPreserved, "image of the ball leaves the ball");

    SimplicialComplex bd = boundary_subcomplex(Y);
    std::vector<ConvexBody> bd_bodies;
    for (int s = 0; s < int(bd.top_simplices.size()); ++s) bd_bodies.push_back(bd.simplex_body(s));
    for (const auto& face : bd.top_simplices) {
        std::vector<VecQ> img;
        for (int v : face) img.push_back(f.vertex_images[v]);
        if (!covered_by(body_from_points(img), bd_bodies))
            fail(ErrorCode::BoundaryNotPreserved, "image of the boundary leaves the boundary");
    }

    PLMap f_bd = f;
    f_bd.domain = bd;
    DegreeValue inner;
    if (bd.dim == 0) {
        inner = degree_zero_sphere_map(f_bd);
    } else {
        try {
            inner = degree_sphere_map(f_bd, bd);
        } catch (const PltopError& e) {
            if (e.code() != ErrorCode::NotSimplicial || bd.dim != 1) throw;
            SimplicialCircleModel m = simplicialize_circle_map(f_bd, bd);
            inner = degree_sphere_map(m.map, m.target);
        }
    }
    DegreeValue d;
    d.value = inner.value;
    d.method = DegreeMethod::BoundaryRestriction;
    d.provenance = "restriction to the boundary sphere; " + inner.provenance;
    return d;
}

DegreeValue degree_injective_ball_map(const PLMap& h) {
    const SimplicialComplex& V = h.domain;
    if (V.dim != V.ambient_dim || V.ambient_dim != h.target_ambient_dim)
        fail(ErrorCode::GeometryError, "need a full-dimensional ball mapped into its own space");
    auto inj = is_injective_on(h, V);
    if (inj.verdict != BijectivityResult::Verdict::Yes)
        fail(ErrorCode::NotInjective, "map is not injective on the ball");

    int common = 0;
    for (int s = 0; s < int(V.top_simplices.size()); ++s) {
        const auto& verts = V.top_simplices[s];
        MatQ dom(V.ambient_dim, V.dim), img(V.ambient_dim, V.dim);
        for (int i = 1; i <= V.dim; ++i) {
            VecQ de = vec_sub(V.vertices[verts[i]], V.vertices[verts[0]]);
            VecQ ie = vec_sub(h.vertex_images[verts[i]], h.vertex_images[verts[0]]);
            for (int r = 0; r < V.ambient_dim; ++r) {
                dom(r, i - 1) = de[r];
                img(r, i - 1) = ie[r];
            }
        }
        int sign = sgn(dom.det()) * sgn(img.det());
        if (sign == 0) fail(ErrorCode::NotInjective, "a simplex image is degenerate");
        if (common == 0) common = sign;
        if (sign != common)
            fail(ErrorCode::InconsistentSigns, "orientation signs disagree across simplices");
    }
    DegreeValue d;
    d.value = common;
    d.method = DegreeMethod::OrientationSign;
    d.provenance = "orientation sign common to every simplex of the injective map";
    return d;
}

namespace {

// Arc on the circle as a parameter interval [start, start + len], len < L.
struct Arc {
    Rational start;
    Rational len;
};

bool in_ccw_arc(const Rational& a, const Rational& b, const Rational& x, const Rational& L) {
    // x lies on the arc running from a counterclockwise to b.
    Rational db = mod_length(b - a, L);
    Rational dx = mod_length(x - a, L);
    return dx <= db;
}

// Gaps of the circle not covered by the given arcs.
std::vector<Arc> free_gaps(std::vector<Arc> arcs, const Rational& L) {
    // Split wrap-around arcs, merge, and complement.
    std::vector<std::pair<Rational, Rational>> segs;  // [lo, hi] within [0, L]
    for (auto& a : arcs) {
        Rational s = mod_length(a.start, L);
        if (s + a.len <= L) {
            segs.push_back({s, s + a.len});
        } else {
            segs.push_back({s, L});
            segs.push_back({Rational(0), s + a.len - L});
        }
    }
    std::sort(segs.begin(), segs.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& seg : segs) {
        if (!merged.empty() && seg.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, seg.second);
        else
            merged.push_back(seg);
    }
    std::vector<Arc> gaps;
    if (merged.empty()) {
        gaps.push_back({Rational(0), L});
        return gaps;
    }
    for (size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i + 1].first > merged[i].second)
            gaps.push_back({merged[i].second, merged[i + 1].first - merged[i].second});
    // Wrap gap from the last segment back to the first.
    Rational tail = L - merged.back().second + merged.front().first;
    if (tail > 0) gaps.push_back({merged.back().second, tail});
    return gaps;
}

}  // namespace

DegreeValue degree_sphere_injection(const PLMap& h, const SimplicialComplex& S) {
    if (S.dim != 1)
        fail(ErrorCode::GeometryError, "sphere injections are supported on 1-spheres");
    SimplicialComplex SS = S.orientation ? S : orient(S);
    CircleParam cp(SS);
    const Rational L = cp.length();

    const SimplicialComplex& V = h.domain;
    if (V.dim != 1) fail(ErrorCode::GeometryError, "domain must be an arc complex");
    auto inj = is_injective_on(h, V);
    if (inj.verdict != BijectivityResult::Verdict::Yes)
        fail(ErrorCode::NotInjective, "map is not injective on the arc");

    // One choice of (D, chart cut): D a parameter sub-interval of one domain
    // edge; the chart cuts the circle at a point w outside D and h(D).
    auto try_choice = [&](int edge, const Rational& lo_frac, const Rational& hi_frac,
                          bool second_gap) -> std::optional<int> {
        const VecQ& a = V.vertices[V.top_simplices[edge][0]];
        const VecQ& b = V.vertices[V.top_simplices[edge][1]];
        Rational pa = cp.param_of(a);
        Rational pm_edge = cp.param_of(vec_scale(Rational(1, 2), vec_add(a, b)));
        Rational pb = cp.param_of(b);
        // Direction and span of the edge along the circle.
        Rational span = mod_length(pb - pa, L);
        bool forward = in_ccw_arc(pa, pb, pm_edge, L) && span != 0;
        if (!forward) span = mod_length(pa - pb, L);
        Rational start = forward ? pa : pb;
        // D as a parameter interval inside the edge.
        Rational d0 = start + lo_frac * span;
        Rational d1 = start + hi_frac * span;
        VecQ x0 = cp.point_at(d0), x1 = cp.point_at(d1);
        VecQ xm = cp.point_at((d0 + d1) / 2);
        Rational q0 = cp.param_of(evaluate(h, x0));
        Rational q1 = cp.param_of(evaluate(h, x1));
        Rational qm = cp.param_of(evaluate(h, xm));
        Arc image_arc;
        if (in_ccw_arc(q0, q1, qm, L))
            image_arc = {q0, mod_length(q1 - q0, L)};
        else
            image_arc = {q1, mod_length(q0 - q1, L)};
        auto gaps = free_gaps({{d0, d1 - d0}, image_arc}, L);
        if (gaps.empty()) return std::nullopt;
        const Arc& g = second_gap && gaps.size() > 1 ? gaps[1] : gaps[0];
        Rational w = second_gap && gaps.size() == 1 ? g.start + g.len * Rational(2, 3)
                                                    : g.start + g.len / 3;

        // Split D where it or its image crosses a circle vertex, so the
        // chart conjugate is affine piecewise.
        std::set<Rational> cuts = {d0, d1};
        for (Rational j = rational_floor(d0) + 1; j < d1; j += 1)
            if (j > d0) cuts.insert(j);
        // Preimages of circle vertices interior to the image segment.
        VecQ y0 = evaluate(h, x0), y1 = evaluate(h, x1);
        if (y0 != y1) {
            for (int jv = 0; jv < cp.edge_count(); ++jv) {
                const VecQ& p = SS.vertices[cp.vertex_at(jv)];
                auto bc = barycentric_coords({y0, y1}, p);
                if (!bc) continue;
                Rational t = (*bc)[1];
                if (t <= 0 || t >= 1) continue;
                // Map back through the affine edge map: x(t) on [x0, x1].
                VecQ x = vec_add(x0, vec_scale(t, vec_sub(x1, x0)));
                cuts.insert(mod_length(cp.param_of(x) - d0, L) + d0);
            }
        }
        std::vector<Rational> pts(cuts.begin(), cuts.end());
        // Chart values: u -> (u - w) mod L, continuous on D and h(D).
        std::vector<VecQ> verts;
        std::vector<VecQ> imgs;
        for (const auto& t : pts) {
            verts.push_back({mod_length(t - w, L)});
            imgs.push_back({mod_length(cp.param_of(evaluate(h, cp.point_at(t))) - w, L)});
        }
        std::vector<std::vector<int>> edges;
        for (size_t i = 0; i + 1 < pts.size(); ++i) edges.push_back({int(i), int(i + 1)});
        SimplicialComplex dom = build_complex(1, verts, edges);
        PLMap conj = make_pl_map(std::move(dom), imgs);
        return degree_injective_ball_map(conj).value;
    };

    std::vector<int> results;
    struct Candidate {
        int edge;
        Rational lo, hi;
        bool second;
    };
    std::vector<Candidate> cands;
    int ne = int(V.top_simplices.size());
    for (int shrink = 0; shrink < 4 && int(results.size()) < 2; ++shrink) {
        Rational half_width = Rational(1, 2 << shrink);
        Rational lo = Rational(1, 2) - half_width;
        Rational hi = Rational(1, 2) + half_width;
        for (int e = 0; e < ne && int(results.size()) < 2; ++e) {
            bool second = !results.empty();
            auto r = try_choice(e, lo, hi, second);
            if (r) results.push_back(*r);
        }
    }
    if (results.size() < 2)
        fail(ErrorCode::NoRoomOnSphere, "could not find two admissible (ball, chart) choices");
    if (results[0] != results[1])
        fail(ErrorCode::ChoiceDisagreement, "two admissible choices give different degrees");
    DegreeValue d;
    d.value = results[0];
    d.method = DegreeMethod::SphereInjection;
    d.provenance = "chart conjugation of the injection; two independent choices agree";
    return d;
}

Suspension suspend(const PLMap& f, const SimplicialComplex& T) {
    const SimplicialComplex& K = f.domain;
    if (K.dim != T.dim) fail(ErrorCode::ArityMismatch, "sphere dimensions differ");
    std::map<VecQ, int> t_vertex;
    for (int v = 0; v < int(T.vertices.size()); ++v) t_vertex[T.vertices[v]] = v;
    for (int v = 0; v < int(K.vertices.size()); ++v)
        if (!t_vertex.count(f.vertex_images[v]))
            fail(ErrorCode::NotSimplicial, "map must be simplicial before suspension");

    auto lift = [](const SimplicialComplex& k) {
        std::vector<VecQ> verts;
        for (const auto& v : k.vertices) {
            VecQ w = v;
            w.push_back(0);
            verts.push_back(w);
        }
        VecQ north(k.ambient_dim + 1, Rational(0)), south(k.ambient_dim + 1, Rational(0));
        north.back() = 1;
        south.back() = -1;
        int np = int(verts.size());
        verts.push_back(north);
        verts.push_back(south);
        std::vector<std::vector<int>> tops;
        for (const auto& s : k.top_simplices) {
            std::vector<int> up = s, down = s;
            up.push_back(np);
            down.push_back(np + 1);
            tops.push_back(up);
            tops.push_back(down);
        }
        return orient(build_complex(k.ambient_dim + 1, verts, tops));
    };

    Suspension out;
    out.SK = lift(K);
    out.ST = lift(T);
    PLMap sf;
    sf.domain = out.SK;
    sf.target_ambient_dim = T.ambient_dim + 1;
    for (int v = 0; v < int(K.vertices.size()); ++v) {
        VecQ w = f.vertex_images[v];
        w.push_back(0);
        sf.vertex_images.push_back(w);
    }
    VecQ north(T.ambient_dim + 1, Rational(0)), south(T.ambient_dim + 1, Rational(0));
    north.back() = 1;
    south.back() = -1;
    sf.vertex_images.push_back(north);
    sf.vertex_images.push_back(south);
    out.Sf = std::move(sf);
    return out;
}

PLMap make_reflection(const SimplicialComplex& K) {
    std::map<VecQ, int> index;
    for (int v = 0; v < int(K.vertices.size()); ++v) index[K.vertices[v]] = v;
    std::vector<VecQ> images;
    for (const auto& v : K.vertices) {
        VecQ w = v;
        w.back() = -w.back();
        if (!index.count(w))
            fail(ErrorCode::NotSymmetric,
                 "vertex set is not closed under last-coordinate negation");
        images.push_back(w);
    }
    PLMap f;
    f.domain = K;
    f.target_ambient_dim = K.ambient_dim;
    f.vertex_images = std::move(images);
    return f;
}

SimplicialCircleModel simplicialize_circle_map(const PLMap& f, const SimplicialComplex& T) {
    SimplicialComplex S = f.domain.orientation ? f.domain : orient(f.domain);
    SimplicialComplex TT = T.orientation ? T : orient(T);
    if (S.dim != 1 || TT.dim != 1) fail(ErrorCode::GeometryError, "circle maps only");
    CircleParam cp(TT);
    int m = cp.edge_count();

    // Enlarged target vertex set: T's vertices plus all domain-vertex images.
    std::map<VecQ, int> known;
    for (int v = 0; v < int(TT.vertices.size()); ++v) known[TT.vertices[v]] = v;
    std::vector<VecQ> t_verts = TT.vertices;
    std::vector<std::vector<Rational>> edge_cuts(m);  // fractional t per directed edge
    std::set<int> used;
    for (const auto& s : S.top_simplices)
        for (int v : s) used.insert(v);
    for (int v : used) {
        const VecQ& p = f.vertex_images[v];
        if (known.count(p)) continue;
        Rational q = cp.param_of(p);
        Rational fl = rational_floor(q);
        int e = int(static_cast<long>(numerator(fl)));
        known[p] = int(t_verts.size());
        t_verts.push_back(p);
        edge_cuts[e].push_back(q - fl);
    }

    SimplicialCircleModel out;
    out.target.dim = 1;
    out.target.ambient_dim = TT.ambient_dim;
    out.target.vertices = t_verts;
    std::vector<int> t_signs;
    for (int e = 0; e < m; ++e) {
        std::sort(edge_cuts[e].begin(), edge_cuts[e].end());
        int a = cp.vertex_at(e);
        int b = cp.vertex_at(e + 1);
        int prev = a;
        for (const auto& t : edge_cuts[e]) {
            VecQ p = vec_add(TT.vertices[a],
                             vec_scale(t, vec_sub(TT.vertices[b], TT.vertices[a])));
            int id = known.at(p);
            out.target.top_simplices.push_back({prev, id});
            t_signs.push_back(1);
            prev = id;
        }
        out.target.top_simplices.push_back({prev, b});
        t_signs.push_back(1);
    }
    out.target.orientation = t_signs;

    // Refine the source: insert preimages of every enlarged target vertex.
    out.source.dim = 1;
    out.source.ambient_dim = S.ambient_dim;
    out.source.vertices = S.vertices;
    std::vector<int> s_signs;
    std::vector<VecQ> images = f.vertex_images;
    for (size_t si = 0; si < S.top_simplices.size(); ++si) {
        int u = S.top_simplices[si][0], v = S.top_simplices[si][1];
        int sign = (*S.orientation)[si];
        const VecQ& A = f.vertex_images[u];
        const VecQ& B = f.vertex_images[v];
        std::vector<std::pair<Rational, VecQ>> splits;  // (t along the edge, target point)
        if (A != B) {
            for (const auto& p : t_verts) {
                auto bc = barycentric_coords({A, B}, p);
                if (!bc) continue;
                Rational t = (*bc)[1];
                if (t <= 0 || t >= 1) continue;
                splits.push_back({t, p});
            }
            std::sort(splits.begin(), splits.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        int prev = u;
        for (const auto& [t, p] : splits) {
            VecQ x = vec_add(S.vertices[u],
                             vec_scale(t, vec_sub(S.vertices[v], S.vertices[u])));
            int id = int(out.source.vertices.size());
            out.source.vertices.push_back(x);
            images.push_back(p);
            out.source.top_simplices.push_back({prev, id});
            s_signs.push_back(sign);
            prev = id;
        }
        out.source.top_simplices.push_back({prev, v});
        s_signs.push_back(sign);
    }
    out.source.orientation = s_signs;

    out.map.domain = out.source;
    out.map.target_ambient_dim = f.target_ambient_dim;
    out.map.vertex_images = std::move(images);
    return out;
}

}  // namespace pltop
