#include "pltop/body.hpp"

#include <algorithm>
#include <cassert>

namespace pltop {

ConvexBody ConvexBody::intersect(const ConvexBody& other) const {
    assert(dim_ == other.dim_);
    ConvexBody r = *this;
    for (const auto& c : other.cons_) r.cons_.push_back(c);
    return r;
}

bool ConvexBody::nonempty() const {
    return lp_feasible_point(dim_, cons_).has_value();
}

std::optional<VecQ> ConvexBody::any_point() const {
    return lp_feasible_point(dim_, cons_);
}

std::optional<VecQ> ConvexBody::interior_point() const {
    // Max t with slack t on every inequality, capped so the LP stays bounded.
    int n = dim_ + 1;
    std::vector<LinCon> cons;
    for (const auto& c : cons_) {
        LinCon cc = c;
        cc.a.resize(n, Rational(0));
        if (!c.equality) cc.a[dim_] = -1;  // a.x - t >= b
        cons.push_back(std::move(cc));
    }
    LinCon cap;
    cap.a.assign(n, Rational(0));
    cap.a[dim_] = -1;
    cap.b = -1;  // t <= 1
    cons.push_back(cap);
    VecQ obj(n, Rational(0));
    obj[dim_] = 1;
    LPResult r = lp_maximize(n, cons, obj);
    if (r.status != LPResult::Status::Optimal || r.value <= 0) return std::nullopt;
    VecQ x(r.point.begin(), r.point.begin() + dim_);
    return x;
}

Rational ConvexBody::min_along(const VecQ& dir) const {
    LPResult r = lp_minimize(dim_, cons_, dir);
    assert(r.status == LPResult::Status::Optimal);
    return r.value;
}

Rational ConvexBody::max_along(const VecQ& dir) const {
    LPResult r = lp_maximize(dim_, cons_, dir);
    assert(r.status == LPResult::Status::Optimal);
    return r.value;
}

bool ConvexBody::contains_point(const VecQ& x) const {
    for (const auto& c : cons_) {
        Rational v = dot(c.a, x);
        if (c.equality ? (v != c.b) : (v < c.b)) return false;
    }
    return true;
}

bool ConvexBody::contains_body(const ConvexBody& other) const {
    if (!other.nonempty()) return true;
    for (const auto& c : cons_) {
        if (other.min_along(c.a) < c.b) return false;
        if (c.equality && other.max_along(c.a) > c.b) return false;
    }
    return true;
}

ConvexBody body_from_points(const std::vector<VecQ>& pts) {
    assert(!pts.empty());
    int d = int(pts[0].size());
    ConvexBody body(d);

    std::vector<VecQ> distinct;
    for (const auto& p : pts)
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);

    // Affine-hull equalities: u.(p_i - p_0) = 0 for nullspace vectors u of W^T.
    std::vector<VecQ> edges;
    for (size_t i = 1; i < distinct.size(); ++i) edges.push_back(vec_sub(distinct[i], distinct[0]));
    int r = edges.empty() ? 0 : MatQ::from_columns(edges).rank();
    if (r < d) {
        MatQ Wt(int(edges.size()), d);
        for (int i = 0; i < int(edges.size()); ++i)
            for (int j = 0; j < d; ++j) Wt(i, j) = edges[i][j];
        std::vector<VecQ> normals =
            edges.empty() ? [&] {
                std::vector<VecQ> basis;
                for (int j = 0; j < d; ++j) {
                    VecQ e(d, Rational(0));
                    e[j] = 1;
                    basis.push_back(e);
                }
                return basis;
            }()
                          : Wt.nullspace();
        for (const auto& u : normals) body.add_equality(u, dot(u, distinct[0]));
    }
    if (r == 0) return body;

    // Parameter coordinates in the hull's own frame.
    std::vector<VecQ> frame;
    {
        // Greedy independent subset of the edges.
        MatQ probe(0, 0);
        for (const auto& e : edges) {
            std::vector<VecQ> trial = frame;
            trial.push_back(e);
            if (MatQ::from_columns(trial).rank() == int(trial.size())) frame.push_back(e);
            if (int(frame.size()) == r) break;
        }
    }
    MatQ W = MatQ::from_columns(frame);
    MatQ Wt = W.transpose();
    MatQ gram = Wt.mul(W);
    // M = gram^{-1} Wt maps x - p0 to frame coordinates.
    MatQ M(r, d);
    for (int c = 0; c < d; ++c) {
        VecQ col(r);
        for (int i = 0; i < r; ++i) col[i] = Wt(i, c);
        auto sol = gram.solve(col);
        assert(sol);
        for (int i = 0; i < r; ++i) M(i, c) = (*sol)[i];
    }
    std::vector<VecQ> params;
    for (const auto& p : distinct) params.push_back(M.mul(vec_sub(p, distinct[0])));

    // Facets: every (r-1)-dimensional subset spanning a one-sided hyperplane.
    int npts = int(distinct.size());
    std::vector<int> subset(r);
    std::vector<std::vector<int>> subsets;
    // Enumerate r-subsets of indices.
    {
        std::vector<int> idx(r);
        auto recurse = [&](auto&& self, int start, int depth) -> void {
            if (depth == r) { subsets.push_back(idx); return; }
            for (int i = start; i < npts; ++i) { idx[depth] = i; self(self, i + 1, depth + 1); }
        };
        recurse(recurse, 0, 0);
    }
    for (const auto& sub : subsets) {
        std::vector<VecQ> span_pts;
        for (int i : sub) span_pts.push_back(params[i]);
        if (affine_dim(span_pts) != r - 1) continue;
        // Normal in param space: nullspace of the edge rows.
        MatQ E(r - 1, r);
        for (int i = 1; i < r; ++i) {
            VecQ e = vec_sub(span_pts[i], span_pts[0]);
            for (int j = 0; j < r; ++j) E(i - 1, j) = e[j];
        }
        auto ns = E.nullspace();
        if (ns.size() != 1) continue;
        VecQ n = ns[0];
        Rational b0 = dot(n, span_pts[0]);
        bool any_above = false, any_below = false;
        for (const auto& y : params) {
            Rational v = dot(n, y);
            if (v > b0) any_above = true;
            if (v < b0) any_below = true;
        }
        if (any_above && any_below) continue;
        if (any_below) {
            for (auto& c : n) c = -c;
            b0 = -b0;
        }
        // n.y >= b0 in param space; pull back: y = M (x - p0).
        VecQ a = M.transpose().mul(n);
        Rational b = b0 + dot(a, distinct[0]);
        body.add_halfspace(a, b);
    }
    return body;
}

bool bodies_intersect(const ConvexBody& a, const ConvexBody& b) {
    return a.intersect(b).nonempty();
}

namespace {

bool covered_rec(const ConvexBody& c, std::span<const ConvexBody> pieces, size_t idx,
                 VecQ* witness) {
    auto ip = c.interior_point();
    if (!ip) return true;  // measure zero (or empty)
    if (idx == pieces.size()) {
        if (witness) *witness = *ip;
        return false;
    }
    const ConvexBody& p = pieces[idx];
    if (!bodies_intersect(c, p)) return covered_rec(c, pieces, idx + 1, witness);

    std::vector<ConvexBody> parts;
    for (const auto& con : p.constraints()) {
        if (c.min_along(con.a) < con.b) {
            ConvexBody part = c;
            VecQ neg(con.a.size());
            for (size_t i = 0; i < con.a.size(); ++i) neg[i] = -con.a[i];
            part.add_halfspace(neg, -con.b);  // a.x <= b side
            parts.push_back(std::move(part));
        }
        if (con.equality && c.max_along(con.a) > con.b) {
            ConvexBody part = c;
            part.add_halfspace(con.a, con.b);
            parts.push_back(std::move(part));
        }
    }
    if (parts.empty()) return true;  // c satisfies every constraint of p
    for (const auto& part : parts)
        if (!covered_rec(part, pieces, idx + 1, witness)) return false;
    return true;
}

}  // namespace

bool covered_by(const ConvexBody& c, std::span<const ConvexBody> pieces, VecQ* witness) {
    if (!c.nonempty()) return true;
    // Promote implicit equalities so interior_point yields relative-interior
    // points; with that, measure-zero tolerance in the recursion coincides
    // with exact containment of the closed body.
    ConvexBody cc(c.dim());
    for (const auto& con : c.constraints()) {
        if (!con.equality && c.max_along(con.a) == con.b)
            cc.add_equality(con.a, con.b);
        else
            cc.add(con);
    }
    return covered_rec(cc, pieces, 0, witness);
}

}  // namespace pltop
