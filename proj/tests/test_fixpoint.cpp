#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "pltop/fixpoint.hpp"

using namespace pltop;
using namespace testutil;

namespace {

PLMap linear_map(const SimplicialComplex& k, const Rational& a00, const Rational& a01,
                 const Rational& a10, const Rational& a11, const VecQ& b) {
    std::vector<VecQ> imgs;
    for (const auto& v : k.vertices)
        imgs.push_back({a00 * v[0] + a01 * v[1] + b[0], a10 * v[0] + a11 * v[1] + b[1]});
    return make_pl_map(k, imgs);
}

}  // namespace

TEST_CASE("rotation fixes only the center") {
    SimplicialComplex oct = octagon_disk();
    PLMap rot = linear_map(oct, -1, 0, 0, -1, {Q("0"), Q("0")});
    FixedPointSet fix = exact_pl_fixed_points(rot, oct);
    REQUIRE(fix.components.size() == 1);
    CHECK(fix.components[0].kind == FixedPointComponent::Kind::Point);
    CHECK(fix.components[0].points == std::vector<VecQ>{{Q("0"), Q("0")}});
    CHECK(fix.exact);
}

TEST_CASE("identity fixes every simplex") {
    SimplicialComplex oct = octagon_disk();
    PLMap id = linear_map(oct, 1, 0, 0, 1, {Q("0"), Q("0")});
    FixedPointSet fix = exact_pl_fixed_points(id, oct);
    REQUIRE(fix.components.size() == oct.top_simplices.size());
    for (const auto& c : fix.components) {
        CHECK(c.kind == FixedPointComponent::Kind::Polytope);
        CHECK(c.points.size() == 3);
    }
}

TEST_CASE("translation fixes nothing") {
    SimplicialComplex oct = octagon_disk();
    PLMap tr = linear_map(oct, 1, 0, 0, 1, {Q("10"), Q("0")});
    CHECK(exact_pl_fixed_points(tr, oct).empty());
}

TEST_CASE("projection yields a segment of fixed points") {
    SimplicialComplex sq = unit_square();
    PLMap proj = linear_map(sq, 1, 0, 0, 0, {Q("0"), Q("0")});
    FixedPointSet fix = exact_pl_fixed_points(proj, sq);
    // Triangle {0,1,2} meets the axis in its bottom edge, triangle {0,2,3}
    // only in the origin.
    REQUIRE(fix.components.size() == 2);
    CHECK(fix.components[0].kind == FixedPointComponent::Kind::Segment);
    CHECK(fix.components[0].points ==
          std::vector<VecQ>{{Q("0"), Q("0")}, {Q("1"), Q("0")}});
    CHECK(fix.components[1].kind == FixedPointComponent::Kind::Point);
    CHECK(fix.components[1].points == std::vector<VecQ>{{Q("0"), Q("0")}});
}

TEST_CASE("interval flip fixes the midpoint") {
    SimplicialComplex seg = build_complex(1, {{Q("0")}, {Q("1")}}, {{0, 1}});
    PLMap flip = make_pl_map(seg, std::vector<VecQ>{{Q("1")}, {Q("0")}});
    FixedPointSet fix = exact_pl_fixed_points(flip, seg);
    REQUIRE(fix.components.size() == 1);
    CHECK(fix.components[0].points == std::vector<VecQ>{{Q("1/2")}});
}

TEST_CASE("star retraction radial examples") {
    SimplicialComplex sq = unit_square();
    VecQ c = {Q("1/2"), Q("1/2")};
    // Scale 3 about the center puts both probes on the outer rim, where the
    // shell collapse agrees with the radial projection exactly.
    PLMap beta = build_star_retraction(sq, c, Q("2"));
    CHECK(evaluate(beta, {Q("2"), Q("1/2")}) == VecQ{Q("1"), Q("1/2")});
    CHECK(evaluate(beta, {Q("1/4"), Q("1/3")}) == VecQ{Q("1/4"), Q("1/3")});
    CHECK(evaluate(beta, {Q("1/2"), Q("-1")}) == VecQ{Q("1/2"), Q("0")});
}

TEST_CASE("star retraction rejections") {
    // L-shaped region, center inside the bottom arm: the inner vertical
    // wall is not visible from it.
    std::vector<VecQ> v = {pt("0", "0"), pt("2", "0"), pt("2", "1"),
                           pt("1", "1"), pt("1", "2"), pt("0", "2")};
    SimplicialComplex ell =
        build_complex(2, v, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}});
    try {
        build_star_retraction(ell, {Q("3/2"), Q("1/2")}, Q("1"));
        CHECK(false);
    } catch (const PltopError& e) {
        CHECK(e.code() == ErrorCode::NotStarShaped);
    }
    // Good center works.
    PLMap ok = build_star_retraction(ell, {Q("1/2"), Q("1/2")}, Q("1"));
    CHECK(evaluate(ok, {Q("1/2"), Q("1/2")}) == VecQ{Q("1/2"), Q("1/2")});

    SimplicialComplex sq = unit_square();
    try {
        build_star_retraction(sq, {Q("0"), Q("0")}, Q("1"));
        CHECK(false);
    } catch (const PltopError& e) {
        CHECK(e.code() == ErrorCode::CenterOnBoundary);
    }
    try {
        build_star_retraction(sq, {Q("5"), Q("5")}, Q("1"));
        CHECK(false);
    } catch (const PltopError& e) {
        CHECK(e.code() == ErrorCode::NotStarShaped);
    }
}

TEST_CASE("Y retraction lands in Y far out") {
    SimplicialComplex oct = octagon_disk();
    SimplicialComplex bd = boundary_subcomplex(orient(oct));
    SubBall Y = make_sub_ball(bd, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 1);
    PLMap betaY = build_Y_retraction(oct, {Q("0"), Q("0")}, Y, Q("1"));
    // Identity on X.
    CHECK(evaluate(betaY, {Q("1/4"), Q("-1/4")}) == VecQ{Q("1/4"), Q("-1/4")});
    // Outer rim vertices map onto the Y arc.
    std::vector<ConvexBody> yb;
    for (const auto& e : Y.simplices) yb.push_back(body_from_points(oct.simplex_points(e)));
    for (int v = 9; v < int(betaY.domain.vertices.size()); ++v) {
        bool in_y = false;
        for (const auto& b : yb)
            if (b.contains_point(betaY.vertex_images[v])) in_y = true;
        CHECK(in_y);
    }
}

TEST_CASE("conjugate map keeps the fixed point set") {
    SimplicialComplex oct = octagon_disk();
    PLMap f = linear_map(oct, Q("1/2"), 0, 0, Q("1/2"), {Q("0"), Q("0")});
    PLMap beta = build_star_retraction(oct, {Q("0"), Q("0")}, Q("1"));
    PLMap h = conjugate_h(f, beta);
    FixedPointSet ff = exact_pl_fixed_points(f, f.domain);
    FixedPointSet fh = exact_pl_fixed_points(h, h.domain);
    REQUIRE(ff.components.size() == 1);
    REQUIRE(fh.components.size() == 1);
    CHECK(ff.components[0].points == fh.components[0].points);
}

TEST_CASE("sampled search finds contraction and rotation centers") {
    SimplicialComplex sq = unit_square();
    auto half = [](const std::vector<double>& x) {
        return std::vector<double>{x[0] / 2, x[1] / 2};
    };
    auto pts = sampled_residual_search(half, sq, 8, 1e-9);
    REQUIRE(!pts.empty());
    CHECK(std::abs(pts[0].x[0]) < 1e-8);
    CHECK(std::abs(pts[0].x[1]) < 1e-8);

    SimplicialComplex oct = octagon_disk();
    auto rot = [](const std::vector<double>& x) {
        return std::vector<double>{-x[0], -x[1]};
    };
    auto rpts = sampled_residual_search(rot, oct, 8, 1e-9);
    bool near_origin = false;
    for (const auto& p : rpts)
        if (std::abs(p.x[0]) < 1e-8 && std::abs(p.x[1]) < 1e-8) near_origin = true;
    CHECK(near_origin);

    auto shift = [](const std::vector<double>& x) {
        return std::vector<double>{x[0] + 5, x[1]};
    };
    try {
        sampled_residual_search(shift, sq, 8, 1e-6);
        CHECK(false);
    } catch (const PltopError& e) {
        CHECK(e.code() == ErrorCode::ToleranceNotReached);
    }
}
