#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "common.hpp"
#include "pltop/degree.hpp"
#include "pltop/scenarios.hpp"

using namespace pltop;
using namespace testutil;

namespace {

CheckStatus status_of(const HypothesisReport& r, const std::string& frag) {
    for (const auto& c : r.checks)
        if (c.name.find(frag) != std::string::npos) return c.status;
    FAIL("no check named like ", frag);
    return CheckStatus::Undecided;
}

int count_fails(const HypothesisReport& r) {
    int n = 0;
    for (const auto& c : r.checks)
        if (c.status == CheckStatus::Fail) ++n;
    return n;
}

int deg_on_bdY(const PLMap& f, const Scenario& sc) {
    std::vector<int> ends = arc_endpoints(sc.Y->simplices);
    REQUIRE(ends.size() == 2);
    SimplicialComplex s0;
    s0.dim = 0;
    s0.ambient_dim = sc.X.ambient_dim;
    s0.vertices = sc.X.vertices;
    s0.top_simplices = {{ends[0]}, {ends[1]}};
    PLMap fy = f;
    fy.domain = s0;
    return degree_zero_sphere_map(fy).value;
}

std::set<std::vector<VecQ>> canonical_components(const FixedPointSet& fix) {
    std::set<std::vector<VecQ>> out;
    for (auto c : fix.components) {
        std::sort(c.points.begin(), c.points.end());
        out.insert(c.points);
    }
    return out;
}

}  // namespace

TEST_CASE("rotation_disk expectations are live") {
    Scenario sc = gen_rotation_disk();
    CHECK(degree_injective_ball_map(sc.map).value == 1);
    CHECK(deg_on_bdY(sc.map, sc) == -1);
    HypothesisReport r = check_T48(sc.map, sc.X, *sc.Y, 3);
    CHECK(r.conclusion == Conclusion::FixedPointGuaranteed);
    Certificate cert = certify(sc, std::nullopt, 3);
    CHECK(cert.status == CertificateStatus::TheoremConfirmed);
    REQUIRE(cert.fixed_points.components.size() == 1);
    CHECK(cert.fixed_points.components[0].points ==
          std::vector<VecQ>{{Q("0"), Q("0")}});
}

TEST_CASE("halfspace sign rule") {
    Scenario plus = gen_halfspace(HalfspaceSide::Plus);
    Scenario minus = gen_halfspace(HalfspaceSide::Minus);
    HalfspaceFrame frame;

    auto deg_on_E = [&](const Scenario& sc) {
        // Project the axis edge to one ambient dimension and read the sign.
        std::vector<int> e = sc.E->simplices[0];
        std::vector<VecQ> v = {frame.p(sc.X.vertices[e[0]]), frame.p(sc.X.vertices[e[1]])};
        SimplicialComplex seg = build_complex(1, v, {{0, 1}});
        std::vector<VecQ> imgs = {frame.p(sc.map.vertex_images[e[0]]),
                                  frame.p(sc.map.vertex_images[e[1]])};
        return degree_injective_ball_map(make_pl_map(seg, imgs)).value;
    };

    CHECK(degree_injective_ball_map(plus.map).value == 1);
    CHECK(deg_on_E(plus) == 1);
    CHECK(degree_injective_ball_map(minus.map).value == -1);
    CHECK(deg_on_E(minus) == 1);
}

TEST_CASE("theorem47 scenario passes its checks") {
    Scenario sc = gen_theorem47();
    CHECK(degree_injective_ball_map(restrict_map(sc.map, *sc.D)).value == 1);
    CHECK(deg_on_bdY(sc.map, sc) == -1);
    HypothesisReport r = check_T47(sc.map, sc.X, *sc.Y, *sc.D, 3);
    for (const auto& c : r.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.status == CheckStatus::Pass);
    }
    CHECK(certify(sc, std::nullopt, 3).status == CertificateStatus::TheoremConfirmed);
}

TEST_CASE("circle map generators wind as advertised") {
    SimplicialComplex target = square_circle(4);
    for (int d = -2; d <= 2; ++d) {
        Scenario sc = gen_degree_d_circle_map(d);
        SimplicialCircleModel m = simplicialize_circle_map(sc.map, target);
        INFO("d = ", d);
        CHECK(degree_sphere_map(m.map, m.target).value == d);
    }
}

TEST_CASE("negative controls fail exactly one check") {
    Scenario tr = gen_negative_control(NegativeKind::Translation);
    HypothesisReport rt = check_T33(tr.map, tr.X, *tr.Y, 2);
    CHECK(count_fails(rt) == 1);
    CHECK(status_of(rt, "f(Y) lies in X") == CheckStatus::Fail);
    CHECK(exact_pl_fixed_points(tr.map, tr.X).empty());

    Scenario dm = gen_negative_control(NegativeKind::DegreeMismatch);
    CHECK(degree_injective_ball_map(restrict_map(dm.map, *dm.D)).value == 1);
    CHECK(deg_on_bdY(dm.map, dm) == 1);
    HypothesisReport rd = check_T47(dm.map, dm.X, *dm.Y, *dm.D, 3);
    for (const auto& c : rd.checks) INFO(c.name, " -> ", c.detail);
    CHECK(count_fails(rd) == 1);
    CHECK(status_of(rd, "deg(f_D)") == CheckStatus::Fail);

    Scenario pv = gen_negative_control(NegativeKind::PreimageViolation);
    HypothesisReport rp = check_T35(pv.map, pv.X, *pv.Y, 3);
    CHECK(count_fails(rp) == 1);
    CHECK(status_of(rp, "preimage") == CheckStatus::Fail);
}

TEST_CASE("blockading instances certify end to end") {
    for (const Scenario& sc : gen_t33_instances()) {
        INFO(sc.name);
        HypothesisReport r = check_T33(sc.map, sc.X, *sc.Y, 4);
        CHECK(r.conclusion == Conclusion::FixedPointGuaranteed);
        Certificate cert = certify(sc, std::nullopt, 4);
        CHECK(cert.status == CertificateStatus::TheoremConfirmed);
        CHECK(!cert.fixed_points.empty());
    }
}

TEST_CASE("generators are deterministic") {
    Scenario a = gen_rotation_disk();
    Scenario b = gen_rotation_disk();
    CHECK(a.X == b.X);
    CHECK(a.map.vertex_images == b.map.vertex_images);

    SimplicialComplex d1, d2;
    PLMap m1 = random_injective_map(7, d1);
    PLMap m2 = random_injective_map(7, d2);
    CHECK(m1.vertex_images == m2.vertex_images);
    PLMap m3 = random_injective_map(8, d1);
    CHECK(m1.vertex_images != m3.vertex_images);
}

TEST_CASE("random injective maps have unit degree") {
    for (unsigned seed = 1; seed <= 6; ++seed) {
        SimplicialComplex dom;
        PLMap f = random_injective_map(seed, dom);
        int d = degree_injective_ball_map(f).value;
        INFO("seed ", seed);
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("interval maps match the crossing oracle") {
    for (unsigned seed = 1; seed <= 8; ++seed) {
        SimplicialComplex dom;
        PLMap f = random_interval_self_map(seed, dom);
        std::set<std::vector<VecQ>> oracle;
        for (const auto& e : dom.top_simplices) {
            Rational a = dom.vertices[e[0]][0], b = dom.vertices[e[1]][0];
            Rational ga = f.vertex_images[e[0]][0] - a;
            Rational gb = f.vertex_images[e[1]][0] - b;
            if (ga == 0 && gb == 0) {
                oracle.insert({{a}, {b}});
            } else if (ga == 0) {
                oracle.insert({{a}});
            } else if (gb == 0) {
                oracle.insert({{b}});
            } else if ((ga < 0) != (gb < 0)) {
                Rational t = a - ga * (b - a) / (gb - ga);
                oracle.insert({{t}});
            }
        }
        INFO("seed ", seed);
        CHECK(canonical_components(exact_pl_fixed_points(f, dom)) == oracle);
    }
}
