#include "pltop/scenarios.hpp"

#include <random>
#include <set>

namespace pltop {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::FromPaper: return "FromPaper";
        case Provenance::Forced: return "Forced";
        case Provenance::OracleDerived: return "OracleDerived";
    }
    return "?";
}

SimplicialComplex octagon_disk_complex() {
    auto q = [](int num, int den) { return Rational(num, den); };
    std::vector<VecQ> v = {
        {q(0, 1), q(0, 1)},   {q(1, 1), q(0, 1)},   {q(3, 5), q(4, 5)},
        {q(0, 1), q(1, 1)},   {q(-3, 5), q(4, 5)},  {q(-1, 1), q(0, 1)},
        {q(-3, 5), q(-4, 5)}, {q(0, 1), q(-1, 1)},  {q(3, 5), q(-4, 5)},
    };
    std::vector<std::vector<int>> tris;
    for (int i = 1; i <= 8; ++i) tris.push_back({0, i, i % 8 + 1});
    return build_complex(2, v, tris);
}

VecQ square_circle_point(const Rational& arclen) {
    Rational u = arclen;
    while (u < 0) u += 8;
    while (u >= 8) u -= 8;
    if (u < 2) return {Rational(1), Rational(-1) + u};
    if (u < 4) return {Rational(1) - (u - 2), Rational(1)};
    if (u < 6) return {Rational(-1), Rational(1) - (u - 4)};
    return {Rational(-1) + (u - 6), Rational(-1)};
}

SimplicialComplex square_circle(int n) {
    std::vector<VecQ> verts;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) {
        verts.push_back(square_circle_point(Rational(8 * i, n)));
        edges.push_back({i, (i + 1) % n});
    }
    return orient(build_complex(2, verts, edges));
}

namespace {

SimplicialComplex octagon_boundary() { return boundary_subcomplex(orient(octagon_disk_complex())); }

std::vector<std::vector<int>> upper_arc() { return {{1, 2}, {2, 3}, {3, 4}, {4, 5}}; }

PLMap map_from_matrix(const SimplicialComplex& k, const MatQ& M, const VecQ& shift) {
    std::vector<VecQ> imgs;
    for (const auto& v : k.vertices) imgs.push_back(vec_add(M.mul(v), shift));
    return make_pl_map(k, imgs);
}

MatQ mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    MatQ m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

}  // namespace

Scenario gen_rotation_disk() {
    Scenario sc;
    sc.name = "rotation_disk";
    sc.X = octagon_disk_complex();
    SimplicialComplex bd = octagon_boundary();
    sc.Y = make_sub_ball(bd, upper_arc(), 1);
    sc.map = map_from_matrix(sc.X, mat2(-1, 0, 0, -1), {Rational(0), Rational(0)});
    sc.theorem = Theorem::T48;
    sc.expected = {
        {"deg(f)", "1", Provenance::FromPaper},
        {"deg(f_bdY)", "-1", Provenance::FromPaper},
        {"check_T48", "Pass", Provenance::OracleDerived},
        {"fixed_points", "(0, 0)", Provenance::Forced},
    };
    return sc;
}

Scenario gen_halfspace(HalfspaceSide side) {
    Scenario sc;
    sc.name = side == HalfspaceSide::Plus ? "halfspace_plus" : "halfspace_minus";
    // D = square in the closed upper half-plane, E = its bottom edge on the axis.
    std::vector<VecQ> v = {
        {Rational(-1), Rational(0)},
        {Rational(1), Rational(0)},
        {Rational(1), Rational(1)},
        {Rational(-1), Rational(1)},
    };
    sc.X = build_complex(2, v, {{0, 1, 2}, {0, 2, 3}});
    SimplicialComplex bd = boundary_subcomplex(orient(sc.X));
    sc.E = make_sub_ball(bd, {{0, 1}}, 1);
    if (side == HalfspaceSide::Plus) {
        sc.map = map_from_matrix(sc.X, mat2(1, 0, 0, 1), {Rational(0), Rational(0)});
        sc.expected = {
            {"deg(f)", "1", Provenance::FromPaper},
            {"deg(f_E)", "1", Provenance::FromPaper},
            {"sign_relation", "deg(f)=deg(f_E)", Provenance::FromPaper},
        };
    } else {
        sc.map = map_from_matrix(sc.X, mat2(1, 0, 0, -1), {Rational(0), Rational(0)});
        sc.expected = {
            {"deg(f)", "-1", Provenance::FromPaper},
            {"deg(f_E)", "1", Provenance::FromPaper},
            {"sign_relation", "deg(f)=-deg(f_E)", Provenance::FromPaper},
        };
    }
    return sc;
}

Scenario gen_theorem47() {
    Scenario sc;
    sc.name = "theorem47";
    sc.X = octagon_disk_complex();
    SimplicialComplex bd = octagon_boundary();
    sc.Y = make_sub_ball(bd, upper_arc(), 1);
    sc.D = make_sub_ball(sc.X, {{0, 2, 3}}, 2);
    sc.E = make_sub_ball(bd, {{2, 3}}, 1);
    sc.map = map_from_matrix(sc.X, mat2(-1, 0, 0, -1), {Rational(0), Rational(0)});
    sc.theorem = Theorem::T47;
    sc.expected = {
        {"deg(f_D)", "1", Provenance::OracleDerived},
        {"deg(f_bdY)", "-1", Provenance::OracleDerived},
        {"check_T47", "Pass", Provenance::OracleDerived},
        {"certify", "TheoremConfirmed", Provenance::OracleDerived},
    };
    return sc;
}

Scenario gen_degree_d_circle_map(int d) {
    if (d < -2 || d > 2) fail(ErrorCode::GeometryError, "winding degree must be in -2..2");
    Scenario sc;
    sc.name = "circle_deg_" + std::to_string(d);
    int n = 4 * std::max(std::abs(d), 1);
    sc.X = square_circle(n);
    std::vector<VecQ> imgs;
    for (int i = 0; i < n; ++i) imgs.push_back(square_circle_point(Rational(8 * i, n) * d));
    sc.map = make_pl_map(sc.X, imgs);
    sc.expected = {
        {"degree", std::to_string(d),
         std::abs(d) <= 1 ? Provenance::Forced : Provenance::OracleDerived},
    };
    return sc;
}

Scenario gen_negative_control(NegativeKind kind) {
    Scenario sc;
    switch (kind) {
        case NegativeKind::Translation: {
            sc.name = "negative_translation";
            sc.X = octagon_disk_complex();
            SimplicialComplex bd = octagon_boundary();
            sc.Y = make_sub_ball(bd, {{1, 2}}, 1);
            sc.map = map_from_matrix(sc.X, mat2(1, 0, 0, 1), {Rational(3), Rational(0)});
            sc.theorem = Theorem::T33;
            sc.expected = {
                {"failed_check", "f(Y) lies in X", Provenance::Forced},
                {"fixed_points", "empty", Provenance::Forced},
            };
            break;
        }
        case NegativeKind::DegreeMismatch: {
            sc.name = "negative_degree_mismatch";
            // A house-shaped disk whose boundary folds over reversely while
            // the flap D over the bottom-middle edges is pushed outward
            // above the roof, flipping the sign relation and nothing else.
            auto q = [](int num, int den) { return Rational(num, den); };
            std::vector<VecQ> v = {
                {q(-3, 1), q(0, 1)},  // 0 = A
                {q(-1, 1), q(0, 1)},  // 1 = p
                {q(0, 1), q(0, 1)},   // 2 = m
                {q(1, 1), q(0, 1)},   // 3 = q
                {q(3, 1), q(0, 1)},   // 4 = B
                {q(0, 1), q(3, 1)},   // 5 = apex
                {q(0, 1), q(1, 1)},   // 6 = O (interior)
            };
            sc.X = build_complex(
                2, v, {{0, 1, 6}, {1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}, {5, 0, 6}});
            SimplicialComplex bd = boundary_subcomplex(orient(sc.X));
            sc.Y = make_sub_ball(bd, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, 1);
            sc.D = make_sub_ball(sc.X, {{1, 2, 6}, {2, 3, 6}}, 2);
            std::vector<VecQ> imgs = {
                {q(-3, 1), q(0, 1)},  // A fixed
                {q(-1, 1), q(2, 1)},  // p -> left roof
                {q(0, 1), q(3, 1)},   // m -> apex
                {q(1, 1), q(2, 1)},   // q -> right roof
                {q(3, 1), q(0, 1)},   // B fixed
                {q(0, 1), q(5, 1)},   // apex pushed straight up
                {q(0, 1), q(4, 1)},   // O above the roof: D flips outward
            };
            sc.map = make_pl_map(sc.X, imgs);
            sc.theorem = Theorem::T47;
            sc.expected = {
                {"failed_check", "deg(f_D) = -deg(f on bdY)", Provenance::OracleDerived},
                {"deg(f_D)", "1", Provenance::OracleDerived},
                {"deg(f_bdY)", "1", Provenance::OracleDerived},
            };
            break;
        }
        case NegativeKind::PreimageViolation: {
            sc.name = "negative_preimage_violation";
            sc.X = octagon_disk_complex();
            SimplicialComplex bd = octagon_boundary();
            sc.Y = make_sub_ball(bd, upper_arc(), 1);
            sc.map = map_from_matrix(sc.X, mat2(1, 0, 0, 1), {Rational(0), Rational(0)});
            sc.theorem = Theorem::T35;
            sc.expected = {
                {"failed_check", "preimage of (bdX - Y) is exactly the interior of Y",
                 Provenance::Forced},
            };
            break;
        }
    }
    return sc;
}

std::vector<Scenario> gen_t33_instances() {
    std::vector<Scenario> out;
    SimplicialComplex oct = octagon_disk_complex();
    SimplicialComplex bd = octagon_boundary();
    SubBall y_oct = make_sub_ball(bd, {{1, 2}}, 1);

    auto push = [&](std::string name, SimplicialComplex X, SubBall Y, PLMap f) {
        Scenario sc;
        sc.name = std::move(name);
        sc.X = std::move(X);
        sc.Y = std::move(Y);
        sc.map = std::move(f);
        sc.theorem = Theorem::T33;
        sc.expected = {{"check_T33", "Pass", Provenance::OracleDerived},
                       {"certify", "TheoremConfirmed", Provenance::OracleDerived}};
        out.push_back(std::move(sc));
    };

    Rational h(1, 2), e(1, 8);
    push("t33_half_contraction", oct, y_oct,
         map_from_matrix(oct, mat2(h, 0, 0, h), {Rational(0), Rational(0)}));
    push("t33_shifted_contraction", oct, y_oct, map_from_matrix(oct, mat2(h, 0, 0, h), {e, e}));
    push("t33_rotating_contraction", oct, y_oct,
         map_from_matrix(oct, mat2(0, -h, h, 0), {Rational(0), Rational(0)}));

    std::vector<VecQ> sq = {
        {Rational(0), Rational(0)},
        {Rational(1), Rational(0)},
        {Rational(1), Rational(1)},
        {Rational(0), Rational(1)},
    };
    SimplicialComplex square = build_complex(2, sq, {{0, 1, 2}, {0, 2, 3}});
    SimplicialComplex sq_bd = boundary_subcomplex(orient(square));
    SubBall y_sq = make_sub_ball(sq_bd, {{0, 1}}, 1);
    push("t33_square_contraction", square, y_sq,
         map_from_matrix(square, mat2(h, 0, 0, h), {e, e}));
    push("t33_square_identity", square, y_sq,
         map_from_matrix(square, mat2(1, 0, 0, 1), {Rational(0), Rational(0)}));
    return out;
}

namespace {

Rational rand_q(std::mt19937& rng, int lo_num, int hi_num, int den) {
    std::uniform_int_distribution<int> d(lo_num, hi_num);
    return Rational(d(rng), den);
}

}  // namespace

PLMap random_injective_map(unsigned seed, SimplicialComplex& domain_out) {
    std::mt19937 rng(seed);
    domain_out = octagon_disk_complex();
    MatQ M(2, 2);
    do {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) M(i, j) = rand_q(rng, -6, 6, 2);
    } while (M.det() == 0);
    VecQ b = {rand_q(rng, -4, 4, 4), rand_q(rng, -4, 4, 4)};
    return map_from_matrix(domain_out, M, b);
}

PLMap random_boundary_preserving_disk_map(unsigned seed, SimplicialComplex& domain_out) {
    std::mt19937 rng(seed);
    domain_out = octagon_disk_complex();
    std::uniform_int_distribution<int> rot(0, 7);
    std::uniform_int_distribution<int> flip(0, 1);
    int k = rot(rng);
    bool reflect = flip(rng) == 1;
    std::vector<VecQ> imgs(domain_out.vertices.size());
    imgs[0] = {rand_q(rng, -2, 2, 8), rand_q(rng, -2, 2, 8)};
    for (int i = 1; i <= 8; ++i) {
        int j = reflect ? (8 - (i - 1)) % 8 : (i - 1);
        imgs[i] = domain_out.vertices[(j + k) % 8 + 1];
    }
    return make_pl_map(domain_out, imgs);
}

PLMap random_square_self_map(unsigned seed, SimplicialComplex& domain_out) {
    std::mt19937 rng(seed);
    std::vector<VecQ> sq = {
        {Rational(0), Rational(0)},
        {Rational(1), Rational(0)},
        {Rational(1), Rational(1)},
        {Rational(0), Rational(1)},
    };
    domain_out = build_complex(2, sq, {{0, 1, 2}, {0, 2, 3}});
    std::vector<VecQ> imgs;
    for (size_t i = 0; i < sq.size(); ++i)
        imgs.push_back({rand_q(rng, 1, 15, 16), rand_q(rng, 1, 15, 16)});
    return make_pl_map(domain_out, imgs);
}

PLMap random_interval_self_map(unsigned seed, SimplicialComplex& domain_out) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> nbreaks(2, 5);
    int k = nbreaks(rng);
    std::set<Rational> cuts;
    while (int(cuts.size()) < k) {
        Rational c = rand_q(rng, 1, 31, 32);
        cuts.insert(c);
    }
    std::vector<VecQ> verts = {{Rational(0)}};
    for (const auto& c : cuts) verts.push_back({c});
    verts.push_back({Rational(1)});
    std::vector<std::vector<int>> edges;
    for (int i = 0; i + 1 < int(verts.size()); ++i) edges.push_back({i, i + 1});
    domain_out = build_complex(1, verts, edges);
    std::vector<VecQ> imgs;
    for (size_t i = 0; i < verts.size(); ++i) imgs.push_back({rand_q(rng, 0, 32, 32)});
    return make_pl_map(domain_out, imgs);
}

}  // namespace pltop
