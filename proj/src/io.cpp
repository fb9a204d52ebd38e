#include "pltop/io.hpp"

#include <json.hpp>

namespace pltop {

using Json = nlohmann::ordered_json;

namespace {

Json rationals_to_json(const VecQ& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(format_rational(x));
    return a;
}

VecQ rationals_from_json(const Json& a) {
    if (!a.is_array()) fail(ErrorCode::SchemaError, "expected an array of rationals");
    VecQ v;
    for (const auto& x : a) {
        if (!x.is_string()) fail(ErrorCode::SchemaError, "rationals must be strings");
        v.push_back(parse_rational(x.get<std::string>()));
    }
    return v;
}

Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["ambient_dim"] = k.ambient_dim;
    j["dim"] = k.dim;
    Json verts = Json::array();
    for (const auto& v : k.vertices) verts.push_back(rationals_to_json(v));
    j["vertices"] = verts;
    j["top_simplices"] = k.top_simplices;
    return j;
}

void require_keys(const Json& j, const std::vector<std::string>& allowed,
                  const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const auto& k : allowed)
            if (item.key() == k) known = true;
        if (!known) fail(ErrorCode::SchemaError, "unknown field '" + item.key() + "' in " + where);
    }
}

SimplicialComplex complex_from_json(const Json& j) {
    require_keys(j, {"ambient_dim", "dim", "vertices", "top_simplices"}, "complex");
    if (!j.contains("ambient_dim") || !j.contains("vertices") || !j.contains("top_simplices"))
        fail(ErrorCode::SchemaError, "complex block is missing required fields");
    std::vector<VecQ> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(rationals_from_json(v));
    std::vector<std::vector<int>> tops;
    for (const auto& s : j.at("top_simplices")) {
        if (!s.is_array()) fail(ErrorCode::SchemaError, "simplices must be index arrays");
        tops.push_back(s.get<std::vector<int>>());
    }
    return build_complex(j.at("ambient_dim").get<int>(), std::move(verts), std::move(tops));
}

Json sub_ball_to_json(const SubBall& b, const SimplicialComplex& X) {
    Json j;
    j["parent"] = (b.parent == X) ? "X" : "bdX";
    j["dim"] = b.dim;
    j["simplices"] = b.simplices;
    return j;
}

SubBall sub_ball_from_json(const Json& j, const SimplicialComplex& X,
                           const SimplicialComplex& bd) {
    require_keys(j, {"parent", "dim", "simplices"}, "sub-ball");
    std::string parent = j.at("parent").get<std::string>();
    if (parent != "X" && parent != "bdX")
        fail(ErrorCode::SchemaError, "sub-ball parent must be 'X' or 'bdX'");
    std::vector<std::vector<int>> simplices;
    for (const auto& s : j.at("simplices")) simplices.push_back(s.get<std::vector<int>>());
    return make_sub_ball(parent == "X" ? X : bd, std::move(simplices), j.at("dim").get<int>());
}

const char* status_str(CheckStatus s) { return check_status_name(s); }

}  // namespace

const char* conclusion_name(Conclusion c) {
    return c == Conclusion::FixedPointGuaranteed ? "FixedPointGuaranteed" : "NotApplicable";
}

std::optional<Theorem> theorem_from_name(const std::string& s) {
    for (Theorem t : {Theorem::T33, Theorem::T35, Theorem::T47, Theorem::T48, Theorem::Cor34,
                      Theorem::Cor36, Theorem::Cor49})
        if (s == theorem_name(t)) return t;
    return std::nullopt;
}

static Json scenario_to_json(const Scenario& sc) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = sc.name;
    j["dimension"] = sc.X.dim;
    j["complex"] = complex_to_json(sc.X);
    if (sc.Y) j["Y"] = sub_ball_to_json(*sc.Y, sc.X);
    if (sc.D) j["D"] = sub_ball_to_json(*sc.D, sc.X);
    if (sc.E) j["E"] = sub_ball_to_json(*sc.E, sc.X);
    Json imgs = Json::array();
    for (const auto& v : sc.map.vertex_images) imgs.push_back(rationals_to_json(v));
    j["map"] = Json{{"target_ambient_dim", sc.map.target_ambient_dim}, {"vertex_images", imgs}};
    if (sc.theorem) j["theorem"] = theorem_name(*sc.theorem);
    Json exp = Json::array();
    for (const auto& e : sc.expected)
        exp.push_back(Json{{"key", e.key}, {"value", e.value}, {"provenance", provenance_name(e.provenance)}});
    j["expected"] = exp;
    return j;
}

std::string serialize_scenario(const Scenario& sc) { return scenario_to_json(sc).dump(2) + "\n"; }

Scenario parse_scenario(const std::string& bytes) {
    Json j = Json::parse(bytes, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::SchemaError, "malformed JSON");
    require_keys(j,
                 {"schema_version", "name", "dimension", "complex", "Y", "D", "E", "map",
                  "theorem", "expected"},
                 "scenario");
    if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer())
        fail(ErrorCode::SchemaError, "missing schema_version");
    if (j.at("schema_version").get<int>() != kSchemaVersion)
        fail(ErrorCode::SchemaError, "unsupported schema version");

    Scenario sc;
    sc.name = j.value("name", std::string());
    sc.X = complex_from_json(j.at("complex"));
    if (j.contains("dimension") && j.at("dimension").get<int>() != sc.X.dim)
        fail(ErrorCode::SchemaError, "dimension field disagrees with the complex");
    SimplicialComplex bd;
    if (j.contains("Y") || j.contains("E")) bd = boundary_subcomplex(orient(sc.X));
    if (j.contains("Y")) sc.Y = sub_ball_from_json(j.at("Y"), sc.X, bd);
    if (j.contains("D")) sc.D = sub_ball_from_json(j.at("D"), sc.X, bd);
    if (j.contains("E")) sc.E = sub_ball_from_json(j.at("E"), sc.X, bd);

    const Json& m = j.at("map");
    require_keys(m, {"target_ambient_dim", "vertex_images"}, "map");
    std::vector<VecQ> imgs;
    for (const auto& v : m.at("vertex_images")) imgs.push_back(rationals_from_json(v));
    sc.map = make_pl_map(sc.X, imgs);
    if (m.at("target_ambient_dim").get<int>() != sc.map.target_ambient_dim)
        fail(ErrorCode::SchemaError, "target_ambient_dim disagrees with the vertex images");

    if (j.contains("theorem")) {
        sc.theorem = theorem_from_name(j.at("theorem").get<std::string>());
        if (!sc.theorem) fail(ErrorCode::SchemaError, "unknown theorem name");
    }
    if (j.contains("expected")) {
        for (const auto& e : j.at("expected")) {
            require_keys(e, {"key", "value", "provenance"}, "expected entry");
            ExpectedEntry out;
            out.key = e.at("key").get<std::string>();
            out.value = e.at("value").get<std::string>();
            std::string p = e.at("provenance").get<std::string>();
            if (p == "FromPaper") out.provenance = Provenance::FromPaper;
            else if (p == "Forced") out.provenance = Provenance::Forced;
            else if (p == "OracleDerived") out.provenance = Provenance::OracleDerived;
            else fail(ErrorCode::SchemaError, "unknown provenance tag '" + p + "'");
            sc.expected.push_back(std::move(out));
        }
    }
    return sc;
}

static Json report_to_json(const HypothesisReport& r) {
    Json j;
    j["theorem"] = theorem_name(r.theorem);
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"status", status_str(c.status)}, {"detail", c.detail}});
    j["checks"] = checks;
    j["conclusion"] = conclusion_name(r.conclusion);
    return j;
}

std::string serialize_report(const HypothesisReport& r) { return report_to_json(r).dump(2) + "\n"; }

static Json fixed_points_to_json(const FixedPointSet& fix) {
    Json comps = Json::array();
    for (const auto& c : fix.components) {
        const char* kind = c.kind == FixedPointComponent::Kind::Point     ? "Point"
                           : c.kind == FixedPointComponent::Kind::Segment ? "Segment"
                                                                          : "Polytope";
        Json pts = Json::array();
        for (const auto& p : c.points) pts.push_back(rationals_to_json(p));
        comps.push_back(Json{{"carrier", c.carrier}, {"kind", kind}, {"points", pts}});
    }
    return Json{{"exact", fix.exact}, {"components", comps}};
}

std::string serialize_fixed_points(const FixedPointSet& fix) {
    return fixed_points_to_json(fix).dump(2) + "\n";
}

std::string serialize_certificate(const Certificate& cert, const Scenario& sc) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["scenario"] = scenario_to_json(sc);
    j["report"] = report_to_json(cert.report);
    j["fixed_points"] = fixed_points_to_json(cert.fixed_points);
    j["residual"] = format_rational(cert.residual);
    j["status"] = certificate_status_name(cert.status);
    return j.dump(2) + "\n";
}

}  // namespace pltop
