#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pltop/degree.hpp"
#include "pltop/io.hpp"

using namespace pltop;

namespace {

// Exit-code contract: 0 success / hypotheses hold, 1 input or internal
// error, 2 not applicable / nothing found, 3 undecided.
constexpr int kOk = 0, kInputError = 1, kNegative = 2, kUndecided = 3;

int default_depth() {
    if (const char* env = std::getenv("PLTOP_MAX_DEPTH")) {
        int d = std::atoi(env);
        if (d > 0) return d;
    }
    return 4;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::SchemaError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void write_out(const std::string& path, const std::string& bytes) {
    if (path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::SchemaError, "cannot write '" + path + "'");
    out << bytes;
}

void emit_geometry(const Scenario& sc, const std::string& path) {
    if (path.empty()) return;
    nlohmann::ordered_json j;
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const auto& v : sc.X.vertices) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& x : v) row.push_back(format_rational(x));
        verts.push_back(row);
    }
    j["vertices"] = verts;
    j["top_simplices"] = sc.X.top_simplices;
    write_out(path, j.dump(2) + "\n");
}

HypothesisReport run_check(const Scenario& sc, Theorem th, int depth) {
    if (!sc.Y) fail(ErrorCode::SchemaError, "scenario has no Y sub-ball");
    switch (th) {
        case Theorem::T33:
        case Theorem::Cor34: return check_T33(sc.map, sc.X, *sc.Y, depth);
        case Theorem::T35:
        case Theorem::Cor36: return check_T35(sc.map, sc.X, *sc.Y, depth);
        case Theorem::T47:
            if (!sc.D) fail(ErrorCode::SchemaError, "T47 needs a D sub-ball");
            return check_T47(sc.map, sc.X, *sc.Y, *sc.D, depth);
        case Theorem::T48:
        case Theorem::Cor49: return check_T48(sc.map, sc.X, *sc.Y, depth);
    }
    fail(ErrorCode::InternalError, "unhandled theorem");
}

int report_exit_code(const HypothesisReport& r) {
    if (r.conclusion == Conclusion::FixedPointGuaranteed) return kOk;
    bool any_fail = false, any_undecided = false;
    for (const auto& c : r.checks) {
        any_fail |= c.status == CheckStatus::Fail;
        any_undecided |= c.status == CheckStatus::Undecided;
    }
    return (any_undecided && !any_fail) ? kUndecided : kNegative;
}

HypothesisReport best_report(const Scenario& sc, const std::string& theorem_flag, int depth) {
    if (theorem_flag != "auto") {
        auto th = theorem_from_name(theorem_flag);
        if (!th) fail(ErrorCode::SchemaError, "unknown theorem '" + theorem_flag + "'");
        return run_check(sc, *th, depth);
    }
    if (sc.theorem) return run_check(sc, *sc.theorem, depth);
    std::optional<HypothesisReport> fallback;
    for (Theorem th : {Theorem::T33, Theorem::T35, Theorem::T47, Theorem::T48}) {
        if (!sc.Y || (th == Theorem::T47 && !sc.D)) continue;
        HypothesisReport r = run_check(sc, th, depth);
        if (r.conclusion == Conclusion::FixedPointGuaranteed) return r;
        if (!fallback || report_exit_code(r) == kUndecided) fallback = r;
    }
    if (!fallback) fail(ErrorCode::SchemaError, "scenario carries no checkable theorem data");
    return *fallback;
}

DegreeValue run_degree(const Scenario& sc, const std::string& target) {
    if (target == "injective") return degree_injective_ball_map(sc.map);
    if (target == "relative") return degree_relative_ball_map(sc.map);
    if (target == "zero") return degree_zero_sphere_map(sc.map);
    if (target == "sphere") {
        SimplicialCircleModel m = simplicialize_circle_map(sc.map, orient(sc.map.domain));
        return degree_sphere_map(m.map, m.target);
    }
    // auto: try the notions from most to least restrictive.
    const char* order[] = {"injective", "relative", "sphere", "zero"};
    for (const char* t : order) {
        try {
            return run_degree(sc, t);
        } catch (const PltopError&) {
        }
    }
    fail(ErrorCode::GeometryError, "no degree notion applies to this scenario");
}

Scenario generate(const std::string& name) {
    if (name == "rotation_disk") return gen_rotation_disk();
    if (name == "halfspace_plus") return gen_halfspace(HalfspaceSide::Plus);
    if (name == "halfspace_minus") return gen_halfspace(HalfspaceSide::Minus);
    if (name == "theorem47") return gen_theorem47();
    if (name.rfind("circle_deg_", 0) == 0)
        return gen_degree_d_circle_map(std::atoi(name.c_str() + 11));
    if (name == "negative_translation") return gen_negative_control(NegativeKind::Translation);
    if (name == "negative_degree_mismatch")
        return gen_negative_control(NegativeKind::DegreeMismatch);
    if (name == "negative_preimage_violation")
        return gen_negative_control(NegativeKind::PreimageViolation);
    for (Scenario& sc : gen_t33_instances())
        if (sc.name == name) return sc;
    fail(ErrorCode::SchemaError, "unknown scenario name '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact PL degree and fixed-point toolkit"};
    app.require_subcommand(1);

    std::string file, theorem = "auto", target = "auto", mode = "exact";
    std::string out_path, geom_path, gen_name;
    int depth = default_depth();
    int grid_depth = 8;
    double tol = 1e-9;

    auto* cmd_degree = app.add_subcommand("degree", "compute a topological degree");
    cmd_degree->add_option("file", file)->required();
    cmd_degree->add_option("--target", target)
        ->check(CLI::IsMember({"auto", "sphere", "relative", "injective", "zero"}));
    cmd_degree->add_option("--emit-geometry", geom_path);

    auto* cmd_check = app.add_subcommand("check", "verify theorem hypotheses");
    cmd_check->add_option("file", file)->required();
    cmd_check->add_option("--theorem", theorem)
        ->check(CLI::IsMember({"auto", "T33", "T35", "T47", "T48"}));
    cmd_check->add_option("--max-depth", depth);
    cmd_check->add_option("--emit-geometry", geom_path);

    auto* cmd_solve = app.add_subcommand("solve", "locate fixed points");
    cmd_solve->add_option("file", file)->required();
    cmd_solve->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled"}));
    cmd_solve->add_option("--tol", tol);
    cmd_solve->add_option("--grid-depth", grid_depth);
    cmd_solve->add_option("--emit-geometry", geom_path);

    auto* cmd_gen = app.add_subcommand("gen", "write a generated scenario");
    cmd_gen->add_option("name", gen_name)->required();
    cmd_gen->add_option("-o,--output", out_path);

    auto* cmd_report = app.add_subcommand("report", "degree + check + solve certificate");
    cmd_report->add_option("file", file)->required();
    cmd_report->add_option("--theorem", theorem)
        ->check(CLI::IsMember({"auto", "T33", "T35", "T47", "T48"}));
    cmd_report->add_option("--max-depth", depth);
    cmd_report->add_option("-o,--output", out_path);
    cmd_report->add_option("--emit-geometry", geom_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (cmd_gen->parsed()) {
            write_out(out_path, serialize_scenario(generate(gen_name)));
            return kOk;
        }
        Scenario sc = load_scenario(file);
        emit_geometry(sc, geom_path);
        if (cmd_degree->parsed()) {
            DegreeValue d = run_degree(sc, target);
            nlohmann::ordered_json j;
            j["value"] = d.value;
            j["method"] = degree_method_name(d.method);
            j["provenance"] = d.provenance;
            std::cout << j.dump(2) << "\n";
            return kOk;
        }
        if (cmd_check->parsed()) {
            HypothesisReport r = best_report(sc, theorem, depth);
            std::cout << serialize_report(r);
            return report_exit_code(r);
        }
        if (cmd_solve->parsed()) {
            if (mode == "exact") {
                FixedPointSet fix = exact_pl_fixed_points(sc.map, sc.X);
                std::cout << serialize_fixed_points(fix);
                return fix.empty() ? kNegative : kOk;
            }
            auto fd = [&sc](const std::vector<double>& x) {
                VecQ xq;
                for (double c : x) {
                    // Snap the double to a dyadic rational for exact evaluation.
                    xq.push_back(Rational(Integer(std::llround(c * (1LL << 40))),
                                          Integer(1LL << 40)));
                }
                std::vector<double> out;
                try {
                    VecQ y = evaluate(sc.map, xq);
                    for (const auto& v : y) out.push_back(static_cast<double>(v));
                } catch (const PltopError&) {
                    // Snapped point fell off the domain: poison the sample.
                    for (double c : x) out.push_back(c + 1e6);
                }
                return out;
            };
            std::vector<ApproxFixedPoint> found;
            try {
                found = sampled_residual_search(fd, sc.X, grid_depth, tol);
            } catch (const PltopError& e) {
                if (e.code() != ErrorCode::ToleranceNotReached) throw;
                std::cout << "{\n  \"approximate_fixed_points\": []\n}\n";
                return kNegative;
            }
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& p : found)
                arr.push_back({{"x", p.x}, {"residual", p.residual}});
            nlohmann::ordered_json j;
            j["approximate_fixed_points"] = arr;
            std::cout << j.dump(2) << "\n";
            return kOk;
        }
        // report
        std::optional<Theorem> hint;
        if (theorem != "auto") hint = theorem_from_name(theorem);
        Certificate cert = certify(sc, hint, depth);
        write_out(out_path, serialize_certificate(cert, sc));
        if (cert.status == CertificateStatus::TheoremConfirmed) return kOk;
        if (cert.status == CertificateStatus::Inconsistent) return kInputError;
        return report_exit_code(cert.report);
    } catch (const PltopError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
