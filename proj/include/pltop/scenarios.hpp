#ifndef PLTOP_SCENARIOS_HPP
#define PLTOP_SCENARIOS_HPP

#include "pltop/fixpoint.hpp"

namespace pltop {

enum class Provenance { FromPaper, Forced, OracleDerived };

const char* provenance_name(Provenance p);

struct ExpectedEntry {
    std::string key;    // e.g. "deg(f)", "check_T48"
    std::string value;  // e.g. "1", "Pass"
    Provenance provenance;
};

enum class HalfspaceSide { Plus, Minus };

// Split of R^n into upper and lower half-spaces along the last coordinate.
struct HalfspaceFrame {
    int ambient_dim = 2;
    HalfspaceSide side = HalfspaceSide::Plus;

    VecQ p(const VecQ& x) const { return VecQ(x.begin(), x.end() - 1); }
    Rational q(const VecQ& x) const { return x.back(); }
};

enum class NegativeKind { Translation, DegreeMismatch, PreimageViolation };

struct Scenario {
    std::string name;
    SimplicialComplex X;
    std::optional<SubBall> Y;
    std::optional<SubBall> D;
    std::optional<SubBall> E;
    PLMap map;
    std::optional<Theorem> theorem;
    std::vector<ExpectedEntry> expected;
};

// Reference geometry shared by the generators.
SimplicialComplex octagon_disk_complex();
SimplicialComplex square_circle(int n);  // n vertices on the perimeter of [-1,1]^2
VecQ square_circle_point(const Rational& arclen);

Scenario gen_rotation_disk();
Scenario gen_halfspace(HalfspaceSide side);
Scenario gen_theorem47();
Scenario gen_degree_d_circle_map(int d);
Scenario gen_negative_control(NegativeKind kind);

// Contraction-style instances satisfying the blockading theorem.
std::vector<Scenario> gen_t33_instances();

// Deterministic pseudo-random fuel for the property suites. All draws are
// seeded; identical seeds give identical bytes.
PLMap random_injective_map(unsigned seed, SimplicialComplex& domain_out);
PLMap random_boundary_preserving_disk_map(unsigned seed, SimplicialComplex& domain_out);
PLMap random_square_self_map(unsigned seed, SimplicialComplex& domain_out);  // f(X) inside X
PLMap random_interval_self_map(unsigned seed, SimplicialComplex& domain_out);

}  // namespace pltop

#endif
