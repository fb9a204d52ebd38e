#ifndef PLTOP_FIXPOINT_HPP
#define PLTOP_FIXPOINT_HPP

#include <functional>

#include "pltop/hypotheses.hpp"

namespace pltop {

struct FixedPointComponent {
    enum class Kind { Point, Segment, Polytope };
    int carrier = -1;  // top simplex id in the domain
    Kind kind = Kind::Point;
    std::vector<VecQ> points;  // 1 / 2 / >=3 vertices of the solution set
};

struct FixedPointSet {
    std::vector<FixedPointComponent> components;
    bool exact = true;

    bool empty() const { return components.empty(); }
};

// Maximal solution sets of f(x) = x per top simplex, deduplicated across
// shared faces by canonical vertex lists.
FixedPointSet exact_pl_fixed_points(const PLMap& f, const SimplicialComplex& X);

// Retraction of an enlarged copy of X (scaled about the star center c by
// 1 + margin) onto X: identity on X, shell collapsed onto the boundary.
PLMap build_star_retraction(const SimplicialComplex& X, const VecQ& c,
                            const Rational& margin = Rational(1));

// Variant whose shell lands in the boundary ball Y: the outer rim folds
// onto Y, the inner rim stays put.
PLMap build_Y_retraction(const SimplicialComplex& X, const VecQ& c, const SubBall& Y,
                         const Rational& margin = Rational(1));

// h = beta after f, with f's domain.
PLMap conjugate_h(const PLMap& f, const PLMap& beta);

struct Scenario;

enum class CertificateStatus {
    TheoremConfirmed,
    TheoremNotApplicable_FixedPointAnyway,
    TheoremNotApplicable_NoFixedPoint,
    Inconsistent,
};

const char* certificate_status_name(CertificateStatus s);

struct Certificate {
    std::string scenario;
    HypothesisReport report;
    FixedPointSet fixed_points;
    Rational residual = Rational(0);
    CertificateStatus status = CertificateStatus::TheoremNotApplicable_NoFixedPoint;
};

// Runs the hypothesis checks and the exact solver and cross-validates:
// a guaranteed fixed point that the solver cannot find is a falsification
// of the build and is reported as Inconsistent.
Certificate certify(const Scenario& sc, std::optional<Theorem> hint, int max_depth);

struct ApproxFixedPoint {
    std::vector<double> x;
    double residual = 0;
};

// Non-certified floating-point search: barycentric grid scan plus local
// shrinking refinement. Throws ToleranceNotReached when no sample gets
// below tol.
std::vector<ApproxFixedPoint> sampled_residual_search(
    const std::function<std::vector<double>(const std::vector<double>&)>& f,
    const SimplicialComplex& X, int grid_depth, double tol);

}  // namespace pltop

#endif
