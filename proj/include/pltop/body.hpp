#ifndef PLTOP_BODY_HPP
#define PLTOP_BODY_HPP

#include <optional>
#include <span>
#include <vector>

#include "pltop/lp.hpp"

namespace pltop {

// Closed bounded convex region in R^d, kept in half-space form. Bodies are
// produced from simplices (and their affine images) and shrink under
// clipping; boundedness is inherited from the generating simplex.
class ConvexBody {
public:
    ConvexBody() : dim_(0) {}
    explicit ConvexBody(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::vector<LinCon>& constraints() const { return cons_; }

    void add(LinCon c) { cons_.push_back(std::move(c)); }
    void add_halfspace(const VecQ& a, const Rational& b) { cons_.push_back({a, b, false}); }
    void add_equality(const VecQ& a, const Rational& b) { cons_.push_back({a, b, true}); }

    // Intersection with another body over the same space.
    ConvexBody intersect(const ConvexBody& other) const;

    bool nonempty() const;
    std::optional<VecQ> any_point() const;

    // A point strictly inside every inequality; exists iff the body has
    // positive measure relative to its equality-affine hull.
    std::optional<VecQ> interior_point() const;

    Rational min_along(const VecQ& dir) const;  // body must be nonempty
    Rational max_along(const VecQ& dir) const;

    bool contains_point(const VecQ& x) const;
    bool contains_body(const ConvexBody& other) const;

private:
    int dim_;
    std::vector<LinCon> cons_;
};

// Convex hull of a point set (affine dim <= 3) as a half-space body.
ConvexBody body_from_points(const std::vector<VecQ>& pts);

bool bodies_intersect(const ConvexBody& a, const ConvexBody& b);

// True when C lies in the union of the pieces, up to a set of measure zero
// relative to C's own affine hull; for closed polyhedral C this coincides
// with exact containment. On failure an interior point of an uncovered part
// can be reported.
bool covered_by(const ConvexBody& c, std::span<const ConvexBody> pieces,
                VecQ* witness_uncovered = nullptr);

}  // namespace pltop

#endif
