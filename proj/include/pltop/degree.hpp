#ifndef PLTOP_DEGREE_HPP
#define PLTOP_DEGREE_HPP

#include "pltop/plmap.hpp"

namespace pltop {

enum class DegreeMethod {
    SphereCyclePushforward,
    RegularValueCount,
    BoundaryRestriction,
    OrientationSign,
    SphereInjection,
    ZeroSphere,
};

const char* degree_method_name(DegreeMethod m);

struct DegreeValue {
    int value = 0;
    DegreeMethod method = DegreeMethod::SphereCyclePushforward;
    std::string provenance;
};

// Cyclic parametrization of an oriented PL circle: each edge carries unit
// parameter length, traversed in the coherent direction.
class CircleParam {
public:
    explicit CircleParam(const SimplicialComplex& circle);  // must be oriented

    const SimplicialComplex& complex() const { return circle_; }
    Rational length() const { return Rational(int(order_.size())); }
    int edge_count() const { return int(order_.size()); }

    // Directed edge i runs from vertex_at(i) to vertex_at(i+1 mod m).
    int vertex_at(int i) const { return order_[i % order_.size()]; }
    VecQ point_at(const Rational& param) const;  // param taken mod length
    Rational param_of(const VecQ& x) const;      // x must lie on the circle

private:
    SimplicialComplex circle_;
    std::vector<int> order_;  // vertex ids along the coherent direction
};

// Degree of a simplicial map between oriented (n-1)-sphere complexes;
// f's domain is the (subdivided) source sphere.
DegreeValue degree_sphere_map(const PLMap& f, const SimplicialComplex& T);

DegreeValue degree_zero_sphere_map(const PLMap& f);

// Degree of f: (Y, bdY) -> (Y, bdY) with Y = f's domain, read off the
// boundary restriction.
DegreeValue degree_relative_ball_map(const PLMap& f);

// Degree of an injective PL map from a full-dimensional oriented ball
// complex into its ambient space: the common orientation sign.
DegreeValue degree_injective_ball_map(const PLMap& h);

// Degree of an injection of a ball V into the sphere S carrying it,
// via chart conjugation; two independent choices must agree.
DegreeValue degree_sphere_injection(const PLMap& h, const SimplicialComplex& S);

struct Suspension {
    SimplicialComplex SK;  // suspended source
    SimplicialComplex ST;  // suspended target
    PLMap Sf;
};

// Suspension of a simplicial sphere map f with target complex T.
Suspension suspend(const PLMap& f, const SimplicialComplex& T);

// The reflection negating the last coordinate, on a symmetric complex.
PLMap make_reflection(const SimplicialComplex& K);

// Rebuilds a PL circle map as a simplicial map between refinements of its
// domain and of T: inserts images of domain vertices into T and preimages
// of the enlarged target vertex set into the domain. Orientations transfer.
struct SimplicialCircleModel {
    SimplicialComplex source;  // refined domain, oriented
    SimplicialComplex target;  // refined T, oriented
    PLMap map;                 // simplicial source -> target
};

SimplicialCircleModel simplicialize_circle_map(const PLMap& f, const SimplicialComplex& T);

}  // namespace pltop

#endif
