#ifndef PLTOP_PLMAP_HPP
#define PLTOP_PLMAP_HPP

#include <map>
#include <variant>

#include "pltop/geom.hpp"

namespace pltop {

// Piecewise-linear map determined by vertex images, affine on each simplex.
struct PLMap {
    SimplicialComplex domain;
    int target_ambient_dim = 0;
    std::vector<VecQ> vertex_images;  // indexed by domain vertex id

    VecQ image_of_vertex(int v) const { return vertex_images[v]; }
    std::vector<VecQ> simplex_image_points(int s) const;
    std::vector<VecQ> simplex_image_points(const std::vector<int>& verts) const;
    ConvexBody simplex_image_body(int s) const;

    // Affine extension of f restricted to top simplex s, valid on aff(s).
    AffineMap simplex_affine(int s) const;
};

PLMap make_pl_map(SimplicialComplex domain, const std::map<int, VecQ>& images);
PLMap make_pl_map(SimplicialComplex domain, std::vector<VecQ> images);

VecQ evaluate(const PLMap& f, const VecQ& x);

PLMap restrict_map(const PLMap& f, const SubBall& V);
PLMap restrict_map(const PLMap& f, const SimplicialComplex& sub);

// g after f. f's domain is refined (up to refinement_depth barycentric
// rounds) until every simplex image is carried by a single affine piece of
// g; a simplex is acceptable as soon as some affine piece of g agrees with
// g on a simplex-union covering its image.
PLMap compose(const PLMap& g, const PLMap& f, int refinement_depth = 6);

enum class RegionLabel { ImageInside, ImageOutside, ImageOnBoundary, Straddles };

struct RegionClassification {
    SimplicialComplex refined_domain;
    std::vector<RegionLabel> labels;  // per top simplex of refined_domain

    bool all_inside() const;  // ImageInside or ImageOnBoundary everywhere
    bool none_inside() const;
};

RegionClassification classify_against(const PLMap& f, const SimplicialComplex& X, int depth);

struct PreimageSandwich {
    SimplicialComplex refined_domain;
    std::vector<int> inner;  // top-simplex indices with f(sigma) inside region
    std::vector<int> hull;   // top-simplex indices with f(sigma) meeting region
};

PreimageSandwich preimage_subcomplex(const PLMap& f, const SimplicialComplex& region, int depth);

struct BijectivityWitness {
    // Either a collision pair (injectivity failure) or a single point
    // outside V mapping into f(V).
    std::vector<VecQ> points;
    VecQ image;
};

struct BijectivityResult {
    enum class Verdict { Yes, No, Undecided } verdict;
    std::optional<BijectivityWitness> witness;
};

BijectivityResult is_bijective_on(const PLMap& f, const SubBall& V, int depth);

// Injectivity of f on the listed top simplices alone (condition (a)).
BijectivityResult is_injective_on(const PLMap& f, const SimplicialComplex& V);

}  // namespace pltop

#endif
