#ifndef PLTOP_GEOM_HPP
#define PLTOP_GEOM_HPP

#include <optional>
#include <string>
#include <vector>

#include "pltop/body.hpp"
#include "pltop/linalg.hpp"

namespace pltop {

// Embedded simplicial complex with exact rational vertex coordinates.
// Immutable after construction; operations return new complexes.
struct SimplicialComplex {
    int dim = 0;          // intrinsic dimension n
    int ambient_dim = 0;  // >= dim
    std::vector<VecQ> vertices;
    std::vector<std::vector<int>> top_simplices;  // (n+1)-tuples of vertex ids
    std::optional<std::vector<int>> orientation;  // +-1 per top simplex

    std::vector<VecQ> simplex_points(int s) const;
    std::vector<VecQ> simplex_points(const std::vector<int>& verts) const;
    ConvexBody simplex_body(int s) const;
    VecQ barycenter(int s) const;

    bool operator==(const SimplicialComplex& o) const {
        return dim == o.dim && ambient_dim == o.ambient_dim && vertices == o.vertices &&
               top_simplices == o.top_simplices;
    }
};

enum class BallCertificate { VerifiedArc, VerifiedDisk, ByConstruction };

// Marked subcomplex certified (or declared) to be a PL ball.
struct SubBall {
    SimplicialComplex parent;
    std::vector<std::vector<int>> simplices;  // (dim+1)-tuples of parent vertex ids
    int dim = 0;
    BallCertificate certificate = BallCertificate::ByConstruction;

    // The sub-ball as a standalone complex over the parent's vertex table.
    SimplicialComplex as_complex() const;
};

struct PointLocation {
    enum class Kind { InteriorOfTopSimplex, OnFace, Outside } kind;
    int carrier = -1;                 // top simplex index when not Outside
    std::vector<int> face;            // carrier face vertex ids (OnFace)
    VecQ barycentric;                 // w.r.t. carrier top simplex
};

// Construction with full validation: nondegeneracy, pseudomanifold face
// counts, pairwise embeddedness.
SimplicialComplex build_complex(int ambient_dim, std::vector<VecQ> vertices,
                                std::vector<std::vector<int>> top_simplices,
                                bool check_embeddedness = true);

// Faces belonging to exactly one top simplex, with the induced orientation
// when the input is oriented.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& k);

// Coherent orientation; NotConnected / NotOrientableInput on failure.
SimplicialComplex orient(const SimplicialComplex& k);

SimplicialComplex barycentric_subdivide(const SimplicialComplex& k, int depth);

PointLocation locate_point(const SimplicialComplex& k, const VecQ& x);

Rational total_volume(const SimplicialComplex& k);  // full-dimensional k

// All faces of a vertex tuple of one lower dimension, each sorted.
std::vector<std::vector<int>> facets_of(const std::vector<int>& simplex);

// Sub-ball over `parent` with recognition for dims 0..2; dim 3 requires
// ByConstruction.
SubBall make_sub_ball(const SimplicialComplex& parent, std::vector<std::vector<int>> simplices,
                      int dim, std::optional<BallCertificate> declared = std::nullopt);

// Faces of `whole` (a codim-0-in-its-own-right complex, e.g. a boundary
// sphere) that are not simplices of `part`.
std::vector<std::vector<int>> complement_simplices(const SimplicialComplex& whole,
                                                   const std::vector<std::vector<int>>& part);

bool is_subcomplex_of(const SimplicialComplex& parent,
                      const std::vector<std::vector<int>>& simplices);

}  // namespace pltop

#endif
