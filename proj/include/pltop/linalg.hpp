#ifndef PLTOP_LINALG_HPP
#define PLTOP_LINALG_HPP

#include <optional>
#include <vector>

#include "pltop/rational.hpp"

namespace pltop {

// Dense exact-rational matrix, row major. Sized for the kernel's needs
// (systems of at most a few dozen unknowns), not for scale.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    static MatQ from_columns(const std::vector<VecQ>& cols);

    MatQ transpose() const;
    MatQ mul(const MatQ& other) const;
    VecQ mul(const VecQ& v) const;

    Rational det() const;  // square only
    int rank() const;

    // Solves A x = b; empty optional when inconsistent. When the solution
    // is not unique an arbitrary particular solution is returned.
    std::optional<VecQ> solve(const VecQ& b) const;

    // Basis of the nullspace {x : A x = 0}.
    std::vector<VecQ> nullspace() const;

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

VecQ vec_sub(const VecQ& a, const VecQ& b);
VecQ vec_add(const VecQ& a, const VecQ& b);
VecQ vec_scale(const Rational& s, const VecQ& a);
Rational dot(const VecQ& a, const VecQ& b);

// Exact affine map x -> A x + b.
struct AffineMap {
    MatQ A;
    VecQ b;
    VecQ apply(const VecQ& x) const;
};

// The affine map determined by domain points -> image points, valid on the
// affine hull of the domain points (least-squares extension off it, which
// callers never rely on). Domain points must be affinely independent.
AffineMap affine_through(const std::vector<VecQ>& domain_pts, const std::vector<VecQ>& image_pts);

// Barycentric coordinates of x w.r.t. affinely independent points, as
// affine functionals evaluated at x; empty when x is off the affine hull.
std::optional<VecQ> barycentric_coords(const std::vector<VecQ>& pts, const VecQ& x);

// Affine rank of a point set minus one (0 for a single point).
int affine_dim(const std::vector<VecQ>& pts);

}  // namespace pltop

#endif
