#include "pltop/linalg.hpp"

#include <cassert>

namespace pltop {

MatQ MatQ::from_columns(const std::vector<VecQ>& cols) {
    if (cols.empty()) return MatQ(0, 0);
    MatQ m(int(cols[0].size()), int(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        assert(int(cols[c].size()) == m.rows());
        for (int r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
    }
    return m;
}

MatQ MatQ::transpose() const {
    MatQ t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

MatQ MatQ::mul(const MatQ& o) const {
    assert(cols_ == o.rows_);
    MatQ res(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < o.cols_; ++c) {
            Rational acc = 0;
            for (int k = 0; k < cols_; ++k) acc += (*this)(r, k) * o(k, c);
            res(r, c) = acc;
        }
    return res;
}

VecQ MatQ::mul(const VecQ& v) const {
    assert(int(v.size()) == cols_);
    VecQ res(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
        res[r] = acc;
    }
    return res;
}

Rational MatQ::det() const {
    assert(rows_ == cols_);
    MatQ a = *this;
    Rational d = 1;
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = 0; c < cols_; ++c) std::swap(a(pivot, c), a(col, c));
            d = -d;
        }
        d *= a(col, col);
        Rational inv = 1 / a(col, col);
        for (int r = col + 1; r < rows_; ++r) {
            if (a(r, col) == 0) continue;
            Rational factor = a(r, col) * inv;
            for (int c = col; c < cols_; ++c) a(r, c) -= factor * a(col, c);
        }
    }
    return d;
}

namespace {

// Row echelon; returns pivot column per row used. `rhs` (optional) is
// carried along.
struct Echelon {
    MatQ a;
    std::vector<VecQ> rhs;  // columns of the right-hand side
    std::vector<int> pivot_cols;
};

Echelon echelon_form(const MatQ& m, const std::vector<VecQ>& rhs_cols) {
    Echelon e{m, rhs_cols, {}};
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < e.a.rows(); ++r)
            if (e.a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < e.a.cols(); ++c) std::swap(e.a(pivot, c), e.a(row, c));
            for (auto& b : e.rhs) std::swap(b[pivot], b[row]);
        }
        Rational inv = 1 / e.a(row, col);
        for (int c = col; c < e.a.cols(); ++c) e.a(row, c) *= inv;
        for (auto& b : e.rhs) b[row] *= inv;
        for (int r = 0; r < e.a.rows(); ++r) {
            if (r == row || e.a(r, col) == 0) continue;
            Rational factor = e.a(r, col);
            for (int c = col; c < e.a.cols(); ++c) e.a(r, c) -= factor * e.a(row, c);
            for (auto& b : e.rhs) b[r] -= factor * b[row];
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

int MatQ::rank() const {
    return int(echelon_form(*this, {}).pivot_cols.size());
}

std::optional<VecQ> MatQ::solve(const VecQ& b) const {
    assert(int(b.size()) == rows_);
    Echelon e = echelon_form(*this, {b});
    int npiv = int(e.pivot_cols.size());
    for (int r = npiv; r < rows_; ++r)
        if (e.rhs[0][r] != 0) return std::nullopt;
    VecQ x(cols_, Rational(0));
    for (int r = 0; r < npiv; ++r) x[e.pivot_cols[r]] = e.rhs[0][r];
    return x;
}

std::vector<VecQ> MatQ::nullspace() const {
    Echelon e = echelon_form(*this, {});
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<VecQ> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        VecQ v(cols_, Rational(0));
        v[free] = 1;
        for (int r = 0; r < int(e.pivot_cols.size()); ++r)
            v[e.pivot_cols[r]] = -e.a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

VecQ vec_sub(const VecQ& a, const VecQ& b) {
    assert(a.size() == b.size());
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecQ vec_add(const VecQ& a, const VecQ& b) {
    assert(a.size() == b.size());
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

VecQ vec_scale(const Rational& s, const VecQ& a) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rational dot(const VecQ& a, const VecQ& b) {
    assert(a.size() == b.size());
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

VecQ AffineMap::apply(const VecQ& x) const { return vec_add(A.mul(x), b); }

AffineMap affine_through(const std::vector<VecQ>& domain_pts, const std::vector<VecQ>& image_pts) {
    assert(!domain_pts.empty() && domain_pts.size() == image_pts.size());
    int d = int(domain_pts[0].size());
    int k = int(domain_pts.size()) - 1;
    // Edge bases W (d x k) and G (m x k); A = G (W^T W)^{-1} W^T.
    std::vector<VecQ> wcols, gcols;
    for (int i = 1; i <= k; ++i) {
        wcols.push_back(vec_sub(domain_pts[i], domain_pts[0]));
        gcols.push_back(vec_sub(image_pts[i], image_pts[0]));
    }
    AffineMap f;
    if (k == 0) {
        f.A = MatQ(int(image_pts[0].size()), d);  // zero map
        f.b = image_pts[0];
        return f;
    }
    MatQ W = MatQ::from_columns(wcols);
    MatQ G = MatQ::from_columns(gcols);
    MatQ Wt = W.transpose();
    MatQ gram = Wt.mul(W);  // k x k, invertible for affinely independent pts
    // Solve gram * Z = Wt row-block-wise: Z = gram^{-1} Wt (k x d).
    MatQ Z(k, d);
    for (int c = 0; c < d; ++c) {
        VecQ col(k);
        for (int r = 0; r < k; ++r) col[r] = Wt(r, c);
        auto sol = gram.solve(col);
        if (!sol) fail(ErrorCode::DegenerateSimplex, "affinely dependent domain points");
        for (int r = 0; r < k; ++r) Z(r, c) = (*sol)[r];
    }
    f.A = G.mul(Z);
    f.b = vec_sub(image_pts[0], f.A.mul(domain_pts[0]));
    return f;
}

std::optional<VecQ> barycentric_coords(const std::vector<VecQ>& pts, const VecQ& x) {
    int k = int(pts.size()) - 1;
    if (k < 0) return std::nullopt;
    if (k == 0) {
        if (pts[0] == x) return VecQ{Rational(1)};
        return std::nullopt;
    }
    std::vector<VecQ> wcols;
    for (int i = 1; i <= k; ++i) wcols.push_back(vec_sub(pts[i], pts[0]));
    MatQ W = MatQ::from_columns(wcols);
    auto y = W.solve(vec_sub(x, pts[0]));
    if (!y) return std::nullopt;
    // Verify (W may be rank deficient or x off the hull when overdetermined).
    VecQ recon = vec_add(pts[0], W.mul(*y));
    if (recon != x) return std::nullopt;
    VecQ b(k + 1);
    Rational rest = 0;
    for (int i = 0; i < k; ++i) { b[i + 1] = (*y)[i]; rest += (*y)[i]; }
    b[0] = 1 - rest;
    return b;
}

int affine_dim(const std::vector<VecQ>& pts) {
    if (pts.empty()) return -1;
    std::vector<VecQ> wcols;
    for (size_t i = 1; i < pts.size(); ++i) wcols.push_back(vec_sub(pts[i], pts[0]));
    if (wcols.empty()) return 0;
    return MatQ::from_columns(wcols).rank();
}

}  // namespace pltop
