#include "pltop/geom.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace pltop {

namespace {

std::vector<int> sorted_tuple(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

int permutation_parity(const std::vector<int>& from, const std::vector<int>& to) {
    // Sign of the permutation carrying `from` onto `to` (same element sets).
    std::vector<int> perm;
    for (int x : from) {
        auto it = std::find(to.begin(), to.end(), x);
        assert(it != to.end());
        perm.push_back(int(it - to.begin()));
    }
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

// face -> indices of top simplices containing it
std::map<std::vector<int>, std::vector<int>> facet_cofacets(const SimplicialComplex& k) {
    std::map<std::vector<int>, std::vector<int>> m;
    for (int s = 0; s < int(k.top_simplices.size()); ++s)
        for (auto& f : facets_of(k.top_simplices[s])) m[f].push_back(s);
    return m;
}

Rational simplex_det(const SimplicialComplex& k, int s) {
    const auto& verts = k.top_simplices[s];
    MatQ m(k.ambient_dim, int(verts.size()) - 1);
    for (size_t i = 1; i < verts.size(); ++i) {
        VecQ e = vec_sub(k.vertices[verts[i]], k.vertices[verts[0]]);
        for (int r = 0; r < k.ambient_dim; ++r) m(r, int(i) - 1) = e[r];
    }
    if (m.rows() != m.cols()) return 0;
    return m.det();
}

}  // namespace

std::vector<std::vector<int>> facets_of(const std::vector<int>& simplex) {
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < simplex.size(); ++i) {
        std::vector<int> f;
        for (size_t j = 0; j < simplex.size(); ++j)
            if (j != i) f.push_back(simplex[j]);
        out.push_back(sorted_tuple(f));
    }
    return out;
}

std::vector<VecQ> SimplicialComplex::simplex_points(int s) const {
    return simplex_points(top_simplices[s]);
}

std::vector<VecQ> SimplicialComplex::simplex_points(const std::vector<int>& verts) const {
    std::vector<VecQ> pts;
    for (int v : verts) pts.push_back(vertices[v]);
    return pts;
}

ConvexBody SimplicialComplex::simplex_body(int s) const {
    return body_from_points(simplex_points(s));
}

VecQ SimplicialComplex::barycenter(int s) const {
    const auto& verts = top_simplices[s];
    VecQ c(ambient_dim, Rational(0));
    for (int v : verts) c = vec_add(c, vertices[v]);
    Rational inv(1, int(verts.size()));
    return vec_scale(inv, c);
}

SimplicialComplex SubBall::as_complex() const {
    SimplicialComplex k;
    k.dim = dim;
    k.ambient_dim = parent.ambient_dim;
    k.vertices = parent.vertices;
    k.top_simplices = simplices;
    return k;
}

SimplicialComplex build_complex(int ambient_dim, std::vector<VecQ> vertices,
                                std::vector<std::vector<int>> top_simplices,
                                bool check_embeddedness) {
    if (top_simplices.empty()) fail(ErrorCode::GeometryError, "complex has no top simplices");
    size_t arity = top_simplices[0].size();
    SimplicialComplex k;
    k.dim = int(arity) - 1;
    k.ambient_dim = ambient_dim;
    for (const auto& v : vertices)
        if (int(v.size()) != ambient_dim)
            fail(ErrorCode::ArityMismatch, "vertex coordinate arity != ambient_dim");
    k.vertices = std::move(vertices);
    for (const auto& s : top_simplices) {
        if (s.size() != arity) fail(ErrorCode::ArityMismatch, "mixed top-simplex arity");
        std::set<int> uniq(s.begin(), s.end());
        if (uniq.size() != arity) fail(ErrorCode::DegenerateSimplex, "repeated vertex in simplex");
        for (int v : s)
            if (v < 0 || v >= int(k.vertices.size()))
                fail(ErrorCode::GeometryError, "vertex id out of range");
    }
    k.top_simplices = std::move(top_simplices);

    for (int s = 0; s < int(k.top_simplices.size()); ++s)
        if (affine_dim(k.simplex_points(s)) != k.dim)
            fail(ErrorCode::DegenerateSimplex,
                 "top simplex " + std::to_string(s) + " has zero volume");

    if (k.dim >= 1)
        for (auto& [face, cof] : facet_cofacets(k))
            if (cof.size() > 2)
                fail(ErrorCode::NonManifoldFace,
                     "a face belongs to " + std::to_string(cof.size()) + " top simplices");

    if (check_embeddedness) {
        // Vertex-coordinate bounding boxes prune most pairs cheaply.
        int m = int(k.top_simplices.size());
        std::vector<std::vector<Rational>> lo(m), hi(m);
        for (int s = 0; s < m; ++s) {
            lo[s].assign(k.ambient_dim, Rational(0));
            hi[s].assign(k.ambient_dim, Rational(0));
            for (size_t i = 0; i < k.top_simplices[s].size(); ++i) {
                const VecQ& p = k.vertices[k.top_simplices[s][i]];
                for (int d = 0; d < k.ambient_dim; ++d) {
                    if (i == 0 || p[d] < lo[s][d]) lo[s][d] = p[d];
                    if (i == 0 || p[d] > hi[s][d]) hi[s][d] = p[d];
                }
            }
        }
        auto boxes_meet = [&](int a, int b) {
            for (int d = 0; d < k.ambient_dim; ++d)
                if (hi[a][d] < lo[b][d] || hi[b][d] < lo[a][d]) return false;
            return true;
        };
        for (int a = 0; a < m; ++a) {
            ConvexBody ba = k.simplex_body(a);
            for (int b = a + 1; b < m; ++b) {
                if (!boxes_meet(a, b)) continue;
                ConvexBody bb = k.simplex_body(b);
                ConvexBody inter = ba.intersect(bb);
                if (!inter.nonempty()) continue;
                std::vector<int> shared;
                for (int v : k.top_simplices[a])
                    if (std::find(k.top_simplices[b].begin(), k.top_simplices[b].end(), v) !=
                        k.top_simplices[b].end())
                        shared.push_back(v);
                if (shared.empty())
                    fail(ErrorCode::ImproperIntersection,
                         "disjoint-vertex simplices meet geometrically");
                ConvexBody shared_body = body_from_points(k.simplex_points(shared));
                if (!shared_body.contains_body(inter))
                    fail(ErrorCode::ImproperIntersection,
                         "simplices meet outside their shared face");
            }
        }
    }
    return k;
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& k) {
    if (k.dim == 0) fail(ErrorCode::GeometryError, "0-complex has no boundary operator");
    SimplicialComplex b;
    b.dim = k.dim - 1;
    b.ambient_dim = k.ambient_dim;
    b.vertices = k.vertices;
    std::vector<int> signs;
    bool oriented = k.orientation.has_value();
    for (auto& [face, cof] : facet_cofacets(k)) {
        if (cof.size() != 1) continue;
        int s = cof[0];
        const auto& verts = k.top_simplices[s];
        // Induced orientation: (-1)^i on the face omitting position i.
        int omit = -1;
        std::vector<int> remaining;
        for (size_t i = 0; i < verts.size(); ++i) {
            if (std::find(face.begin(), face.end(), verts[i]) == face.end())
                omit = int(i);
            else
                remaining.push_back(verts[i]);
        }
        b.top_simplices.push_back(face);
        if (oriented) {
            int sign = (*k.orientation)[s] * ((omit % 2 == 0) ? 1 : -1);
            if (b.dim >= 1) sign *= permutation_parity(remaining, face);
            signs.push_back(sign);
        }
    }
    if (b.top_simplices.empty()) fail(ErrorCode::GeometryError, "complex has empty boundary");
    if (oriented) b.orientation = signs;
    return b;
}

namespace {

// Orientation of `child` (tuple of points inside simplex `parent_pts`)
// relative to the parent's vertex order: sign of the barycentric matrix.
int relative_orientation(const std::vector<VecQ>& parent_pts, const std::vector<VecQ>& child_pts) {
    int n = int(parent_pts.size());
    MatQ m(n, n);
    for (int c = 0; c < n; ++c) {
        auto bc = barycentric_coords(parent_pts, child_pts[c]);
        assert(bc);
        for (int r = 0; r < n; ++r) m(r, c) = (*bc)[r];
    }
    return sgn(m.det());
}

}  // namespace

SimplicialComplex orient(const SimplicialComplex& k) {
    SimplicialComplex out = k;
    int m = int(k.top_simplices.size());
    if (k.dim == 0) {
        if (m != 2) fail(ErrorCode::NotOrientableInput, "0-sphere must have two points");
        // Lexicographically smaller point carries -1 (the S^0 convention).
        int a = k.top_simplices[0][0], b = k.top_simplices[1][0];
        bool a_smaller = k.vertices[a] < k.vertices[b];
        out.orientation = std::vector<int>{a_smaller ? -1 : 1, a_smaller ? 1 : -1};
        return out;
    }
    auto cofacets = facet_cofacets(k);
    // Connectivity over shared facets.
    std::vector<std::vector<int>> adj(m);
    for (auto& [face, cof] : cofacets)
        if (cof.size() == 2) {
            adj[cof[0]].push_back(cof[1]);
            adj[cof[1]].push_back(cof[0]);
        }
    std::vector<int> sign(m, 0);
    sign[0] = 1;
    std::queue<int> bfs;
    bfs.push(0);
    int visited = 1;
    auto induced = [&](int s, const std::vector<int>& face) {
        const auto& verts = k.top_simplices[s];
        int omit = -1;
        std::vector<int> remaining;
        for (size_t i = 0; i < verts.size(); ++i) {
            if (std::find(face.begin(), face.end(), verts[i]) == face.end())
                omit = int(i);
            else
                remaining.push_back(verts[i]);
        }
        int sg = (omit % 2 == 0) ? 1 : -1;
        if (int(face.size()) >= 2) sg *= permutation_parity(remaining, face);
        return sg;
    };
    while (!bfs.empty()) {
        int s = bfs.front();
        bfs.pop();
        for (auto& [face, cof] : cofacets) {
            if (cof.size() != 2) continue;
            int other = (cof[0] == s) ? cof[1] : (cof[1] == s ? cof[0] : -1);
            if (other < 0) continue;
            int want = -sign[s] * induced(s, face) * induced(other, face);
            if (sign[other] == 0) {
                sign[other] = want;
                ++visited;
                bfs.push(other);
            } else if (sign[other] != want) {
                fail(ErrorCode::NotOrientableInput, "incoherent orientation cycle");
            }
        }
    }
    if (visited != m) fail(ErrorCode::NotConnected, "complex is not connected");
    // Deterministic normalization. Full-dimensional complexes get the
    // positive ambient orientation; others anchor the lexicographically
    // first top simplex at +1.
    if (k.dim == k.ambient_dim) {
        int flip = sign[0] * sgn(simplex_det(k, 0));
        for (auto& s : sign) s *= flip;
        for (int i = 0; i < m; ++i)
            if (sign[i] * sgn(simplex_det(k, i)) != 1)
                fail(ErrorCode::NotOrientableInput, "incoherent determinant signs");
    } else if (k.dim == k.ambient_dim - 1) {
        // Closed hypersurfaces get the outward convention: the signed
        // volume enclosed by the oriented cycle is positive. (Sum of cone
        // determinants from the origin; origin-independent for cycles.)
        Rational svol = 0;
        for (int s = 0; s < m; ++s) {
            MatQ mm(k.ambient_dim, k.ambient_dim);
            for (int c = 0; c <= k.dim; ++c)
                for (int r = 0; r < k.ambient_dim; ++r)
                    mm(r, c) = k.vertices[k.top_simplices[s][c]][r];
            svol += sign[s] * mm.det();
        }
        if (svol < 0)
            for (auto& s : sign) s = -s;
        if (svol == 0) {
            int first = 0;
            for (int i = 1; i < m; ++i)
                if (sorted_tuple(k.top_simplices[i]) < sorted_tuple(k.top_simplices[first]))
                    first = i;
            if (sign[first] < 0)
                for (auto& s : sign) s = -s;
        }
    } else {
        int first = 0;
        for (int i = 1; i < m; ++i)
            if (sorted_tuple(k.top_simplices[i]) < sorted_tuple(k.top_simplices[first])) first = i;
        if (sign[first] < 0)
            for (auto& s : sign) s = -s;
    }
    out.orientation = sign;
    return out;
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& k, int depth) {
    if (depth < 0) fail(ErrorCode::GeometryError, "negative subdivision depth");
    if (depth == 0) return k;
    SimplicialComplex cur = k;
    for (int level = 0; level < depth; ++level) {
        SimplicialComplex next;
        next.dim = cur.dim;
        next.ambient_dim = cur.ambient_dim;
        std::map<std::vector<int>, int> face_vertex;  // sorted face -> new vertex id
        auto vertex_for_face = [&](const std::vector<int>& face) {
            auto key = sorted_tuple(face);
            auto it = face_vertex.find(key);
            if (it != face_vertex.end()) return it->second;
            VecQ c(cur.ambient_dim, Rational(0));
            for (int v : face) c = vec_add(c, cur.vertices[v]);
            c = vec_scale(Rational(1, int(face.size())), c);
            int id = int(next.vertices.size());
            next.vertices.push_back(c);
            face_vertex[key] = id;
            return id;
        };
        bool oriented = cur.orientation.has_value();
        std::vector<int> signs;
        for (int s = 0; s < int(cur.top_simplices.size()); ++s) {
            const auto& verts = cur.top_simplices[s];
            auto parent_pts = cur.simplex_points(s);
            // Chains of faces: permutations of the vertex list give flags.
            std::vector<int> perm(verts.size());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> child;
                std::vector<int> face;
                for (size_t i = 0; i < verts.size(); ++i) {
                    face.push_back(verts[perm[i]]);
                    child.push_back(vertex_for_face(face));
                }
                next.top_simplices.push_back(child);
                if (oriented) {
                    std::vector<VecQ> child_pts;
                    for (int v : child) child_pts.push_back(next.vertices[v]);
                    signs.push_back((*cur.orientation)[s] *
                                    relative_orientation(parent_pts, child_pts));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        if (oriented) next.orientation = signs;
        cur = std::move(next);
    }
    return cur;
}

PointLocation locate_point(const SimplicialComplex& k, const VecQ& x) {
    if (int(x.size()) != k.ambient_dim)
        fail(ErrorCode::ArityMismatch, "query point arity != ambient_dim");
    for (int s = 0; s < int(k.top_simplices.size()); ++s) {
        auto bc = barycentric_coords(k.simplex_points(s), x);
        if (!bc) continue;
        bool inside = true, strict = true;
        for (const auto& c : *bc) {
            if (c < 0) { inside = false; break; }
            if (c == 0) strict = false;
        }
        if (!inside) continue;
        PointLocation loc;
        loc.carrier = s;
        loc.barycentric = *bc;
        if (strict) {
            loc.kind = PointLocation::Kind::InteriorOfTopSimplex;
        } else {
            loc.kind = PointLocation::Kind::OnFace;
            for (size_t i = 0; i < bc->size(); ++i)
                if ((*bc)[i] > 0) loc.face.push_back(k.top_simplices[s][i]);
            std::sort(loc.face.begin(), loc.face.end());
        }
        return loc;
    }
    PointLocation loc;
    loc.kind = PointLocation::Kind::Outside;
    return loc;
}

Rational total_volume(const SimplicialComplex& k) {
    assert(k.dim == k.ambient_dim);
    Rational vol = 0;
    Rational fact = 1;
    for (int i = 2; i <= k.dim; ++i) fact *= i;
    for (int s = 0; s < int(k.top_simplices.size()); ++s) {
        Rational d = simplex_det(k, s);
        vol += (d < 0 ? -d : d) / fact;
    }
    return vol;
}

bool is_subcomplex_of(const SimplicialComplex& parent,
                      const std::vector<std::vector<int>>& simplices) {
    for (const auto& s : simplices) {
        auto ss = sorted_tuple(s);
        bool found = false;
        for (const auto& top : parent.top_simplices) {
            auto st = sorted_tuple(top);
            if (std::includes(st.begin(), st.end(), ss.begin(), ss.end())) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

bool connected_over_shared_vertices(const std::vector<std::vector<int>>& simplices) {
    int m = int(simplices.size());
    if (m == 0) return false;
    std::vector<int> comp(m, -1);
    std::queue<int> bfs;
    comp[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
        int s = bfs.front();
        bfs.pop();
        for (int t = 0; t < m; ++t) {
            if (comp[t] >= 0) continue;
            bool share = false;
            for (int v : simplices[s])
                if (std::find(simplices[t].begin(), simplices[t].end(), v) != simplices[t].end())
                    share = true;
            if (share) {
                comp[t] = 0;
                bfs.push(t);
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool arc_check(const std::vector<std::vector<int>>& edges) {
    if (edges.empty()) return false;
    std::map<int, int> degree;
    for (const auto& e : edges) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    int deg1 = 0;
    for (auto& [v, d] : degree) {
        if (d > 2) return false;
        if (d == 1) ++deg1;
    }
    return deg1 == 2 && connected_over_shared_vertices(edges) &&
           int(edges.size()) == int(degree.size()) - 1;
}

bool circle_check(const std::vector<std::vector<int>>& edges) {
    if (edges.empty()) return false;
    std::map<int, int> degree;
    for (const auto& e : edges) {
        ++degree[e[0]];
        ++degree[e[1]];
    }
    for (auto& [v, d] : degree)
        if (d != 2) return false;
    return connected_over_shared_vertices(edges) && edges.size() == degree.size();
}

bool disk_check(const std::vector<std::vector<int>>& tris) {
    if (tris.empty() || !connected_over_shared_vertices(tris)) return false;
    std::map<std::vector<int>, int> edge_count;
    std::set<int> verts;
    for (const auto& t : tris) {
        for (int v : t) verts.insert(v);
        for (auto& e : facets_of(t)) ++edge_count[e];
    }
    std::vector<std::vector<int>> boundary;
    for (auto& [e, c] : edge_count) {
        if (c > 2) return false;
        if (c == 1) boundary.push_back(e);
    }
    int euler = int(verts.size()) - int(edge_count.size()) + int(tris.size());
    return euler == 1 && circle_check(boundary);
}

}  // namespace

SubBall make_sub_ball(const SimplicialComplex& parent, std::vector<std::vector<int>> simplices,
                      int dim, std::optional<BallCertificate> declared) {
    for (const auto& s : simplices)
        if (int(s.size()) != dim + 1)
            fail(ErrorCode::ArityMismatch, "sub-ball simplex arity != dim+1");
    if (!is_subcomplex_of(parent, simplices))
        fail(ErrorCode::NotSubcomplex, "sub-ball simplices are not faces of the parent");
    SubBall b;
    b.parent = parent;
    b.simplices = std::move(simplices);
    b.dim = dim;
    switch (dim) {
        case 0:
            if (b.simplices.size() != 1)
                fail(ErrorCode::GeometryError, "0-ball must be a single vertex");
            b.certificate = BallCertificate::ByConstruction;
            break;
        case 1:
            if (!arc_check(b.simplices)) fail(ErrorCode::GeometryError, "subcomplex is not an arc");
            b.certificate = BallCertificate::VerifiedArc;
            break;
        case 2:
            if (!disk_check(b.simplices))
                fail(ErrorCode::GeometryError, "subcomplex is not a disk");
            b.certificate = BallCertificate::VerifiedDisk;
            break;
        default:
            if (declared != BallCertificate::ByConstruction)
                fail(ErrorCode::GeometryError,
                     "dim-3 sub-balls require a ByConstruction certificate");
            b.certificate = BallCertificate::ByConstruction;
            break;
    }
    return b;
}

std::vector<std::vector<int>> complement_simplices(const SimplicialComplex& whole,
                                                   const std::vector<std::vector<int>>& part) {
    std::set<std::vector<int>> in_part;
    for (const auto& s : part) in_part.insert(sorted_tuple(s));
    std::vector<std::vector<int>> out;
    for (const auto& s : whole.top_simplices)
        if (!in_part.count(sorted_tuple(s))) out.push_back(s);
    return out;
}

}  // namespace pltop
