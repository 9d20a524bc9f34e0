#ifndef TSIH_SIMPLICIAL_HPP
#define TSIH_SIMPLICIAL_HPP

#include <map>

#include "tsih/fg_group.hpp"

namespace tsih {

// Finite simplicial complex given by its top-dimensional simplices. Facets
// must all have the same dimension; faces are stored sorted, and chain
// groups use the lexicographic orientation convention.
class SimplicialComplex {
  public:
    SimplicialComplex(std::size_t vertex_count, std::vector<std::vector<int>> facets);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    // Dimension of the facets, or -1 for a complex with no facets.
    int dimension() const { return dimension_; }

    // All d-simplices in lexicographic order; empty outside [0, dimension].
    const std::vector<std::vector<int>>& faces(int d) const;
    std::size_t face_count(int d) const { return faces(d).size(); }
    // Position of a d-simplex (sorted vertex list) in faces(d).
    std::size_t face_index(int d, const std::vector<int>& simplex) const;

  private:
    std::size_t vertex_count_;
    std::vector<std::vector<int>> facets_;
    int dimension_;
    std::vector<std::vector<std::vector<int>>> faces_;
    std::vector<std::map<std::vector<int>, std::size_t>> index_;
};

// Boundary operators with alternating signs; entry [k] maps k-chains to
// (k-1)-chains, with [0] the zero map out of the vertices.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& k);

// Integral homology in normal form, degrees 0 through dimension.
std::vector<FgAbGroup> homology(const SimplicialComplex& k);

// Subcomplex of codimension-1 faces lying in exactly one facet. Throws
// NotManifoldLike if some codimension-1 face lies in three or more facets.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& k);

// True iff facet orientations can be chosen so induced orientations cancel
// on every codimension-1 face shared by two facets.
bool check_orientable(const SimplicialComplex& k);

struct ExactnessReport {
    bool ok = true;
    std::string detail;
};

// Homology long exact sequence data of a compact manifold with boundary:
// per degree, the homology of the boundary, of the manifold, and of the
// pair, with the inclusion-induced, relativization, and connecting maps.
class LesPackage {
  public:
    static LesPackage from_parts(int n, std::vector<FgAbGroup> boundary, std::vector<FgAbGroup> manifold,
                                 std::vector<FgAbGroup> relative, std::vector<IntMatrix> include_mats,
                                 std::vector<IntMatrix> relativize_mats, std::vector<IntMatrix> connecting_mats);

    int n() const { return n_; }

    // Groups per degree, zero outside [0, n].
    FgAbGroup boundary(int i) const;
    FgAbGroup manifold(int i) const;
    FgAbGroup relative(int i) const;

    // Maps per degree, zero maps outside the stored range.
    GroupHom include_boundary(int i) const;  // H_i(boundary) -> H_i(manifold)
    GroupHom relativize(int i) const;        // H_i(manifold) -> H_i(pair)
    GroupHom connecting(int i) const;        // H_i(pair) -> H_{i-1}(boundary)

    // Checks im = ker at every node of the long sequence.
    ExactnessReport validate_exactness() const;

  private:
    LesPackage() : n_(0) {}

    int n_;
    std::vector<FgAbGroup> b_, m_, r_;
    std::vector<GroupHom> inc_, rel_, del_;
};

// Build the long-exact-sequence package of (M, boundary of M) from a
// triangulation of M. Throws EmptyBoundary, NotOrientable, NotManifoldLike.
LesPackage les_package(const SimplicialComplex& k);

}  // namespace tsih

#endif
