#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <vector>

#include "helmls/types.hpp"

namespace helmls {

/// Affine element map x = A * xhat + offset from the reference simplex.
struct ElementMap {
    Mat2 jacobian = Mat2::Identity();
    Vec2 offset = Vec2::Zero();
    double det = 1.0;
    Mat2 inverse = Mat2::Identity();
};

/// A facet is an endpoint vertex (d = 1) or an edge (d = 2).
///
/// `vertices` is sorted ascending; in 1D the second slot is -1. Interior facets
/// list their adjacent elements in ascending order and carry the normal pointing
/// out of `elements[0]`. Boundary facets have `elements[1] == -1` and an outward
/// normal. `local_index[i]` is the facet's local number inside `elements[i]`
/// (local facet m is the one opposite local vertex m).
struct Facet {
    std::array<int, 2> vertices{-1, -1};
    std::array<int, 2> elements{-1, -1};
    std::array<int, 2> local_index{-1, -1};
    bool boundary = false;
    Vec2 normal = Vec2::Zero();
    double measure = 0.0;
};

class Mesh {
public:
    Mesh(int dim, std::vector<Vec2> vertices, std::vector<std::array<int, 3>> elements);

    int dim() const { return dim_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_elements() const { return static_cast<int>(elements_.size()); }
    int num_facets() const { return static_cast<int>(facets_.size()); }
    int vertices_per_element() const { return dim_ + 1; }

    const std::vector<Vec2>& vertices() const { return vertices_; }
    const Vec2& vertex(int v) const { return vertices_[v]; }
    /// Element vertex tuples; in 1D only the first two slots are used.
    const std::array<int, 3>& element(int e) const { return elements_[e]; }
    const std::vector<Facet>& facets() const { return facets_; }
    const Facet& facet(int f) const { return facets_[f]; }
    /// Facet id of local facet m of element e.
    int element_facet(int e, int m) const { return element_facets_[e][m]; }
    const ElementMap& map(int e) const { return maps_[e]; }
    const std::vector<int>& boundary_facets() const { return boundary_facets_; }

    double h() const { return h_; }
    double element_measure(int e) const;
    double element_diameter(int e) const;
    Vec2 element_centroid(int e) const;
    /// Sum of element measures.
    double volume() const;

    /// Affine map of element e applied to a reference point; rejects points
    /// outside the reference simplex (barycentric tolerance 1e-12).
    Vec2 map_to_physical(int e, const Vec2& xhat) const;
    Vec2 map_to_reference(int e, const Vec2& x) const;

    /// Plain-text dump: header line, vertices, elements (0-based indices).
    void write_text(std::ostream& out) const;

private:
    void normalize_orientation();
    void build_maps();
    void build_facets();

    int dim_;
    std::vector<Vec2> vertices_;
    std::vector<std::array<int, 3>> elements_;
    std::vector<ElementMap> maps_;
    std::vector<Facet> facets_;
    std::vector<std::array<int, 3>> element_facets_;
    std::vector<int> boundary_facets_;
    double h_ = 0.0;
};

using MeshPtr = std::shared_ptr<const Mesh>;

/// Uniform mesh of (a, b) with n_elems elements.
MeshPtr build_interval_mesh(double a, double b, int n_elems);

/// Unit square split into 2 n^2 congruent right triangles.
MeshPtr build_square_mesh(int n_per_side);

/// Fan triangulation of the inscribed regular n_boundary-gon of the unit
/// circle, refined n_refine times by quadrisection with boundary midpoints
/// projected onto the circle.
MeshPtr build_polygonal_disk_mesh(int n_boundary, int n_refine);

/// Barycentric coordinates of a reference point (d + 1 entries).
std::array<double, 3> reference_barycentric(int dim, const Vec2& xhat);

/// Vertices of the reference simplex: 0, 1 (d = 1) or (0,0), (1,0), (0,1).
const std::array<Vec2, 3>& reference_vertices();

} // namespace helmls
