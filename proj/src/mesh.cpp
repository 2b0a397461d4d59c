#include "helmls/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <utility>

namespace helmls {

namespace {

constexpr double kReferenceTolerance = 1e-12;

std::array<int, 2> facet_local_vertices(int dim, int m)
{
    if (dim == 1) {
        return {m == 0 ? 1 : 0, -1};
    }
    switch (m) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
    }
}

} // namespace

const std::array<Vec2, 3>& reference_vertices()
{
    static const std::array<Vec2, 3> verts{Vec2(0.0, 0.0), Vec2(1.0, 0.0), Vec2(0.0, 1.0)};
    return verts;
}

std::array<double, 3> reference_barycentric(int dim, const Vec2& xhat)
{
    if (dim == 1) {
        return {1.0 - xhat.x(), xhat.x(), 0.0};
    }
    return {1.0 - xhat.x() - xhat.y(), xhat.x(), xhat.y()};
}

Mesh::Mesh(int dim, std::vector<Vec2> vertices, std::vector<std::array<int, 3>> elements)
    : dim_(dim), vertices_(std::move(vertices)), elements_(std::move(elements))
{
    require(dim_ == 1 || dim_ == 2, "Mesh: only d = 1 and d = 2 are supported");
    require(!elements_.empty(), "Mesh: no elements");
    for (const auto& el : elements_) {
        for (int i = 0; i <= dim_; ++i) {
            require(el[i] >= 0 && el[i] < num_vertices(), "Mesh: element references unknown vertex");
        }
    }
    normalize_orientation();
    build_maps();
    build_facets();
}

void Mesh::normalize_orientation()
{
    for (auto& el : elements_) {
        if (dim_ == 1) {
            el[2] = -1;
            if (vertices_[el[1]].x() < vertices_[el[0]].x()) {
                std::swap(el[0], el[1]);
            }
        } else {
            const Vec2 e1 = vertices_[el[1]] - vertices_[el[0]];
            const Vec2 e2 = vertices_[el[2]] - vertices_[el[0]];
            if (e1.x() * e2.y() - e1.y() * e2.x() < 0.0) {
                std::swap(el[1], el[2]);
            }
        }
    }
}

void Mesh::build_maps()
{
    maps_.resize(elements_.size());
    h_ = 0.0;
    for (int e = 0; e < num_elements(); ++e) {
        const auto& el = elements_[e];
        ElementMap& m = maps_[e];
        m.offset = vertices_[el[0]];
        if (dim_ == 1) {
            const double len = vertices_[el[1]].x() - vertices_[el[0]].x();
            m.jacobian << len, 0.0, 0.0, 1.0;
            m.det = len;
            m.inverse << 1.0 / len, 0.0, 0.0, 1.0;
        } else {
            m.jacobian.col(0) = vertices_[el[1]] - vertices_[el[0]];
            m.jacobian.col(1) = vertices_[el[2]] - vertices_[el[0]];
            m.det = m.jacobian.determinant();
            m.inverse = m.jacobian.inverse();
        }
        require(m.det > 0.0, "Mesh: degenerate element");
        h_ = std::max(h_, element_diameter(e));
    }
}

void Mesh::build_facets()
{
    facets_.clear();
    element_facets_.assign(elements_.size(), {-1, -1, -1});
    std::map<std::pair<int, int>, int> lookup;

    for (int e = 0; e < num_elements(); ++e) {
        for (int m = 0; m <= dim_; ++m) {
            const auto local = facet_local_vertices(dim_, m);
            std::array<int, 2> key{elements_[e][local[0]], dim_ == 2 ? elements_[e][local[1]] : -1};
            if (dim_ == 2 && key[0] > key[1]) {
                std::swap(key[0], key[1]);
            }
            auto [it, inserted] = lookup.try_emplace({key[0], key[1]}, num_facets());
            if (inserted) {
                Facet f;
                f.vertices = key;
                f.elements[0] = e;
                f.local_index[0] = m;
                facets_.push_back(f);
            } else {
                Facet& f = facets_[it->second];
                require(f.elements[1] < 0, "Mesh: facet shared by more than two elements");
                f.elements[1] = e;
                f.local_index[1] = m;
            }
            element_facets_[e][m] = it->second;
        }
    }

    boundary_facets_.clear();
    for (int id = 0; id < num_facets(); ++id) {
        Facet& f = facets_[id];
        f.boundary = f.elements[1] < 0;
        if (!f.boundary && f.elements[1] < f.elements[0]) {
            std::swap(f.elements[0], f.elements[1]);
            std::swap(f.local_index[0], f.local_index[1]);
        }
        const int owner = f.elements[0];
        const Vec2 centroid = element_centroid(owner);
        if (dim_ == 1) {
            const Vec2& p = vertices_[f.vertices[0]];
            f.normal = Vec2(p.x() > centroid.x() ? 1.0 : -1.0, 0.0);
            f.measure = 1.0;
        } else {
            const Vec2& a = vertices_[f.vertices[0]];
            const Vec2& b = vertices_[f.vertices[1]];
            const Vec2 t = b - a;
            f.measure = t.norm();
            Vec2 n(t.y(), -t.x());
            n /= f.measure;
            if (n.dot(0.5 * (a + b) - centroid) < 0.0) {
                n = -n;
            }
            f.normal = n;
        }
        if (f.boundary) {
            boundary_facets_.push_back(id);
        }
    }
}

double Mesh::element_measure(int e) const
{
    return dim_ == 1 ? maps_[e].det : 0.5 * maps_[e].det;
}

double Mesh::element_diameter(int e) const
{
    const auto& el = elements_[e];
    double d = (vertices_[el[1]] - vertices_[el[0]]).norm();
    if (dim_ == 2) {
        d = std::max({d, (vertices_[el[2]] - vertices_[el[0]]).norm(),
                      (vertices_[el[2]] - vertices_[el[1]]).norm()});
    }
    return d;
}

Vec2 Mesh::element_centroid(int e) const
{
    Vec2 c = Vec2::Zero();
    for (int i = 0; i <= dim_; ++i) {
        c += vertices_[elements_[e][i]];
    }
    return c / static_cast<double>(dim_ + 1);
}

double Mesh::volume() const
{
    double v = 0.0;
    for (int e = 0; e < num_elements(); ++e) {
        v += element_measure(e);
    }
    return v;
}

Vec2 Mesh::map_to_physical(int e, const Vec2& xhat) const
{
    const auto bary = reference_barycentric(dim_, xhat);
    for (int i = 0; i <= dim_; ++i) {
        require(bary[i] >= -kReferenceTolerance, "map_to_physical: point outside the reference simplex");
    }
    const ElementMap& m = maps_[e];
    if (dim_ == 1) {
        return Vec2(m.jacobian(0, 0) * xhat.x() + m.offset.x(), 0.0);
    }
    return m.jacobian * xhat + m.offset;
}

Vec2 Mesh::map_to_reference(int e, const Vec2& x) const
{
    const ElementMap& m = maps_[e];
    if (dim_ == 1) {
        return Vec2((x.x() - m.offset.x()) * m.inverse(0, 0), 0.0);
    }
    return m.inverse * (x - m.offset);
}

void Mesh::write_text(std::ostream& out) const
{
    out << dim_ << ' ' << num_vertices() << ' ' << num_elements() << '\n';
    out.precision(17);
    for (const auto& v : vertices_) {
        out << v.x();
        if (dim_ == 2) {
            out << ' ' << v.y();
        }
        out << '\n';
    }
    for (const auto& el : elements_) {
        for (int i = 0; i <= dim_; ++i) {
            out << el[i] << (i == dim_ ? '\n' : ' ');
        }
    }
}

MeshPtr build_interval_mesh(double a, double b, int n_elems)
{
    require(n_elems >= 1, "build_interval_mesh: need at least one element");
    require(a < b, "build_interval_mesh: require a < b");
    std::vector<Vec2> verts(n_elems + 1);
    const double h = (b - a) / n_elems;
    for (int i = 0; i <= n_elems; ++i) {
        verts[i] = Vec2(i == n_elems ? b : a + i * h, 0.0);
    }
    std::vector<std::array<int, 3>> elems(n_elems);
    for (int i = 0; i < n_elems; ++i) {
        elems[i] = {i, i + 1, -1};
    }
    return std::make_shared<const Mesh>(1, std::move(verts), std::move(elems));
}

MeshPtr build_square_mesh(int n)
{
    require(n >= 1, "build_square_mesh: need n_per_side >= 1");
    std::vector<Vec2> verts;
    verts.reserve((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) {
            verts.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
        }
    }
    auto id = [n](int i, int j) { return j * (n + 1) + i; };
    std::vector<std::array<int, 3>> elems;
    elems.reserve(2 * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            elems.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            elems.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    return std::make_shared<const Mesh>(2, std::move(verts), std::move(elems));
}

MeshPtr build_polygonal_disk_mesh(int n_boundary, int n_refine)
{
    require(n_boundary >= 8, "build_polygonal_disk_mesh: need n_boundary >= 8");
    require(n_refine >= 0, "build_polygonal_disk_mesh: n_refine must be non-negative");

    std::vector<Vec2> verts{Vec2::Zero()};
    std::vector<std::array<int, 3>> elems;
    for (int i = 0; i < n_boundary; ++i) {
        const double t = 2.0 * std::numbers::pi * i / n_boundary;
        verts.emplace_back(std::cos(t), std::sin(t));
    }
    for (int i = 0; i < n_boundary; ++i) {
        elems.push_back({0, 1 + i, 1 + (i + 1) % n_boundary});
    }

    for (int level = 0; level < n_refine; ++level) {
        std::map<std::pair<int, int>, int> edge_count;
        for (const auto& el : elems) {
            for (int m = 0; m < 3; ++m) {
                int a = el[m];
                int b = el[(m + 1) % 3];
                edge_count[{std::min(a, b), std::max(a, b)}] += 1;
            }
        }
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            auto it = midpoint.find(key);
            if (it != midpoint.end()) {
                return it->second;
            }
            Vec2 p = 0.5 * (verts[a] + verts[b]);
            if (edge_count[key] == 1) {
                p.normalize();
            }
            verts.push_back(p);
            const int id = static_cast<int>(verts.size()) - 1;
            midpoint.emplace(key, id);
            return id;
        };
        std::vector<std::array<int, 3>> refined;
        refined.reserve(4 * elems.size());
        for (const auto& el : elems) {
            const int m01 = mid(el[0], el[1]);
            const int m12 = mid(el[1], el[2]);
            const int m20 = mid(el[2], el[0]);
            refined.push_back({el[0], m01, m20});
            refined.push_back({m01, el[1], m12});
            refined.push_back({m20, m12, el[2]});
            refined.push_back({m01, m12, m20});
        }
        elems = std::move(refined);
    }
    return std::make_shared<const Mesh>(2, std::move(verts), std::move(elems));
}

} // namespace helmls
