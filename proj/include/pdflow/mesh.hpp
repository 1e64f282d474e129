#ifndef PDFLOW_MESH_HPP
#define PDFLOW_MESH_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace pdflow {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double t, Point a) { return {t * a.x, t * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double norm(Point a);

/// Oriented boundary edge a -> b with the domain on its left; n is the
/// outward unit normal, marker identifies the boundary component.
struct BoundaryEdge {
    int a = 0;
    int b = 0;
    int marker = 0;
    Point normal;
    int edge_id = 0;  // global edge index (used for P2 midpoint dofs)
};

/// Conforming triangulation of a planar domain. Triangles are stored
/// counter-clockwise; the edge table numbers all element edges for P2
/// spaces. Immutable after construction.
class Mesh {
public:
    Mesh(std::vector<Point> nodes, std::vector<std::array<int, 3>> triangles,
         std::vector<int> boundary_markers = {});

    static Mesh unit_square(int resolution);
    static Mesh disc(int resolution);
    static Mesh annulus(int resolution);

    static Mesh read_text(std::istream& in);
    void write_text(std::ostream& out) const;

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    int num_triangles() const { return static_cast<int>(tris_.size()); }
    int num_edges() const { return static_cast<int>(edge_nodes_.size()); }
    int num_boundary_edges() const { return static_cast<int>(bedges_.size()); }

    const Point& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    const std::array<int, 3>& triangle(int t) const { return tris_[static_cast<std::size_t>(t)]; }
    const std::array<int, 3>& triangle_edges(int t) const {
        return tri_edges_[static_cast<std::size_t>(t)];
    }
    const std::array<int, 2>& edge_nodes(int e) const {
        return edge_nodes_[static_cast<std::size_t>(e)];
    }
    const std::vector<BoundaryEdge>& boundary_edges() const { return bedges_; }
    bool is_boundary_node(int i) const { return boundary_node_[static_cast<std::size_t>(i)]; }
    bool is_boundary_edge(int e) const { return boundary_edge_[static_cast<std::size_t>(e)]; }

    double h_max() const { return h_max_; }
    double triangle_area(int t) const;
    double total_area() const;
    double boundary_length() const;
    double diameter() const;

private:
    void build_edges_and_boundary(const std::vector<int>& boundary_markers);
    void validate() const;

    std::vector<Point> nodes_;
    std::vector<std::array<int, 3>> tris_;
    std::vector<BoundaryEdge> bedges_;
    std::vector<std::array<int, 2>> edge_nodes_;
    std::vector<std::array<int, 3>> tri_edges_;
    std::vector<bool> boundary_node_;
    std::vector<bool> boundary_edge_;
    double h_max_ = 0.0;
};

Mesh build_mesh(const std::string& domain, int resolution);

/// Exact Euclidean distance from every node to the polygonal boundary.
std::vector<double> boundary_distance(const Mesh& mesh);

}  // namespace pdflow

#endif
