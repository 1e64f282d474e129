#include "pdflow/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pdflow/parallel.hpp"

namespace pdflow {

double norm(Point a) { return std::sqrt(a.x * a.x + a.y * a.y); }

namespace {

double signed_area(const Point& a, const Point& b, const Point& c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point proj = a + t * ab;
    return norm(p - proj);
}

}  // namespace

Mesh::Mesh(std::vector<Point> nodes, std::vector<std::array<int, 3>> triangles,
           std::vector<int> boundary_markers)
    : nodes_(std::move(nodes)), tris_(std::move(triangles)) {
    for (auto& t : tris_) {
        for (int v : t)
            if (v < 0 || v >= num_nodes()) throw std::invalid_argument("Mesh: node index out of range");
        if (signed_area(nodes_[static_cast<std::size_t>(t[0])], nodes_[static_cast<std::size_t>(t[1])],
                        nodes_[static_cast<std::size_t>(t[2])]) < 0.0)
            std::swap(t[1], t[2]);
    }
    build_edges_and_boundary(boundary_markers);
    validate();
}

void Mesh::build_edges_and_boundary(const std::vector<int>& boundary_markers) {
    std::map<std::pair<int, int>, int> edge_ids;
    std::vector<int> owners;  // triangles per edge
    tri_edges_.assign(tris_.size(), {0, 0, 0});
    for (std::size_t t = 0; t < tris_.size(); ++t) {
        const auto& tri = tris_[t];
        for (int le = 0; le < 3; ++le) {
            const int a = tri[static_cast<std::size_t>(le)];
            const int b = tri[static_cast<std::size_t>((le + 1) % 3)];
            const auto key = std::minmax(a, b);
            auto it = edge_ids.find(key);
            int id;
            if (it == edge_ids.end()) {
                id = static_cast<int>(edge_nodes_.size());
                edge_ids.emplace(key, id);
                edge_nodes_.push_back({key.first, key.second});
                owners.push_back(0);
            } else {
                id = it->second;
            }
            owners[static_cast<std::size_t>(id)] += 1;
            if (owners[static_cast<std::size_t>(id)] > 2)
                throw std::invalid_argument("Mesh: edge shared by more than two triangles");
            tri_edges_[t][static_cast<std::size_t>(le)] = id;
        }
    }

    boundary_edge_.assign(edge_nodes_.size(), false);
    boundary_node_.assign(nodes_.size(), false);
    bedges_.clear();
    std::size_t bcount = 0;
    for (std::size_t t = 0; t < tris_.size(); ++t) {
        const auto& tri = tris_[t];
        const Point centroid = (1.0 / 3.0) * (nodes_[static_cast<std::size_t>(tri[0])] +
                                              nodes_[static_cast<std::size_t>(tri[1])] +
                                              nodes_[static_cast<std::size_t>(tri[2])]);
        for (int le = 0; le < 3; ++le) {
            const int id = tri_edges_[t][static_cast<std::size_t>(le)];
            if (owners[static_cast<std::size_t>(id)] != 1) continue;
            const int a = tri[static_cast<std::size_t>(le)];
            const int b = tri[static_cast<std::size_t>((le + 1) % 3)];
            BoundaryEdge be;
            be.a = a;
            be.b = b;
            be.edge_id = id;
            const Point pa = nodes_[static_cast<std::size_t>(a)];
            const Point pb = nodes_[static_cast<std::size_t>(b)];
            const Point dir = pb - pa;
            const double len = norm(dir);
            be.normal = {dir.y / len, -dir.x / len};
            const Point mid = 0.5 * (pa + pb);
            if (dot(be.normal, mid - centroid) <= 0.0)
                throw std::logic_error("Mesh: computed boundary normal points inward");
            be.marker = bcount < boundary_markers.size()
                            ? boundary_markers[bcount]
                            : 0;
            ++bcount;
            bedges_.push_back(be);
            boundary_edge_[static_cast<std::size_t>(id)] = true;
            boundary_node_[static_cast<std::size_t>(a)] = true;
            boundary_node_[static_cast<std::size_t>(b)] = true;
        }
    }

    h_max_ = 0.0;
    for (const auto& e : edge_nodes_) {
        const double len = norm(nodes_[static_cast<std::size_t>(e[0])] -
                                nodes_[static_cast<std::size_t>(e[1])]);
        h_max_ = std::max(h_max_, len);
    }
}

void Mesh::validate() const {
    if (nodes_.size() < 3 || tris_.empty()) throw std::invalid_argument("Mesh: too few entities");
    for (int t = 0; t < num_triangles(); ++t)
        if (triangle_area(t) <= 0.0) throw std::invalid_argument("Mesh: degenerate triangle");
    if (bedges_.empty()) throw std::invalid_argument("Mesh: no boundary found");
    for (const auto& be : bedges_) {
        if (std::abs(norm(be.normal) - 1.0) > 1e-12)
            throw std::logic_error("Mesh: boundary normal not unit length");
    }
}

double Mesh::triangle_area(int t) const {
    const auto& tri = tris_[static_cast<std::size_t>(t)];
    return signed_area(nodes_[static_cast<std::size_t>(tri[0])],
                       nodes_[static_cast<std::size_t>(tri[1])],
                       nodes_[static_cast<std::size_t>(tri[2])]);
}

double Mesh::total_area() const {
    double s = 0.0;
    for (int t = 0; t < num_triangles(); ++t) s += triangle_area(t);
    return s;
}

double Mesh::boundary_length() const {
    double s = 0.0;
    for (const auto& be : bedges_)
        s += norm(nodes_[static_cast<std::size_t>(be.a)] - nodes_[static_cast<std::size_t>(be.b)]);
    return s;
}

double Mesh::diameter() const {
    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    for (const auto& p : nodes_) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    return norm({hi_x - lo_x, hi_y - lo_y});
}

Mesh Mesh::unit_square(int n) {
    if (n < 2) throw std::invalid_argument("unit_square: resolution must be at least 2");
    std::vector<Point> nodes;
    nodes.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            nodes.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
    std::vector<std::array<int, 3>> tris;
    tris.reserve(static_cast<std::size_t>(2 * n * n));
    auto id = [n](int i, int j) { return j * (n + 1) + i; };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    return Mesh(std::move(nodes), std::move(tris));
}

Mesh Mesh::disc(int n) {
    if (n < 2) throw std::invalid_argument("disc: resolution must be at least 2");
    // Hexagonal rings: ring k carries 6k nodes at radius k/n.
    std::vector<Point> nodes;
    std::vector<int> ring_start(static_cast<std::size_t>(n + 1), 0);
    nodes.push_back({0.0, 0.0});
    for (int k = 1; k <= n; ++k) {
        ring_start[static_cast<std::size_t>(k)] = static_cast<int>(nodes.size());
        const double rad = static_cast<double>(k) / n;
        for (int j = 0; j < 6 * k; ++j) {
            const double th = 2.0 * M_PI * j / (6.0 * k);
            nodes.push_back({rad * std::cos(th), rad * std::sin(th)});
        }
    }
    auto ring_node = [&](int k, int j) {
        if (k == 0) return 0;
        const int m = 6 * k;
        return ring_start[static_cast<std::size_t>(k)] + ((j % m) + m) % m;
    };
    std::vector<std::array<int, 3>> tris;
    for (int s = 0; s < 6; ++s)
        tris.push_back({0, ring_node(1, s), ring_node(1, s + 1)});
    for (int k = 2; k <= n; ++k)
        for (int s = 0; s < 6; ++s)
            for (int i = 0; i < k; ++i) {
                const int o0 = ring_node(k, s * k + i);
                const int o1 = ring_node(k, s * k + i + 1);
                const int i0 = ring_node(k - 1, s * (k - 1) + i);
                tris.push_back({o0, o1, i0});
                if (i < k - 1) {
                    const int i1 = ring_node(k - 1, s * (k - 1) + i + 1);
                    tris.push_back({o1, i1, i0});
                }
            }
    return Mesh(std::move(nodes), std::move(tris));
}

Mesh Mesh::annulus(int n) {
    if (n < 2) throw std::invalid_argument("annulus: resolution must be at least 2");
    const double r_in = 0.5, r_out = 1.0;
    const int m = 6 * n;  // angular nodes per ring
    std::vector<Point> nodes;
    for (int j = 0; j <= n; ++j) {
        const double rad = r_in + (r_out - r_in) * j / n;
        for (int i = 0; i < m; ++i) {
            const double th = 2.0 * M_PI * i / m;
            nodes.push_back({rad * std::cos(th), rad * std::sin(th)});
        }
    }
    auto id = [m](int j, int i) { return j * m + ((i % m) + m) % m; };
    std::vector<std::array<int, 3>> tris;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            tris.push_back({id(j, i), id(j, i + 1), id(j + 1, i + 1)});
            tris.push_back({id(j, i), id(j + 1, i + 1), id(j + 1, i)});
        }
    Mesh mesh(std::move(nodes), std::move(tris));
    // Re-tag markers by radius: outer component 0, inner component 1.
    std::vector<int> markers;
    markers.reserve(static_cast<std::size_t>(mesh.num_boundary_edges()));
    std::vector<Point> pts(mesh.nodes_.begin(), mesh.nodes_.end());
    for (const auto& be : mesh.bedges_) {
        const Point mid = 0.5 * (pts[static_cast<std::size_t>(be.a)] + pts[static_cast<std::size_t>(be.b)]);
        markers.push_back(norm(mid) < 0.5 * (r_in + r_out) ? 1 : 0);
    }
    for (std::size_t i = 0; i < markers.size(); ++i) mesh.bedges_[i].marker = markers[i];
    return mesh;
}

Mesh build_mesh(const std::string& domain, int resolution) {
    if (domain == "unit-square") return Mesh::unit_square(resolution);
    if (domain == "disc") return Mesh::disc(resolution);
    if (domain == "annulus") return Mesh::annulus(resolution);
    throw std::invalid_argument("build_mesh: unknown domain tag '" + domain + "'");
}

Mesh Mesh::read_text(std::istream& in) {
    std::string keyword;
    auto expect = [&](const char* kw) {
        if (!(in >> keyword) || keyword != kw)
            throw std::runtime_error(std::string("Mesh::read_text: expected '") + kw + "'");
    };
    expect("NODES");
    int n = 0;
    in >> n;
    std::vector<Point> nodes(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int id;
        in >> id >> nodes[static_cast<std::size_t>(i)].x >> nodes[static_cast<std::size_t>(i)].y;
        if (id != i) throw std::runtime_error("Mesh::read_text: node ids must be consecutive");
    }
    expect("TRIANGLES");
    int nt = 0;
    in >> nt;
    std::vector<std::array<int, 3>> tris(static_cast<std::size_t>(nt));
    for (int i = 0; i < nt; ++i) {
        int id;
        auto& t = tris[static_cast<std::size_t>(i)];
        in >> id >> t[0] >> t[1] >> t[2];
        if (id != i) throw std::runtime_error("Mesh::read_text: triangle ids must be consecutive");
    }
    expect("BOUNDARY");
    int nb = 0;
    in >> nb;
    std::map<std::pair<int, int>, int> markers;
    for (int i = 0; i < nb; ++i) {
        int id, a, b, marker;
        in >> id >> a >> b >> marker;
        markers[std::minmax(a, b)] = marker;
    }
    Mesh mesh(std::move(nodes), std::move(tris));
    if (static_cast<int>(markers.size()) != mesh.num_boundary_edges())
        throw std::runtime_error("Mesh::read_text: boundary record count mismatch");
    for (auto& be : mesh.bedges_) {
        const auto it = markers.find(std::minmax(be.a, be.b));
        if (it == markers.end())
            throw std::runtime_error("Mesh::read_text: listed boundary edge not on the mesh boundary");
        be.marker = it->second;
    }
    return mesh;
}

void Mesh::write_text(std::ostream& out) const {
    out << "NODES " << num_nodes() << "\n";
    char buf[80];
    for (int i = 0; i < num_nodes(); ++i) {
        std::snprintf(buf, sizeof buf, "%d %.17g %.17g\n", i, node(i).x, node(i).y);
        out << buf;
    }
    out << "TRIANGLES " << num_triangles() << "\n";
    for (int t = 0; t < num_triangles(); ++t) {
        const auto& tri = triangle(t);
        out << t << " " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
    }
    out << "BOUNDARY " << num_boundary_edges() << "\n";
    for (int i = 0; i < num_boundary_edges(); ++i) {
        const auto& be = bedges_[static_cast<std::size_t>(i)];
        out << i << " " << be.a << " " << be.b << " " << be.marker << "\n";
    }
}

std::vector<double> boundary_distance(const Mesh& mesh) {
    const auto& bedges = mesh.boundary_edges();
    std::vector<double> dist(static_cast<std::size_t>(mesh.num_nodes()), 0.0);
    parallel_for(static_cast<std::size_t>(mesh.num_nodes()), [&](std::size_t i) {
        const Point p = mesh.node(static_cast<int>(i));
        double best = 1e300;
        for (const auto& be : bedges) {
            const double d = point_segment_distance(p, mesh.node(be.a), mesh.node(be.b));
            if (d < best) best = d;
        }
        dist[i] = best;
    });
    return dist;
}

}  // namespace pdflow
