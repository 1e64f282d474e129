#include "pdflow/boundary.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "pdflow/parallel.hpp"
#include "pdflow/quadrature.hpp"

namespace pdflow {

TraceValues TraceValues::zeros(const Mesh& mesh) {
    TraceValues t;
    t.v.assign(static_cast<std::size_t>(mesh.num_boundary_edges()), {Point{}, Point{}});
    return t;
}

BoundaryData BoundaryData::zeros(const Mesh& mesh) {
    BoundaryData d;
    d.g1 = DiscreteField::zeros(Space::ScalarP1, mesh);
    d.g2.assign(static_cast<std::size_t>(mesh.num_nodes()), Point{});
    return d;
}

TraceValues trace_from_nodal(const Mesh& mesh, const std::vector<Point>& nodal) {
    if (nodal.size() != static_cast<std::size_t>(mesh.num_nodes()))
        throw std::invalid_argument("trace_from_nodal: nodal array size mismatch");
    TraceValues t = TraceValues::zeros(mesh);
    const auto& bedges = mesh.boundary_edges();
    for (std::size_t i = 0; i < bedges.size(); ++i) {
        t.v[i][0] = nodal[static_cast<std::size_t>(bedges[i].a)];
        t.v[i][1] = nodal[static_cast<std::size_t>(bedges[i].b)];
    }
    return t;
}

BoundarySplit decompose_boundary(const BoundaryData& data, const Mesh& mesh) {
    if (data.g2.size() != static_cast<std::size_t>(mesh.num_nodes()))
        throw std::invalid_argument("decompose_boundary: g2 must provide all boundary node values");
    BoundarySplit out{TraceValues::zeros(mesh), TraceValues::zeros(mesh)};
    const auto& bedges = mesh.boundary_edges();
    for (std::size_t i = 0; i < bedges.size(); ++i) {
        const Point n = bedges[i].normal;
        const Point ge[2] = {data.g2[static_cast<std::size_t>(bedges[i].a)],
                             data.g2[static_cast<std::size_t>(bedges[i].b)]};
        for (int k = 0; k < 2; ++k) {
            const Point gn = dot(ge[k], n) * n;
            out.g_n.v[i][static_cast<std::size_t>(k)] = gn;
            out.g_t.v[i][static_cast<std::size_t>(k)] = ge[k] - gn;
        }
    }
    return out;
}

double check_compatibility(const BoundaryData& data, const Mesh& mesh) {
    double vol = 0.0;
    const DiscreteField& g1 = data.g1;
    if (g1.space == Space::ScalarP1) {
        for (int t = 0; t < mesh.num_triangles(); ++t) {
            const auto& tri = mesh.triangle(t);
            const double s = g1.dofs[static_cast<std::size_t>(tri[0])] +
                             g1.dofs[static_cast<std::size_t>(tri[1])] +
                             g1.dofs[static_cast<std::size_t>(tri[2])];
            vol += mesh.triangle_area(t) * s / 3.0;
        }
    } else if (g1.space == Space::ScalarP0) {
        for (int t = 0; t < mesh.num_triangles(); ++t)
            vol += mesh.triangle_area(t) * g1.dofs[static_cast<std::size_t>(t)];
    } else {
        throw std::invalid_argument("check_compatibility: g1 must be scalar P0 or P1");
    }

    double flux = 0.0;
    for (const auto& be : mesh.boundary_edges()) {
        const double len = norm(mesh.node(be.b) - mesh.node(be.a));
        const Point mean = 0.5 * (data.g2[static_cast<std::size_t>(be.a)] +
                                  data.g2[static_cast<std::size_t>(be.b)]);
        flux += len * dot(mean, be.normal);
    }
    return std::abs(vol - flux);
}

TraceValues trace_add(const TraceValues& a, const TraceValues& b) {
    if (a.v.size() != b.v.size()) throw std::invalid_argument("trace_add: size mismatch");
    TraceValues out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) {
        out.v[i][0] = out.v[i][0] + b.v[i][0];
        out.v[i][1] = out.v[i][1] + b.v[i][1];
    }
    return out;
}

std::vector<Point> nodal_from_trace(const TraceValues& trace, const Mesh& mesh) {
    std::vector<Point> sum(static_cast<std::size_t>(mesh.num_nodes()), Point{});
    std::vector<int> count(static_cast<std::size_t>(mesh.num_nodes()), 0);
    const auto& bedges = mesh.boundary_edges();
    for (std::size_t i = 0; i < bedges.size(); ++i) {
        const int ids[2] = {bedges[i].a, bedges[i].b};
        for (int k = 0; k < 2; ++k) {
            sum[static_cast<std::size_t>(ids[k])] =
                sum[static_cast<std::size_t>(ids[k])] + trace.v[i][static_cast<std::size_t>(k)];
            count[static_cast<std::size_t>(ids[k])] += 1;
        }
    }
    for (std::size_t i = 0; i < sum.size(); ++i)
        if (count[i] > 0) sum[i] = (1.0 / count[i]) * sum[i];
    return sum;
}

std::vector<std::pair<int, Point>> p2_boundary_values(const TraceValues& trace, const Mesh& mesh) {
    const std::vector<Point> nodal = nodal_from_trace(trace, mesh);
    std::vector<std::pair<int, Point>> out;
    const auto& bedges = mesh.boundary_edges();
    for (int i = 0; i < mesh.num_nodes(); ++i)
        if (mesh.is_boundary_node(i)) out.emplace_back(i, nodal[static_cast<std::size_t>(i)]);
    for (std::size_t i = 0; i < bedges.size(); ++i) {
        const Point mid = 0.5 * (trace.v[i][0] + trace.v[i][1]);
        out.emplace_back(mesh.num_nodes() + bedges[i].edge_id, mid);
    }
    return out;
}

double boundary_norm_Lp(const TraceValues& g, double p, const Mesh& mesh) {
    if (!(p >= 1.0)) throw std::invalid_argument("boundary_norm_Lp: p must be at least 1");
    const auto& bedges = mesh.boundary_edges();
    double acc = 0.0;
    for (std::size_t i = 0; i < bedges.size(); ++i) {
        const double len = norm(mesh.node(bedges[i].b) - mesh.node(bedges[i].a));
        for (const auto& qp : line_rule_5()) {
            const Point val = (1.0 - qp.x) * g.v[i][0] + qp.x * g.v[i][1];
            acc += len * qp.w * std::pow(norm(val), p);
        }
    }
    return std::pow(acc, 1.0 / p);
}

namespace {

struct EdgeGeom {
    Point a, b;
    double len;
    Point ga, gb;
};

// |g(x(s)) - g(y(t))|^p / |x(s) - y(t)|^{1+theta p} for points given by arc
// parameters on two edges.
double pair_integrand(const EdgeGeom& ei, const EdgeGeom& ej, double s, double t, double p,
                      double exponent) {
    const double si = s / ei.len, tj = t / ej.len;
    const Point x = (1.0 - si) * ei.a + si * ei.b;
    const Point y = (1.0 - tj) * ej.a + tj * ej.b;
    const Point gx = (1.0 - si) * ei.ga + si * ei.gb;
    const Point gy = (1.0 - tj) * ej.ga + tj * ej.gb;
    const double dist = norm(x - y);
    if (dist == 0.0) return 0.0;
    return std::pow(norm(gx - gy), p) / std::pow(dist, exponent);
}

}  // namespace

double boundary_norm_fractional(const TraceValues& g, double theta, double p, const Mesh& mesh) {
    if (!(theta > 0.0) || !(theta < 1.0))
        throw std::invalid_argument("boundary_norm_fractional: theta must lie in (0,1)");
    if (!(p >= 1.0)) throw std::invalid_argument("boundary_norm_fractional: p must be at least 1");

    const auto& bedges = mesh.boundary_edges();
    const std::size_t nb = bedges.size();
    std::vector<EdgeGeom> geo(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        geo[i].a = mesh.node(bedges[i].a);
        geo[i].b = mesh.node(bedges[i].b);
        geo[i].len = norm(geo[i].b - geo[i].a);
        geo[i].ga = g.v[i][0];
        geo[i].gb = g.v[i][1];
    }
    const double exponent = 1.0 + theta * p;
    const double beta = p - 1.0 - theta * p;  // self-edge kernel power of |s-t|

    // Geometric panels toward the shared-vertex singularity of adjacent pairs.
    static const double panels[5] = {0.0, 1.0 / 64.0, 1.0 / 16.0, 0.25, 1.0};

    auto pair_term = [&](std::size_t idx) {
        const std::size_t i = idx / nb, j = idx % nb;
        const EdgeGeom& ei = geo[i];
        const EdgeGeom& ej = geo[j];
        if (i == j) {
            // g linear on a straight edge: closed form.
            const double slope = norm(ei.gb - ei.ga) / ei.len;
            return std::pow(slope, p) * 2.0 * std::pow(ei.len, beta + 2.0) /
                   ((beta + 1.0) * (beta + 2.0));
        }
        // Shared endpoint, by geometry (corner values of g may differ).
        Point shared;
        bool adjacent = false;
        for (const Point& u : {ei.a, ei.b})
            for (const Point& w : {ej.a, ej.b})
                if (norm(u - w) < 1e-14) {
                    shared = u;
                    adjacent = true;
                }
        double acc = 0.0;
        if (!adjacent) {
            for (const auto& qs : line_rule_5())
                for (const auto& qt : line_rule_5())
                    acc += qs.w * qt.w * ei.len * ej.len *
                           pair_integrand(ei, ej, qs.x * ei.len, qt.x * ej.len, p, exponent);
            return acc;
        }
        // Arc distance measured from the shared vertex on both edges.
        auto arc_from_shared = [&](const EdgeGeom& e, double u) {
            return norm(e.a - shared) < 1e-14 ? u : e.len - u;
        };
        // Duffy split of [0,L1]x[0,L2]: two collapsed maps concentrating the
        // quadrature at the shared vertex, with geometric panels in xi.
        for (int region = 0; region < 2; ++region) {
            for (int pan = 0; pan < 4; ++pan) {
                const double x0 = panels[pan], x1 = panels[pan + 1];
                for (const auto& qx : line_rule_5()) {
                    const double xi = x0 + (x1 - x0) * qx.x;
                    const double wxi = (x1 - x0) * qx.w;
                    for (const auto& qz : line_rule_5()) {
                        const double zeta = qz.x;
                        double si, tj;
                        if (region == 0) {
                            si = ei.len * xi;
                            tj = ej.len * xi * zeta;
                        } else {
                            si = ei.len * xi * zeta;
                            tj = ej.len * xi;
                        }
                        const double jac = ei.len * ej.len * xi;
                        acc += wxi * qz.w * jac *
                               pair_integrand(ei, ej, arc_from_shared(ei, si),
                                              arc_from_shared(ej, tj), p, exponent);
                    }
                }
            }
        }
        return acc;
    };

    const double semi = reduce_sum(nb * nb, pair_term);
    const double lp = boundary_norm_Lp(g, p, mesh);
    return std::pow(std::pow(lp, p) + semi, 1.0 / p);
}

DiscreteField distance_field(const Mesh& mesh) {
    DiscreteField f = DiscreteField::zeros(Space::ScalarP1, mesh);
    f.dofs = boundary_distance(mesh);
    return f;
}

}  // namespace pdflow
