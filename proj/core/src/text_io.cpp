#include "npspread/text_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace npspread {

std::string coordinate_name(std::size_t n, std::size_t i) {
    static const char* uvw[] = {"u", "v", "w"};
    if (n <= 3) {
        return uvw[i];
    }
    return "u" + std::to_string(i + 1);
}

std::string format_linear(const QVector& normal, std::size_t n) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < normal.size(); ++i) {
        const Rational& c = normal[i];
        if (c == 0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (mag != 1) {
            out << to_string(mag);
        }
        out << coordinate_name(n, i);
        first = false;
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

std::string format_qvector(const QVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += to_string(v[i]);
    }
    return out + ")";
}

std::string format_hrep(const HRep& h, bool ge_inequalities) {
    std::ostringstream out;
    for (const Hyperplane& e : h.equalities) {
        out << "  " << format_linear(e.normal, h.dim) << " = " << to_string(e.rhs) << "\n";
    }
    for (const Halfspace& f : h.inequalities) {
        if (ge_inequalities) {
            QVector neg = f.normal;
            for (Rational& x : neg) {
                x = -x;
            }
            out << "  " << format_linear(neg, h.dim) << " >= " << to_string(Rational(-f.rhs))
                << "\n";
        } else {
            out << "  " << format_linear(f.normal, h.dim) << " <= " << to_string(f.rhs) << "\n";
        }
    }
    return out.str();
}

std::string format_vrep(const VRep& v) {
    std::ostringstream out;
    out << "  vertices:";
    for (const QVector& p : v.vertices) {
        out << " " << format_qvector(p);
    }
    out << "\n";
    if (!v.rays.empty()) {
        out << "  rays:";
        for (const QVector& r : v.rays) {
            out << " " << format_qvector(r);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

struct Mesh {
    std::vector<QVector> vertices;
    std::vector<std::vector<std::size_t>> faces;

    std::size_t vertex_id(const QVector& p) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] == p) {
                return i;
            }
        }
        vertices.push_back(p);
        return vertices.size() - 1;
    }
};

// Cyclic ordering of a planar polygon's corners; double precision is fine
// for mesh output.
std::vector<std::size_t> order_polygon(const std::vector<QVector>& pts,
                                       const std::vector<std::size_t>& ids) {
    const std::size_t m = ids.size();
    if (m <= 3) {
        return ids;
    }
    std::vector<std::array<double, 3>> p(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < 3; ++c) {
            p[i][c] = pts[ids[i]][c].convert_to<double>();
        }
    }
    std::array<double, 3> centroid{0, 0, 0};
    for (const auto& q : p) {
        for (std::size_t c = 0; c < 3; ++c) {
            centroid[c] += q[c] / static_cast<double>(m);
        }
    }
    auto sub = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    };
    auto cross = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                     a[0] * b[1] - a[1] * b[0]};
    };
    auto dotd = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    std::array<double, 3> t1 = sub(p[0], centroid);
    std::array<double, 3> nrm{0, 0, 0};
    for (std::size_t i = 1; i < m && dotd(nrm, nrm) < 1e-18; ++i) {
        nrm = cross(t1, sub(p[i], centroid));
    }
    std::array<double, 3> t2 = cross(nrm, t1);
    std::vector<std::pair<double, std::size_t>> angles;
    for (std::size_t i = 0; i < m; ++i) {
        auto d = sub(p[i], centroid);
        angles.emplace_back(std::atan2(dotd(d, t2), dotd(d, t1)), ids[i]);
    }
    std::sort(angles.begin(), angles.end());
    std::vector<std::size_t> ordered;
    for (const auto& [angle, id] : angles) {
        ordered.push_back(id);
    }
    return ordered;
}

void append_two_faces(Mesh& mesh, const HRep& hrep, const VRep& vrep) {
    for (const Face& f : enumerate_faces(hrep, vrep)) {
        if (f.dim != 2 || !f.ray_indices.empty()) {
            continue;
        }
        std::vector<std::size_t> ids;
        for (std::size_t vi : f.vertex_indices) {
            ids.push_back(mesh.vertex_id(vrep.vertices[vi]));
        }
        mesh.faces.push_back(order_polygon(mesh.vertices, ids));
    }
}

} // namespace

void write_newton_off(std::ostream& out, const MonomialIdeal& ideal) {
    if (ideal.ring().dim() != 3) {
        throw user_error("mesh export is available for three-variable ideals only");
    }
    NewtonBody np = newton_polytope(ideal);
    NewtonBody npoly = newton_polyhedron(ideal);

    // Truncate NP(I) to a cube comfortably containing every vertex.
    Rational max_coord(1);
    for (const QVector& p : npoly.vrep.vertices) {
        for (const Rational& x : p) {
            if (x > max_coord) {
                max_coord = x;
            }
        }
    }
    const Rational box = max_coord + max_coord / 2 + 2;
    HRep truncated = npoly.hrep;
    for (std::size_t c = 0; c < 3; ++c) {
        QVector normal(3, Rational(0));
        normal[c] = 1;
        truncated.inequalities.push_back({std::move(normal), box});
    }
    VRep truncated_v = hrep_to_vrep(truncated);
    truncated = vrep_to_hrep(truncated_v); // canonical facet list of the box intersection

    Mesh mesh;
    append_two_faces(mesh, truncated, truncated_v);
    if (np.vrep.vertices.size() >= 3) {
        // shade the polytope: its 2-faces, or the polytope itself when flat
        std::vector<Face> np_faces = enumerate_faces(np.hrep, np.vrep);
        for (const Face& f : np_faces) {
            if (f.dim != 2) {
                continue;
            }
            std::vector<std::size_t> ids;
            for (std::size_t vi : f.vertex_indices) {
                ids.push_back(mesh.vertex_id(np.vrep.vertices[vi]));
            }
            mesh.faces.push_back(order_polygon(mesh.vertices, ids));
        }
    }

    out << "OFF\n" << mesh.vertices.size() << " " << mesh.faces.size() << " 0\n";
    for (const QVector& p : mesh.vertices) {
        out << p[0].convert_to<double>() << " " << p[1].convert_to<double>() << " "
            << p[2].convert_to<double>() << "\n";
    }
    for (const auto& face : mesh.faces) {
        out << face.size();
        for (std::size_t id : face) {
            out << " " << id;
        }
        out << "\n";
    }
}

} // namespace npspread
