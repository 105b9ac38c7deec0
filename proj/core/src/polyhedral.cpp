#include "npspread/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <boost/dynamic_bitset.hpp>

#include "dd.hpp"

namespace npspread {

namespace {

using Bitset = boost::dynamic_bitset<>;

// Canonical equality system: RREF of the augmented rows, scaled primitive.
// A pivot in the right-hand-side column means 0 = 1.
std::vector<Hyperplane> canonical_equalities(const std::vector<QVector>& augmented,
                                             std::size_t dim) {
    if (augmented.empty()) {
        return {};
    }
    RrefResult rr = rref(QMatrix(augmented));
    std::vector<Hyperplane> eqs;
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
        if (rr.pivot_columns[i] == dim) {
            throw internal_error("inconsistent equality system");
        }
        QVector row = primitive(rr.matrix.rows[i]);
        Hyperplane h;
        h.normal.assign(row.begin(), row.begin() + static_cast<long>(dim));
        h.rhs = row[dim];
        eqs.push_back(std::move(h));
    }
    return eqs;
}

// Zeroes the inequality's entries in the equality pivot columns; drops
// inequalities that reduce to 0 <= nonnegative.
std::optional<Halfspace> reduce_inequality(QVector normal, Rational rhs,
                                           const std::vector<Hyperplane>& eqs) {
    for (const Hyperplane& eq : eqs) {
        std::size_t pivot = 0;
        while (pivot < eq.normal.size() && eq.normal[pivot] == 0) {
            ++pivot;
        }
        if (pivot == eq.normal.size() || normal[pivot] == 0) {
            continue;
        }
        const Rational factor = normal[pivot] / eq.normal[pivot];
        for (std::size_t c = 0; c < normal.size(); ++c) {
            normal[c] -= factor * eq.normal[c];
        }
        rhs -= factor * eq.rhs;
    }
    if (is_zero_vector(normal)) {
        if (rhs < 0) {
            throw internal_error("inequality reduced to an infeasible constant");
        }
        return std::nullopt;
    }
    QVector scaled = primitive(normal);
    // primitive() scaling factor is positive, apply the same to the rhs
    std::size_t i = 0;
    while (normal[i] == 0) {
        ++i;
    }
    const Rational factor = scaled[i] / normal[i];
    return Halfspace{std::move(scaled), rhs * factor};
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) {
        return lex_less(a.normal, b.normal);
    }
    return a.rhs < b.rhs;
}

void validate_vrep(const VRep& v) {
    for (const QVector& p : v.vertices) {
        if (p.size() != v.dim) {
            throw user_error("vertex dimension mismatch");
        }
    }
    for (const QVector& r : v.rays) {
        if (r.size() != v.dim) {
            throw user_error("ray dimension mismatch");
        }
        if (is_zero_vector(r)) {
            throw user_error("zero vector is not a valid ray");
        }
    }
}

void validate_hrep(const HRep& h) {
    for (const Hyperplane& e : h.equalities) {
        if (e.normal.size() != h.dim) {
            throw user_error("equality dimension mismatch");
        }
    }
    for (const Halfspace& f : h.inequalities) {
        if (f.normal.size() != h.dim) {
            throw user_error("inequality dimension mismatch");
        }
    }
}

bool has_antiparallel_rays(const VRep& v) {
    for (std::size_t i = 0; i < v.rays.size(); ++i) {
        for (std::size_t j = i + 1; j < v.rays.size(); ++j) {
            QVector negated = v.rays[j];
            for (Rational& x : negated) {
                x = -x;
            }
            if (is_parallel(v.rays[i], negated)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

HRep vrep_to_hrep(const VRep& v) {
    validate_vrep(v);
    if (v.vertices.empty()) {
        throw user_error("vrep_to_hrep requires at least one vertex");
    }
    const std::size_t n = v.dim;

    // Facets and affine hull are the extreme rays and lineality of the cone
    // of valid inequalities {(a, a0) : a.vertex <= a0, a.ray <= 0}.
    std::vector<QVector> rows;
    rows.reserve(v.vertices.size() + v.rays.size());
    for (const QVector& p : v.vertices) {
        QVector row = p;
        row.push_back(Rational(-1));
        rows.push_back(std::move(row));
    }
    for (const QVector& r : v.rays) {
        QVector row = r;
        row.push_back(Rational(0));
        rows.push_back(std::move(row));
    }

    detail::ConeGenerators gen = detail::cone_generators(rows, n + 1);

    HRep h;
    h.dim = n;
    h.equalities = canonical_equalities(gen.lineality, n);
    for (const QVector& ray : gen.rays) {
        QVector normal(ray.begin(), ray.begin() + static_cast<long>(n));
        auto hs = reduce_inequality(std::move(normal), ray[n], h.equalities);
        if (hs) {
            h.inequalities.push_back(std::move(*hs));
        }
    }
    std::sort(h.inequalities.begin(), h.inequalities.end(), halfspace_less);
    return h;
}

VRep hrep_to_vrep(const HRep& h) {
    validate_hrep(h);
    const std::size_t n = h.dim;

    // Homogenize: {(u, t) : eq.u = rhs*t, ineq.u <= rhs*t, t >= 0}.
    std::vector<QVector> rows;
    rows.reserve(2 * h.equalities.size() + h.inequalities.size() + 1);
    for (const Hyperplane& e : h.equalities) {
        QVector row = e.normal;
        row.push_back(-e.rhs);
        rows.push_back(row);
        for (Rational& x : row) {
            x = -x;
        }
        rows.push_back(std::move(row));
    }
    for (const Halfspace& f : h.inequalities) {
        QVector row = f.normal;
        row.push_back(-f.rhs);
        rows.push_back(std::move(row));
    }
    {
        QVector trow(n + 1, Rational(0));
        trow[n] = -1;
        rows.push_back(std::move(trow));
    }

    detail::ConeGenerators gen = detail::cone_generators(rows, n + 1);

    VRep v;
    v.dim = n;
    bool nonempty = false;
    for (const QVector& ray : gen.rays) {
        if (ray[n] > 0) {
            nonempty = true;
            break;
        }
    }
    if (!nonempty) {
        return v;
    }
    for (const QVector& ray : gen.rays) {
        if (ray[n] > 0) {
            QVector point(n);
            for (std::size_t c = 0; c < n; ++c) {
                point[c] = ray[c] / ray[n];
            }
            v.vertices.push_back(std::move(point));
        } else {
            QVector dir(ray.begin(), ray.begin() + static_cast<long>(n));
            v.rays.push_back(primitive(dir));
        }
    }
    // Lineality (never produced by Newton bodies) becomes +/- ray pairs.
    for (const QVector& lin : gen.lineality) {
        QVector dir(lin.begin(), lin.begin() + static_cast<long>(n));
        QVector neg = dir;
        for (Rational& x : neg) {
            x = -x;
        }
        v.rays.push_back(primitive(dir));
        v.rays.push_back(primitive(neg));
    }
    std::sort(v.vertices.begin(), v.vertices.end(), lex_less);
    std::sort(v.rays.begin(), v.rays.end(), lex_less);
    return v;
}

VRep add_orthant(const VRep& v) {
    validate_vrep(v);
    VRep out;
    out.dim = v.dim;
    if (v.vertices.empty()) {
        return out;
    }
    const std::size_t n = v.dim;

    std::vector<QVector> rays;
    for (const QVector& r : v.rays) {
        rays.push_back(primitive(r));
    }
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n, Rational(0));
        e[i] = 1;
        bool present = false;
        for (const QVector& r : rays) {
            if (r == e) {
                present = true;
                break;
            }
        }
        if (!present) {
            rays.push_back(std::move(e));
        }
    }

    // Ray minimality: drop rays that are nonnegative combinations of the rest.
    std::vector<bool> ray_keep(rays.size(), true);
    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<QVector> others;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            if (j != i) {
                others.push_back(rays[j]);
            }
        }
        if (others.empty()) {
            continue;
        }
        std::vector<LinearConstraint> eqs;
        for (std::size_t c = 0; c < n; ++c) {
            QVector row(others.size());
            for (std::size_t j = 0; j < others.size(); ++j) {
                row[j] = others[j][c];
            }
            eqs.push_back({std::move(row), rays[i][c]});
        }
        std::vector<LinearConstraint> ineqs;
        for (std::size_t j = 0; j < others.size(); ++j) {
            QVector row(others.size(), Rational(0));
            row[j] = -1;
            ineqs.push_back({std::move(row), Rational(0)});
        }
        if (lp_feasible(eqs, ineqs, others.size())) {
            ray_keep[i] = false;
        }
    }
    std::vector<QVector> kept_rays;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (ray_keep[i]) {
            kept_rays.push_back(rays[i]);
        }
    }

    // Vertex minimality: drop points inside conv(other points) + cone(rays).
    std::vector<bool> vertex_keep(v.vertices.size(), true);
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        std::vector<QVector> others;
        for (std::size_t j = 0; j < v.vertices.size(); ++j) {
            if (j != i) {
                others.push_back(v.vertices[j]);
            }
        }
        if (others.empty()) {
            continue;
        }
        const std::size_t unknowns = others.size() + kept_rays.size();
        std::vector<LinearConstraint> eqs;
        for (std::size_t c = 0; c < n; ++c) {
            QVector row(unknowns);
            for (std::size_t j = 0; j < others.size(); ++j) {
                row[j] = others[j][c];
            }
            for (std::size_t j = 0; j < kept_rays.size(); ++j) {
                row[others.size() + j] = kept_rays[j][c];
            }
            eqs.push_back({std::move(row), v.vertices[i][c]});
        }
        {
            QVector row(unknowns, Rational(0));
            for (std::size_t j = 0; j < others.size(); ++j) {
                row[j] = 1;
            }
            eqs.push_back({std::move(row), Rational(1)});
        }
        std::vector<LinearConstraint> ineqs;
        for (std::size_t j = 0; j < unknowns; ++j) {
            QVector row(unknowns, Rational(0));
            row[j] = -1;
            ineqs.push_back({std::move(row), Rational(0)});
        }
        if (lp_feasible(eqs, ineqs, unknowns)) {
            vertex_keep[i] = false;
        }
    }
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        if (vertex_keep[i]) {
            out.vertices.push_back(v.vertices[i]);
        }
    }
    out.rays = std::move(kept_rays);
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

namespace {

int face_dimension(const VRep& v, const std::vector<std::size_t>& vertex_indices,
                   const std::vector<std::size_t>& ray_indices) {
    QMatrix m;
    const QVector& base = v.vertices[vertex_indices.front()];
    for (std::size_t i = 1; i < vertex_indices.size(); ++i) {
        QVector diff = v.vertices[vertex_indices[i]];
        for (std::size_t c = 0; c < diff.size(); ++c) {
            diff[c] -= base[c];
        }
        m.rows.push_back(std::move(diff));
    }
    for (std::size_t r : ray_indices) {
        m.rows.push_back(v.rays[r]);
    }
    return static_cast<int>(rank(m));
}

} // namespace

std::vector<Face> enumerate_faces(const HRep& h, const VRep& v) {
    validate_hrep(h);
    validate_vrep(v);
    if (h.dim != v.dim) {
        throw user_error("H-rep and V-rep dimension mismatch");
    }
    if (v.vertices.empty()) {
        if (v.rays.empty()) {
            return {};
        }
        throw user_error("V-rep has rays but no vertices");
    }
    if (has_antiparallel_rays(v)) {
        throw user_error("polyhedron is not pointed; face enumeration requires vertices");
    }

    const std::size_t nv = v.vertices.size();
    const std::size_t nr = v.rays.size();
    const std::size_t ni = h.inequalities.size();

    // Consistency of the pair: members satisfy every constraint, and every
    // inequality supports at least one vertex.
    for (const QVector& p : v.vertices) {
        for (const Hyperplane& e : h.equalities) {
            if (dot(e.normal, p) != e.rhs) {
                throw user_error("vertex violates an equality; inconsistent H/V pair");
            }
        }
        for (const Halfspace& f : h.inequalities) {
            if (dot(f.normal, p) > f.rhs) {
                throw user_error("vertex violates an inequality; inconsistent H/V pair");
            }
        }
    }
    for (const QVector& r : v.rays) {
        for (const Hyperplane& e : h.equalities) {
            if (dot(e.normal, r) != 0) {
                throw user_error("ray violates an equality; inconsistent H/V pair");
            }
        }
        for (const Halfspace& f : h.inequalities) {
            if (dot(f.normal, r) > 0) {
                throw user_error("ray violates an inequality; inconsistent H/V pair");
            }
        }
    }

    std::vector<Bitset> vb(ni, Bitset(nv)), rb(ni, Bitset(nr));
    for (std::size_t j = 0; j < ni; ++j) {
        for (std::size_t i = 0; i < nv; ++i) {
            if (dot(h.inequalities[j].normal, v.vertices[i]) == h.inequalities[j].rhs) {
                vb[j].set(i);
            }
        }
        for (std::size_t i = 0; i < nr; ++i) {
            if (dot(h.inequalities[j].normal, v.rays[i]) == 0) {
                rb[j].set(i);
            }
        }
        if (vb[j].none()) {
            throw user_error("inequality is tight on no vertex; inconsistent H/V pair");
        }
    }

    Bitset all_v(nv), all_r(nr);
    all_v.set();
    all_r.set();

    auto closure = [&](const Bitset& cv, const Bitset& cr) {
        std::vector<std::size_t> tight;
        Bitset fv = all_v, fr = all_r;
        for (std::size_t j = 0; j < ni; ++j) {
            if (cv.is_subset_of(vb[j]) && cr.is_subset_of(rb[j])) {
                tight.push_back(j);
                fv &= vb[j];
                fr &= rb[j];
            }
        }
        return std::tuple<std::vector<std::size_t>, Bitset, Bitset>(std::move(tight), fv, fr);
    };

    std::map<std::pair<Bitset, Bitset>, std::vector<std::size_t>> seen;
    std::vector<std::pair<Bitset, Bitset>> queue;

    auto visit = [&](const Bitset& cv, const Bitset& cr) {
        if (cv.none()) {
            return; // faces of a pointed polyhedron contain a vertex
        }
        auto [tight, fv, fr] = closure(cv, cr);
        auto key = std::make_pair(fv, fr);
        if (seen.emplace(key, std::move(tight)).second) {
            queue.push_back(std::move(key));
        }
    };

    visit(all_v, all_r);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [fv, fr] = queue[head];
        for (std::size_t j = 0; j < ni; ++j) {
            visit(fv & vb[j], fr & rb[j]);
        }
    }

    std::vector<Face> faces;
    faces.reserve(seen.size());
    for (const auto& [key, tight] : seen) {
        Face f;
        f.active_inequalities = tight;
        for (std::size_t i = 0; i < nv; ++i) {
            if (key.first.test(i)) {
                f.vertex_indices.push_back(i);
            }
        }
        for (std::size_t i = 0; i < nr; ++i) {
            if (key.second.test(i)) {
                f.ray_indices.push_back(i);
            }
        }
        f.dim = face_dimension(v, f.vertex_indices, f.ray_indices);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) {
            return a.dim < b.dim;
        }
        if (a.vertex_indices != b.vertex_indices) {
            return a.vertex_indices < b.vertex_indices;
        }
        return a.ray_indices < b.ray_indices;
    });
    return faces;
}

NormalCone normal_cone(const HRep& h, const Face& f) {
    NormalCone cone;
    cone.dim = h.dim;
    for (const Hyperplane& e : h.equalities) {
        cone.span_generators.push_back(e.normal);
    }
    for (std::size_t j : f.active_inequalities) {
        if (j >= h.inequalities.size()) {
            throw user_error("face does not belong to this H-rep");
        }
        cone.ray_generators.push_back(h.inequalities[j].normal);
    }
    return cone;
}

std::optional<ConeCertificate> cone_meets_open_negative_orthant(const NormalCone& c) {
    const std::size_t n = c.dim;
    for (const QVector& g : c.span_generators) {
        if (g.size() != n) {
            throw user_error("cone generator dimension mismatch");
        }
    }
    for (const QVector& g : c.ray_generators) {
        if (g.size() != n) {
            throw user_error("cone generator dimension mismatch");
        }
    }
    const std::size_t s = c.span_generators.size();
    const std::size_t t = c.ray_generators.size();
    const std::size_t unknowns = s + t;

    std::vector<LinearConstraint> ineqs;
    for (std::size_t i = 0; i < n; ++i) {
        QVector row(unknowns);
        for (std::size_t j = 0; j < s; ++j) {
            row[j] = c.span_generators[j][i];
        }
        for (std::size_t j = 0; j < t; ++j) {
            row[s + j] = c.ray_generators[j][i];
        }
        ineqs.push_back({std::move(row), Rational(-1)});
    }
    for (std::size_t j = 0; j < t; ++j) {
        QVector row(unknowns, Rational(0));
        row[s + j] = -1;
        ineqs.push_back({std::move(row), Rational(-1)});
    }

    auto point = lp_feasible({}, ineqs, unknowns);
    if (!point) {
        return std::nullopt;
    }
    ConeCertificate cert;
    cert.alphas.assign(point->begin(), point->begin() + static_cast<long>(s));
    cert.betas.assign(point->begin() + static_cast<long>(s), point->end());
    cert.combination.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            cert.combination[i] += cert.alphas[j] * c.span_generators[j][i];
        }
        for (std::size_t j = 0; j < t; ++j) {
            cert.combination[i] += cert.betas[j] * c.ray_generators[j][i];
        }
        if (cert.combination[i] > -1) {
            throw internal_error("certificate combination is not componentwise negative");
        }
    }
    return cert;
}

int max_compact_face_dim(const HRep& h, const VRep& v) {
    if (v.vertices.empty() || has_antiparallel_rays(v)) {
        throw user_error("max_compact_face_dim requires a polyhedron with vertices");
    }
    std::vector<Face> faces = enumerate_faces(h, v);

    int best = -1;
    for (const Face& f : faces) {
        if (f.compact() && f.dim > best) {
            best = f.dim;
        }
    }
    if (best < 0) {
        throw internal_error("pointed polyhedron without compact faces");
    }

    // When the recession cone is the full nonnegative orthant, compactness of
    // a face is equivalent to its normal cone meeting the open negative
    // orthant; run both tests and insist they agree.
    bool orthant_recession = v.rays.size() == v.dim;
    if (orthant_recession) {
        for (const QVector& r : v.rays) {
            std::size_t nonzero = 0, one_at = 0;
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (r[c] != 0) {
                    ++nonzero;
                    one_at = c;
                }
            }
            if (nonzero != 1 || r[one_at] != 1) {
                orthant_recession = false;
                break;
            }
        }
    }
    if (orthant_recession) {
        for (const Face& f : faces) {
            const bool certified =
                cone_meets_open_negative_orthant(normal_cone(h, f)).has_value();
            if (certified != f.compact()) {
                throw internal_error("compactness and negative-orthant certificate disagree");
            }
        }
    }
    return best;
}

} // namespace npspread
