#ifndef NPSPREAD_POLYHEDRAL_HPP
#define NPSPREAD_POLYHEDRAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "npspread/qlinalg.hpp"

namespace npspread {

// Exact polyhedra P = conv(vertices) + cone(rays), or equivalently
// {u : normal.u = rhs for all equalities, normal.u <= rhs for all inequalities}.
//
// Canonical storage form:
//  - equalities are the RREF of the affine-hull system, each row scaled to a
//    primitive integer vector (the leading entry is then positive);
//  - inequality normals are reduced modulo the equality rows (their entries in
//    the equality pivot columns are zero), scaled primitive, and sorted
//    lexicographically. Reduction changes only the representative of a facet
//    inequality, never the halfspace's trace on the polyhedron; it makes
//    H-reps of equal polyhedra compare equal.

struct Hyperplane {
    QVector normal;
    Rational rhs; // normal . u = rhs

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

struct Halfspace {
    QVector normal;
    Rational rhs; // normal . u <= rhs

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

struct HRep {
    std::size_t dim = 0;
    std::vector<Hyperplane> equalities;
    std::vector<Halfspace> inequalities;

    friend bool operator==(const HRep&, const HRep&) = default;
};

struct VRep {
    std::size_t dim = 0;
    std::vector<QVector> vertices; // extreme points, lex-sorted
    std::vector<QVector> rays;     // primitive, pairwise non-parallel, lex-sorted

    friend bool operator==(const VRep&, const VRep&) = default;
};

// A nonempty face. Every HRep equality is active on every face, so only the
// active inequalities are recorded. dim is the affine dimension of the face.
struct Face {
    int dim = -1;
    std::vector<std::size_t> active_inequalities;
    std::vector<std::size_t> vertex_indices;
    std::vector<std::size_t> ray_indices;

    bool compact() const { return ray_indices.empty(); }

    friend bool operator==(const Face&, const Face&) = default;
};

// cone(ray_generators) + span(span_generators) in R^dim.
struct NormalCone {
    std::size_t dim = 0;
    std::vector<QVector> span_generators;
    std::vector<QVector> ray_generators;

    friend bool operator==(const NormalCone&, const NormalCone&) = default;
};

struct ConeCertificate {
    std::vector<Rational> alphas; // aligned with span_generators, unrestricted
    std::vector<Rational> betas;  // aligned with ray_generators, each >= 1
    QVector combination;          // sum of the weighted generators; every entry <= -1

    friend bool operator==(const ConeCertificate&, const ConeCertificate&) = default;
};

/// Minimal H-representation of conv(vertices) + cone(rays) via the double
/// description method on the polar homogenization cone. Requires at least one
/// vertex.
HRep vrep_to_hrep(const VRep& v);

/// Generator representation via double description on the homogenization
/// cone. An empty polyhedron yields an empty VRep. If the input is not
/// pointed, each lineality direction is emitted as a +/- ray pair (Newton
/// bodies never produce this case).
VRep hrep_to_vrep(const HRep& h);

/// Minkowski sum with the nonnegative orthant: adds the standard basis
/// vectors as rays, then restores vertex and ray minimality.
VRep add_orthant(const VRep& v);

/// All nonempty faces (including the polyhedron itself), computed by closing
/// vertex/ray incidence sets under intersection with facet incidences.
/// Emitted sorted by (dim, vertex_indices, ray_indices). h and v must describe
/// the same pointed polyhedron.
std::vector<Face> enumerate_faces(const HRep& h, const VRep& v);

/// Largest dimension of a compact face (a face without rays). When the
/// recession cone is exactly the nonnegative orthant, a second test — the
/// face's normal cone admits an all-negative combination — is run on every
/// face and must agree, else internal_error. Errors on polyhedra without
/// vertices.
int max_compact_face_dim(const HRep& h, const VRep& v);

/// Normal cone of the polyhedron at a face: span of the equality normals plus
/// the cone of the face's active inequality normals.
NormalCone normal_cone(const HRep& h, const Face& f);

/// Rational certificate that the relative interior of the cone meets the open
/// negative orthant: alphas free, betas >= 1, with the combined vector <= -1
/// componentwise. Positive scaling invariance of the cone makes the closed
/// encoding exact.
std::optional<ConeCertificate> cone_meets_open_negative_orthant(const NormalCone& c);

} // namespace npspread

#endif
