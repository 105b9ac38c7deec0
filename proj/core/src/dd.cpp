#include "dd.hpp"

#include <algorithm>
#include <cassert>

#include <boost/dynamic_bitset.hpp>

namespace npspread::detail {

namespace {

using Bitset = boost::dynamic_bitset<>;

struct Ray {
    QVector coords; // quotient coordinates
    Bitset tight;   // processed rows satisfied with equality
};

// Solves square A x = -e_k for every k; A must be invertible (rows are a
// basis). Returns the columns of -A^{-1}.
std::vector<QVector> negated_inverse_columns(const std::vector<QVector>& a) {
    const std::size_t d = a.size();
    QMatrix aug;
    aug.rows.assign(d, QVector(2 * d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            aug.rows[i][j] = a[i][j];
        }
        aug.rows[i][d + i] = -1;
    }
    RrefResult rr = rref(aug);
    std::vector<QVector> cols(d, QVector(d));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            cols[k][i] = rr.matrix.rows[i][d + k];
        }
    }
    return cols;
}

// Two extreme rays are adjacent iff no other ray is tight on every row both
// are tight on.
bool adjacent(const std::vector<Ray>& rays, std::size_t i, std::size_t j) {
    const Bitset common = rays[i].tight & rays[j].tight;
    for (std::size_t t = 0; t < rays.size(); ++t) {
        if (t == i || t == j) {
            continue;
        }
        if (common.is_subset_of(rays[t].tight)) {
            return false;
        }
    }
    return true;
}

} // namespace

ConeGenerators cone_generators(const std::vector<QVector>& rows, std::size_t dim) {
    for (const QVector& r : rows) {
        if (r.size() != dim) {
            throw user_error("cone row dimension mismatch");
        }
    }

    std::vector<QVector> nonzero_rows;
    for (const QVector& r : rows) {
        if (!is_zero_vector(r)) {
            nonzero_rows.push_back(r);
        }
    }

    ConeGenerators out;
    if (nonzero_rows.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            QVector e(dim, Rational(0));
            e[i] = 1;
            out.lineality.push_back(std::move(e));
        }
        return out;
    }

    // Lineality space = nullspace of the row matrix; the quotient is
    // coordinatized by the RREF basis of the row space, which is orthogonal
    // to the lineality space, so constraints descend to it.
    RrefResult rr = rref(QMatrix(nonzero_rows));
    const std::size_t qdim = rr.pivot_columns.size();
    std::vector<QVector> basis(rr.matrix.rows.begin(),
                               rr.matrix.rows.begin() + static_cast<long>(qdim));

    std::vector<bool> is_pivot(dim, false);
    for (std::size_t c : rr.pivot_columns) {
        is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < dim; ++c) {
        if (is_pivot[c]) {
            continue;
        }
        QVector v(dim, Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < qdim; ++i) {
            v[rr.pivot_columns[i]] = -rr.matrix.rows[i][c];
        }
        out.lineality.push_back(primitive_oriented(v));
    }

    // Project rows onto quotient coordinates: x = sum_i y_i basis_i gives
    // row . x = sum_i y_i (row . basis_i).
    std::vector<QVector> projected(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        QVector p(qdim);
        for (std::size_t i = 0; i < qdim; ++i) {
            p[i] = dot(rows[r], basis[i]);
        }
        projected[r] = std::move(p);
    }

    // Initial simplicial cone from the first full-rank subset of rows; the
    // quotient cone stays pointed from here on, which the adjacency test
    // requires.
    std::vector<std::size_t> init;
    {
        QMatrix probe;
        std::size_t current_rank = 0;
        for (std::size_t r = 0; r < rows.size() && current_rank < qdim; ++r) {
            probe.rows.push_back(projected[r]);
            if (rank(probe) > current_rank) {
                ++current_rank;
                init.push_back(r);
            } else {
                probe.rows.pop_back();
            }
        }
        assert(current_rank == qdim);
    }

    std::vector<QVector> init_rows;
    init_rows.reserve(init.size());
    for (std::size_t r : init) {
        init_rows.push_back(projected[r]);
    }
    std::vector<QVector> start = negated_inverse_columns(init_rows);

    std::vector<Ray> rays;
    rays.reserve(start.size());
    for (std::size_t k = 0; k < start.size(); ++k) {
        Ray ray;
        ray.coords = primitive(start[k]);
        ray.tight = Bitset(rows.size());
        for (std::size_t j = 0; j < init.size(); ++j) {
            if (j != k) {
                ray.tight.set(init[j]);
            }
        }
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_init(rows.size(), false);
    for (std::size_t r : init) {
        in_init[r] = true;
    }

    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (in_init[r] || rays.empty()) {
            continue;
        }
        const QVector& a = projected[r];
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].coords);
            if (val[i] > 0) {
                pos.push_back(i);
            } else if (val[i] < 0) {
                neg.push_back(i);
            } else {
                zero.push_back(i);
            }
        }

        if (pos.empty()) {
            for (std::size_t i : zero) {
                rays[i].tight.set(r);
            }
            continue;
        }

        std::vector<Ray> created;
        for (std::size_t i : pos) {
            for (std::size_t j : neg) {
                if (!adjacent(rays, i, j)) {
                    continue;
                }
                Ray fresh;
                fresh.coords = QVector(qdim);
                for (std::size_t c = 0; c < qdim; ++c) {
                    fresh.coords[c] = val[i] * rays[j].coords[c] - val[j] * rays[i].coords[c];
                }
                fresh.coords = primitive(fresh.coords);
                fresh.tight = rays[i].tight & rays[j].tight;
                fresh.tight.set(r);
                created.push_back(std::move(fresh));
            }
        }

        std::vector<Ray> next;
        next.reserve(neg.size() + zero.size() + created.size());
        for (std::size_t i : neg) {
            next.push_back(std::move(rays[i]));
        }
        for (std::size_t i : zero) {
            rays[i].tight.set(r);
            next.push_back(std::move(rays[i]));
        }
        for (Ray& f : created) {
            next.push_back(std::move(f));
        }
        rays = std::move(next);
    }

    for (const Ray& r : rays) {
        QVector x(dim, Rational(0));
        for (std::size_t i = 0; i < qdim; ++i) {
            if (r.coords[i] == 0) {
                continue;
            }
            for (std::size_t c = 0; c < dim; ++c) {
                x[c] += r.coords[i] * basis[i][c];
            }
        }
        out.rays.push_back(primitive(x));
    }
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

} // namespace npspread::detail
