#include "npspread/qlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace npspread {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw user_error("rational with zero denominator");
    }
    Rational r(num);
    r /= Rational(den);
    return r;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        return make_rational(num, den);
    } catch (const std::runtime_error& e) {
        throw user_error("malformed rational '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

Integer to_integer(const Rational& value) {
    if (!is_integer(value)) {
        throw internal_error("expected integral rational, got " + to_string(value));
    }
    return numerator(value);
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) {
        throw user_error("dot product dimension mismatch");
    }
    Rational acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

bool is_zero_vector(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

bool lex_less(const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool componentwise_le(const QVector& a, const QVector& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

QVector primitive(const QVector& v) {
    Integer den_lcm = 1;
    for (const Rational& x : v) {
        den_lcm = lcm(den_lcm, denominator(x));
    }
    Integer num_gcd = 0;
    QVector scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = v[i] * Rational(den_lcm);
        num_gcd = gcd(num_gcd, numerator(scaled[i]));
    }
    if (num_gcd == 0) {
        return scaled; // zero vector
    }
    for (Rational& x : scaled) {
        x /= Rational(num_gcd);
    }
    return scaled;
}

QVector primitive_oriented(const QVector& v) {
    QVector p = primitive(v);
    for (const Rational& x : p) {
        if (x != 0) {
            if (x < 0) {
                for (Rational& y : p) {
                    y = -y;
                }
            }
            break;
        }
    }
    return p;
}

bool is_parallel(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) {
        return false;
    }
    return primitive_oriented(a) == primitive_oriented(b);
}

QMatrix::QMatrix(std::vector<QVector> r) : rows(std::move(r)) {
    for (const QVector& row : rows) {
        if (row.size() != rows.front().size()) {
            throw user_error("matrix rows of unequal length");
        }
    }
}

QMatrix transpose(const QMatrix& m) {
    QMatrix t;
    t.rows.assign(m.col_count(), QVector(m.row_count()));
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        for (std::size_t j = 0; j < m.col_count(); ++j) {
            t.rows[j][i] = m.rows[i][j];
        }
    }
    return t;
}

RrefResult rref(const QMatrix& m) {
    if (m.rows.empty()) {
        throw user_error("rref of empty matrix");
    }
    RrefResult result;
    result.matrix = m;
    auto& rows = result.matrix.rows;
    const std::size_t nrows = rows.size();
    const std::size_t ncols = rows.front().size();

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
        std::size_t r = pivot_row;
        while (r < nrows && rows[r][col] == 0) {
            ++r;
        }
        if (r == nrows) {
            continue;
        }
        std::swap(rows[pivot_row], rows[r]);
        const Rational inv = Rational(1) / rows[pivot_row][col];
        for (Rational& x : rows[pivot_row]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == pivot_row || rows[i][col] == 0) {
                continue;
            }
            const Rational factor = rows[i][col];
            for (std::size_t j = 0; j < ncols; ++j) {
                rows[i][j] -= factor * rows[pivot_row][j];
            }
        }
        result.pivot_columns.push_back(col);
        ++pivot_row;
    }
    return result;
}

std::size_t rank(const QMatrix& m) {
    if (m.rows.empty() || m.col_count() == 0) {
        return 0;
    }
    return rref(m).pivot_columns.size();
}

namespace {

// Dense rational simplex tableau. Columns: x+ (unknowns), x- (unknowns),
// slacks, artificials; the last column is the right-hand side.
class SimplexTableau {
public:
    SimplexTableau(const QVector& objective,
                   const std::vector<LinearConstraint>& equalities,
                   const std::vector<LinearConstraint>& inequalities,
                   std::size_t unknowns)
        : n_(unknowns) {
        for (const auto& c : equalities) {
            if (c.normal.size() != unknowns) {
                throw user_error("constraint dimension mismatch");
            }
        }
        for (const auto& c : inequalities) {
            if (c.normal.size() != unknowns) {
                throw user_error("constraint dimension mismatch");
            }
        }
        if (objective.size() != unknowns) {
            throw user_error("objective dimension mismatch");
        }

        const std::size_t m = equalities.size() + inequalities.size();
        slack_begin_ = 2 * n_;
        art_begin_ = slack_begin_ + inequalities.size();
        ncols_ = art_begin_; // artificials appended below as needed
        rows_.reserve(m);
        basis_.reserve(m);

        std::vector<QVector> raw;
        std::vector<Rational> raw_rhs;
        std::vector<long> slack_of_row; // -1 for equality rows
        raw.reserve(m);
        for (std::size_t i = 0; i < inequalities.size(); ++i) {
            raw.push_back(inequalities[i].normal);
            raw_rhs.push_back(inequalities[i].rhs);
            slack_of_row.push_back(static_cast<long>(slack_begin_ + i));
        }
        for (const auto& c : equalities) {
            raw.push_back(c.normal);
            raw_rhs.push_back(c.rhs);
            slack_of_row.push_back(-1);
        }

        std::size_t artificials = 0;
        for (std::size_t r = 0; r < raw.size(); ++r) {
            const bool flip = raw_rhs[r] < 0;
            if (flip || slack_of_row[r] < 0) {
                ++artificials;
            }
        }
        ncols_ = art_begin_ + artificials;

        std::size_t next_art = art_begin_;
        for (std::size_t r = 0; r < raw.size(); ++r) {
            QVector row(ncols_ + 1);
            const Rational sign = raw_rhs[r] < 0 ? Rational(-1) : Rational(1);
            for (std::size_t j = 0; j < n_; ++j) {
                row[j] = sign * raw[r][j];
                row[n_ + j] = -row[j];
            }
            if (slack_of_row[r] >= 0) {
                row[static_cast<std::size_t>(slack_of_row[r])] = sign;
            }
            row[ncols_] = sign * raw_rhs[r];
            if (raw_rhs[r] < 0 || slack_of_row[r] < 0) {
                row[next_art] = 1;
                basis_.push_back(next_art);
                ++next_art;
            } else {
                basis_.push_back(static_cast<std::size_t>(slack_of_row[r]));
            }
            rows_.push_back(std::move(row));
        }

        allowed_.assign(ncols_, true);
        objective_ = objective;
    }

    LpSolution solve() {
        if (art_begin_ < ncols_) {
            QVector phase1_cost(ncols_, Rational(0));
            for (std::size_t j = art_begin_; j < ncols_; ++j) {
                phase1_cost[j] = 1;
            }
            build_cost_row(phase1_cost);
            const bool bounded = iterate();
            assert(bounded);
            (void)bounded;
            if (-cost_[ncols_] > 0) {
                return LpSolution{LpStatus::infeasible, {}, Rational(0), {}};
            }
            expel_artificials();
            for (std::size_t j = art_begin_; j < ncols_; ++j) {
                allowed_[j] = false;
            }
        }

        QVector phase2_cost(ncols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            phase2_cost[j] = objective_[j];
            phase2_cost[n_ + j] = -objective_[j];
        }
        build_cost_row(phase2_cost);
        if (!iterate()) {
            LpSolution sol{LpStatus::unbounded, current_point(), Rational(0), unbounded_ray_};
            return sol;
        }
        LpSolution sol{LpStatus::optimal, current_point(), -cost_[ncols_], {}};
        return sol;
    }

private:
    void build_cost_row(const QVector& cost) {
        cost_.assign(ncols_ + 1, Rational(0));
        for (std::size_t j = 0; j < ncols_; ++j) {
            cost_[j] = cost[j];
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = cost[basis_[r]];
            if (c == 0) {
                continue;
            }
            for (std::size_t j = 0; j <= ncols_; ++j) {
                cost_[j] -= c * rows_[r][j];
            }
        }
    }

    // Bland's rule. Returns false when the objective is unbounded below.
    bool iterate() {
        for (;;) {
            std::size_t entering = ncols_;
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (allowed_[j] && cost_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == ncols_) {
                return true;
            }
            std::size_t leaving = rows_.size();
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][entering] <= 0) {
                    continue;
                }
                Rational ratio = rows_[r][ncols_] / rows_[r][entering];
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows_.size()) {
                unbounded_ray_ = extract_ray(entering);
                return false;
            }
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        QVector& pr = rows_[row];
        const Rational inv = Rational(1) / pr[col];
        for (Rational& x : pr) {
            x *= inv;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r == row || rows_[r][col] == 0) {
                continue;
            }
            const Rational factor = rows_[r][col];
            for (std::size_t j = 0; j <= ncols_; ++j) {
                rows_[r][j] -= factor * pr[j];
            }
        }
        if (cost_[col] != 0) {
            const Rational factor = cost_[col];
            for (std::size_t j = 0; j <= ncols_; ++j) {
                cost_[j] -= factor * pr[j];
            }
        }
        basis_[row] = col;
    }

    // After a zero-value phase 1, pivot basic artificials onto real columns;
    // rows that cannot pivot are redundant and dropped.
    void expel_artificials() {
        for (std::size_t r = 0; r < rows_.size();) {
            if (basis_[r] < art_begin_) {
                ++r;
                continue;
            }
            std::size_t col = art_begin_;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (rows_[r][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == art_begin_) {
                rows_.erase(rows_.begin() + static_cast<long>(r));
                basis_.erase(basis_.begin() + static_cast<long>(r));
                continue;
            }
            pivot(r, col);
            ++r;
        }
    }

    QVector current_point() const {
        QVector col_value(ncols_, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            col_value[basis_[r]] = rows_[r][ncols_];
        }
        QVector x(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            x[j] = col_value[j] - col_value[n_ + j];
        }
        return x;
    }

    QVector extract_ray(std::size_t entering) const {
        QVector col_delta(ncols_, Rational(0));
        col_delta[entering] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            col_delta[basis_[r]] = -rows_[r][entering];
        }
        QVector d(n_);
        for (std::size_t j = 0; j < n_; ++j) {
            d[j] = col_delta[j] - col_delta[n_ + j];
        }
        return d;
    }

    std::size_t n_ = 0;
    std::size_t slack_begin_ = 0;
    std::size_t art_begin_ = 0;
    std::size_t ncols_ = 0;
    std::vector<QVector> rows_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
    QVector cost_;
    QVector objective_;
    QVector unbounded_ray_;
};

} // namespace

LpSolution lp_solve(const QVector& objective,
                    const std::vector<LinearConstraint>& equalities,
                    const std::vector<LinearConstraint>& inequalities,
                    std::size_t unknowns) {
    SimplexTableau tableau(objective, equalities, inequalities, unknowns);
    return tableau.solve();
}

std::optional<QVector> lp_feasible(const std::vector<LinearConstraint>& equalities,
                                   const std::vector<LinearConstraint>& inequalities,
                                   std::size_t unknowns) {
    LpSolution sol = lp_solve(QVector(unknowns, Rational(0)), equalities, inequalities, unknowns);
    if (sol.status == LpStatus::infeasible) {
        return std::nullopt;
    }
    return sol.point;
}

} // namespace npspread
