#include "npspread/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace npspread {

Ring::Ring(std::vector<std::string> vars) : variables(std::move(vars)) {
    if (variables.empty()) {
        throw user_error("ring needs at least one variable");
    }
    std::set<std::string> seen;
    for (const std::string& name : variables) {
        if (name.empty()) {
            throw user_error("empty variable name");
        }
        if (!seen.insert(name).second) {
            throw user_error("duplicate variable name '" + name + "'");
        }
    }
}

namespace {

void validate_exponent_vector(const Ring& ring, const QVector& e) {
    if (e.size() != ring.dim()) {
        throw user_error("exponent vector length does not match the ring");
    }
    for (const Rational& x : e) {
        if (!is_integer(x)) {
            throw user_error("fractional exponent " + to_string(x));
        }
        if (x < 0) {
            throw user_error("negative exponent " + to_string(x));
        }
    }
}

bool divides(const QVector& a, const QVector& b) {
    return componentwise_le(a, b);
}

} // namespace

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<QVector> exponents)
    : ring_(std::move(ring)) {
    for (const QVector& e : exponents) {
        validate_exponent_vector(ring_, e);
    }
    std::sort(exponents.begin(), exponents.end(), lex_less);
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < exponents.size(); ++j) {
            if (i != j && divides(exponents[j], exponents[i])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            generators_.push_back(exponents[i]);
        }
    }
}

MonomialIdeal MonomialIdeal::zero(Ring ring) {
    return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
    const std::size_t n = ring.dim();
    return MonomialIdeal(std::move(ring), {QVector(n, Rational(0))});
}

bool MonomialIdeal::is_unit() const {
    return generators_.size() == 1 && is_zero_vector(generators_.front());
}

bool MonomialIdeal::contains(const QVector& exponent) const {
    validate_exponent_vector(ring_, exponent);
    for (const QVector& g : generators_) {
        if (divides(g, exponent)) {
            return true;
        }
    }
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    if (ring_ != other.ring_) {
        throw user_error("ideals live in different rings");
    }
    for (const QVector& g : other.generators_) {
        if (!contains(g)) {
            return false;
        }
    }
    return true;
}

MonomialIdeal minimalize(Ring ring, std::vector<QVector> exponents) {
    return MonomialIdeal(std::move(ring), std::move(exponents));
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ring() != b.ring()) {
        throw user_error("ideals live in different rings");
    }
}

} // namespace

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<QVector> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const QVector& g : a.generators()) {
        for (const QVector& h : b.generators()) {
            QVector s = g;
            for (std::size_t c = 0; c < s.size(); ++c) {
                s[c] += h[c];
            }
            gens.push_back(std::move(s));
        }
    }
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, const Integer& m) {
    if (m < 1) {
        throw user_error("power exponent must be at least 1");
    }
    MonomialIdeal result = a;
    for (Integer i = 1; i < m; ++i) {
        result = product(result, a);
    }
    return result;
}

MonomialIdeal frobenius_power(const MonomialIdeal& a, const Integer& m) {
    if (m < 1) {
        throw user_error("Frobenius power exponent must be at least 1");
    }
    std::vector<QVector> gens = a.generators();
    for (QVector& g : gens) {
        for (Rational& x : g) {
            x *= Rational(m);
        }
    }
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<QVector> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& a) {
    std::vector<QVector> gens = a.generators();
    for (QVector& g : gens) {
        for (Rational& x : g) {
            if (x > 0) {
                x = 1;
            }
        }
    }
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<QVector> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const QVector& g : a.generators()) {
        for (const QVector& h : b.generators()) {
            QVector m = g;
            for (std::size_t c = 0; c < m.size(); ++c) {
                if (h[c] > m[c]) {
                    m[c] = h[c];
                }
            }
            gens.push_back(std::move(m));
        }
    }
    return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal embed(const MonomialIdeal& a, const std::vector<std::string>& extra_variables) {
    std::vector<std::string> vars = a.ring().variables;
    for (const std::string& name : extra_variables) {
        if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
            throw user_error("variable '" + name + "' already present in the ring");
        }
        vars.push_back(name);
    }
    Ring extended(std::move(vars));
    std::vector<QVector> gens = a.generators();
    for (QVector& g : gens) {
        g.resize(extended.dim(), Rational(0));
    }
    return MonomialIdeal(std::move(extended), std::move(gens));
}

namespace {

// Vertices of the Newton polytope: generators not in the convex hull of the
// other generators.
VRep newton_polytope_vrep(const MonomialIdeal& a) {
    if (a.is_zero()) {
        throw user_error("the zero ideal has no Newton polytope");
    }
    const auto& gens = a.generators();
    const std::size_t n = a.ring().dim();
    VRep v;
    v.dim = n;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens.size() == 1) {
            v.vertices.push_back(gens[i]);
            continue;
        }
        std::vector<QVector> others;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j != i) {
                others.push_back(gens[j]);
            }
        }
        std::vector<LinearConstraint> eqs;
        for (std::size_t c = 0; c < n; ++c) {
            QVector row(others.size());
            for (std::size_t j = 0; j < others.size(); ++j) {
                row[j] = others[j][c];
            }
            eqs.push_back({std::move(row), gens[i][c]});
        }
        {
            QVector row(others.size(), Rational(1));
            eqs.push_back({std::move(row), Rational(1)});
        }
        std::vector<LinearConstraint> ineqs;
        for (std::size_t j = 0; j < others.size(); ++j) {
            QVector row(others.size(), Rational(0));
            row[j] = -1;
            ineqs.push_back({std::move(row), Rational(0)});
        }
        if (!lp_feasible(eqs, ineqs, others.size())) {
            v.vertices.push_back(gens[i]);
        }
    }
    std::sort(v.vertices.begin(), v.vertices.end(), lex_less);
    return v;
}

} // namespace

NewtonBody newton_polytope(const MonomialIdeal& a) {
    NewtonBody body;
    body.vrep = newton_polytope_vrep(a);
    body.hrep = vrep_to_hrep(body.vrep);
    return body;
}

NewtonBody newton_polyhedron(const MonomialIdeal& a) {
    NewtonBody body;
    body.vrep = add_orthant(newton_polytope_vrep(a));
    body.hrep = vrep_to_hrep(body.vrep);
    return body;
}

bool closure_contains(const MonomialIdeal& a, const QVector& exponent) {
    validate_exponent_vector(a.ring(), exponent);
    if (a.is_zero()) {
        return false;
    }
    if (a.is_unit()) {
        return true;
    }
    NewtonBody np = newton_polyhedron(a);
    for (const Hyperplane& e : np.hrep.equalities) {
        if (dot(e.normal, exponent) != e.rhs) {
            return false;
        }
    }
    for (const Halfspace& f : np.hrep.inequalities) {
        if (dot(f.normal, exponent) > f.rhs) {
            return false;
        }
    }
    return true;
}

void validate_primary_component(const PrimaryComponent& component) {
    const Ring& ring = component.ideal.ring();
    if (component.prime_vars.empty()) {
        throw user_error("primary component with empty prime");
    }
    std::set<std::size_t> support;
    for (const std::string& name : component.prime_vars) {
        auto it = std::find(ring.variables.begin(), ring.variables.end(), name);
        if (it == ring.variables.end()) {
            throw user_error("prime variable '" + name + "' is not a ring variable");
        }
        if (!support.insert(static_cast<std::size_t>(it - ring.variables.begin())).second) {
            throw user_error("duplicate prime variable '" + name + "'");
        }
    }
    if (component.ideal.is_zero()) {
        throw user_error("primary component ideal is the zero ideal");
    }
    for (const QVector& g : component.ideal.generators()) {
        for (std::size_t c = 0; c < g.size(); ++c) {
            if (g[c] != 0 && support.find(c) == support.end()) {
                throw user_error("generator " + format_monomial(ring, g) +
                                 " uses a variable outside the prime");
            }
        }
    }
    std::vector<QVector> prime_gens;
    for (std::size_t c : support) {
        QVector e(ring.dim(), Rational(0));
        e[c] = 1;
        prime_gens.push_back(std::move(e));
    }
    if (radical(component.ideal) != MonomialIdeal(ring, std::move(prime_gens))) {
        throw user_error("component radical is not the prime on its variables");
    }
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
    std::ostringstream msg;
    msg << "parse error at position " << pos + 1 << " in '" << std::string(text) << "': " << what;
    throw user_error(msg.str());
}

std::string token_at(std::string_view text, std::size_t pos) {
    std::size_t end = pos;
    while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) ||
                                 text[end] == '_')) {
        ++end;
    }
    if (end == pos) {
        end = pos + 1;
    }
    return std::string(text.substr(pos, end - pos));
}

// Parses one monomial from text[pos..] until a ',' or the end; pos is a
// cursor into the full ideal text so error positions are absolute.
QVector parse_monomial_at(const Ring& ring, std::string_view text, std::size_t& pos) {
    QVector exponents(ring.dim(), Rational(0));
    bool seen_factor = false;
    bool expect_factor = true;
    while (pos < text.size() && text[pos] != ',') {
        const char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++pos;
            continue;
        }
        if (ch == '*') {
            if (!seen_factor || expect_factor) {
                parse_fail(text, pos, "unexpected '*'");
            }
            expect_factor = true;
            ++pos;
            continue;
        }
        // longest variable-name match at the cursor
        std::size_t best = 0, best_index = ring.dim();
        for (std::size_t i = 0; i < ring.dim(); ++i) {
            const std::string& name = ring.variables[i];
            if (name.size() > best && text.substr(pos, name.size()) == name) {
                best = name.size();
                best_index = i;
            }
        }
        if (best_index == ring.dim()) {
            if (ch == '1') {
                ++pos;
                seen_factor = true;
                expect_factor = false;
                continue;
            }
            parse_fail(text, pos, "unexpected token '" + token_at(text, pos) + "'");
        }
        pos += best;
        Integer exponent = 1;
        std::size_t lookahead = pos;
        while (lookahead < text.size() &&
               std::isspace(static_cast<unsigned char>(text[lookahead]))) {
            ++lookahead;
        }
        if (lookahead < text.size() && text[lookahead] == '^') {
            pos = lookahead + 1;
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                parse_fail(text, pos < text.size() ? pos : text.size() - 1,
                           "expected a nonnegative integer exponent after '^'");
            }
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                digits.push_back(text[pos]);
                ++pos;
            }
            exponent = Integer(digits);
        }
        exponents[best_index] += Rational(exponent);
        seen_factor = true;
        expect_factor = false;
    }
    if (!seen_factor) {
        parse_fail(text, pos < text.size() ? pos : (text.empty() ? 0 : text.size() - 1),
                   "empty monomial");
    }
    if (expect_factor) {
        parse_fail(text, pos < text.size() ? pos : text.size() - 1,
                   "expected a factor after '*'");
    }
    return exponents;
}

} // namespace

QVector parse_monomial(const Ring& ring, std::string_view text) {
    std::size_t pos = 0;
    QVector e = parse_monomial_at(ring, text, pos);
    if (pos != text.size()) {
        parse_fail(text, pos, "unexpected ','");
    }
    return e;
}

MonomialIdeal parse_ideal(const Ring& ring, std::string_view text) {
    std::size_t pos = 0;
    // all-whitespace input (or a single "0") is the zero ideal
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
    }
    if (pos == text.size()) {
        return MonomialIdeal::zero(ring);
    }
    {
        std::string_view rest = text.substr(pos);
        if (rest == "0") {
            return MonomialIdeal::zero(ring);
        }
    }
    pos = 0;
    std::vector<QVector> gens;
    for (;;) {
        gens.push_back(parse_monomial_at(ring, text, pos));
        if (pos == text.size()) {
            break;
        }
        ++pos; // skip ','
    }
    return MonomialIdeal(ring, std::move(gens));
}

std::string format_monomial(const Ring& ring, const QVector& exponent) {
    validate_exponent_vector(ring, exponent);
    if (is_zero_vector(exponent)) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < exponent.size(); ++i) {
        if (exponent[i] == 0) {
            continue;
        }
        out += ring.variables[i];
        if (exponent[i] != 1) {
            out += "^" + to_string(exponent[i]);
        }
    }
    return out;
}

std::string format_ideal(const MonomialIdeal& a) {
    if (a.is_zero()) {
        return "0";
    }
    // print in descending lexicographic order, the usual reading order
    std::vector<QVector> gens = a.generators();
    std::reverse(gens.begin(), gens.end());
    std::string out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_monomial(a.ring(), gens[i]);
    }
    return out;
}

} // namespace npspread
