#include "npspread/json_io.hpp"

namespace npspread {

json rational_to_json(const Rational& value) {
    return json(to_string(value));
}

Rational rational_from_json(const json& j) {
    return parse_rational(j.get<std::string>());
}

json qvector_to_json(const QVector& v) {
    json arr = json::array();
    for (const Rational& x : v) {
        arr.push_back(rational_to_json(x));
    }
    return arr;
}

QVector qvector_from_json(const json& j) {
    QVector v;
    for (const auto& x : j) {
        v.push_back(rational_from_json(x));
    }
    return v;
}

namespace {

json qvector_list_to_json(const std::vector<QVector>& vs) {
    json arr = json::array();
    for (const QVector& v : vs) {
        arr.push_back(qvector_to_json(v));
    }
    return arr;
}

std::vector<QVector> qvector_list_from_json(const json& j) {
    std::vector<QVector> vs;
    for (const auto& v : j) {
        vs.push_back(qvector_from_json(v));
    }
    return vs;
}

json rational_list_to_json(const std::vector<Rational>& xs) {
    json arr = json::array();
    for (const Rational& x : xs) {
        arr.push_back(rational_to_json(x));
    }
    return arr;
}

std::vector<Rational> rational_list_from_json(const json& j) {
    std::vector<Rational> xs;
    for (const auto& x : j) {
        xs.push_back(rational_from_json(x));
    }
    return xs;
}

} // namespace

void to_json(json& j, const Hyperplane& h) {
    j = json{{"normal", qvector_to_json(h.normal)}, {"rhs", rational_to_json(h.rhs)}};
}

void from_json(const json& j, Hyperplane& h) {
    h.normal = qvector_from_json(j.at("normal"));
    h.rhs = rational_from_json(j.at("rhs"));
}

void to_json(json& j, const Halfspace& h) {
    j = json{{"normal", qvector_to_json(h.normal)}, {"rhs", rational_to_json(h.rhs)}};
}

void from_json(const json& j, Halfspace& h) {
    h.normal = qvector_from_json(j.at("normal"));
    h.rhs = rational_from_json(j.at("rhs"));
}

void to_json(json& j, const HRep& h) {
    j = json{{"dim", h.dim},
             {"equalities", h.equalities},
             {"inequalities", h.inequalities}};
}

void from_json(const json& j, HRep& h) {
    j.at("dim").get_to(h.dim);
    j.at("equalities").get_to(h.equalities);
    j.at("inequalities").get_to(h.inequalities);
}

void to_json(json& j, const VRep& v) {
    j = json{{"dim", v.dim},
             {"vertices", qvector_list_to_json(v.vertices)},
             {"rays", qvector_list_to_json(v.rays)}};
}

void from_json(const json& j, VRep& v) {
    j.at("dim").get_to(v.dim);
    v.vertices = qvector_list_from_json(j.at("vertices"));
    v.rays = qvector_list_from_json(j.at("rays"));
}

void to_json(json& j, const Face& f) {
    j = json{{"dim", f.dim},
             {"active_inequalities", f.active_inequalities},
             {"vertex_indices", f.vertex_indices},
             {"ray_indices", f.ray_indices}};
}

void from_json(const json& j, Face& f) {
    j.at("dim").get_to(f.dim);
    j.at("active_inequalities").get_to(f.active_inequalities);
    j.at("vertex_indices").get_to(f.vertex_indices);
    j.at("ray_indices").get_to(f.ray_indices);
}

void to_json(json& j, const NewtonBody& b) {
    j = json{{"hrep", b.hrep}, {"vrep", b.vrep}};
}

void from_json(const json& j, NewtonBody& b) {
    j.at("hrep").get_to(b.hrep);
    j.at("vrep").get_to(b.vrep);
}

void to_json(json& j, const BoundCertificate& c) {
    j = json{{"alphas", rational_list_to_json(c.alphas)},
             {"beta_support", c.beta_support},
             {"betas", rational_list_to_json(c.betas)},
             {"combination", qvector_to_json(c.combination)}};
}

void from_json(const json& j, BoundCertificate& c) {
    c.alphas = rational_list_from_json(j.at("alphas"));
    j.at("beta_support").get_to(c.beta_support);
    c.betas = rational_list_from_json(j.at("betas"));
    c.combination = qvector_from_json(j.at("combination"));
}

void to_json(json& j, const SpreadBound& b) {
    j = json{{"bound", b.bound}, {"s", b.s}, {"k", b.k}};
    if (b.certificate) {
        j["certificate"] = *b.certificate;
    } else {
        j["certificate"] = nullptr;
    }
}

void from_json(const json& j, SpreadBound& b) {
    j.at("bound").get_to(b.bound);
    j.at("s").get_to(b.s);
    j.at("k").get_to(b.k);
    if (j.at("certificate").is_null()) {
        b.certificate.reset();
    } else {
        b.certificate = j.at("certificate").get<BoundCertificate>();
    }
}

void to_json(json& j, const SpreadReport& r) {
    j = json{{"spread", r.spread},
             {"witness_face", r.witness_face},
             {"polytope", r.polytope},
             {"bound", r.bound}};
}

void from_json(const json& j, SpreadReport& r) {
    j.at("spread").get_to(r.spread);
    j.at("witness_face").get_to(r.witness_face);
    j.at("polytope").get_to(r.polytope);
    j.at("bound").get_to(r.bound);
}

void to_json(json& j, const BasicConditions& c) {
    j = json{{"mu_le_n", c.mu_le_n},
             {"expected_hyperplane_count", c.expected_hyperplane_count},
             {"every_column_positive", c.every_column_positive},
             {"negative_combination", c.negative_combination}};
}

void from_json(const json& j, BasicConditions& c) {
    j.at("mu_le_n").get_to(c.mu_le_n);
    j.at("expected_hyperplane_count").get_to(c.expected_hyperplane_count);
    j.at("every_column_positive").get_to(c.every_column_positive);
    j.at("negative_combination").get_to(c.negative_combination);
}

void to_json(json& j, const QMatrix& m) {
    j = qvector_list_to_json(m.rows);
}

void from_json(const json& j, QMatrix& m) {
    m.rows = qvector_list_from_json(j);
}

void to_json(json& j, const BasicReport& r) {
    j = json{{"basic", r.basic},
             {"mu", r.mu},
             {"spread", r.spread},
             {"conditions", r.conditions},
             {"rref_normals", r.rref_normals}};
}

void from_json(const json& j, BasicReport& r) {
    j.at("basic").get_to(r.basic);
    j.at("mu").get_to(r.mu);
    j.at("spread").get_to(r.spread);
    j.at("conditions").get_to(r.conditions);
    j.at("rref_normals").get_to(r.rref_normals);
}

void to_json(json& j, const ReductionReport& r) {
    j = json{{"is_reduction", r.is_reduction},
             {"method", r.method == ReductionMethod::np_equality ? "np-equality" : "power-witness"}};
    if (r.witness_power) {
        j["witness_power"] = *r.witness_power;
    } else {
        j["witness_power"] = nullptr;
    }
}

void from_json(const json& j, ReductionReport& r) {
    j.at("is_reduction").get_to(r.is_reduction);
    const std::string method = j.at("method").get<std::string>();
    if (method == "np-equality") {
        r.method = ReductionMethod::np_equality;
    } else if (method == "power-witness") {
        r.method = ReductionMethod::power_witness;
    } else {
        throw user_error("unknown reduction method '" + method + "'");
    }
    if (j.at("witness_power").is_null()) {
        r.witness_power.reset();
    } else {
        r.witness_power = j.at("witness_power").get<int>();
    }
}

} // namespace npspread
