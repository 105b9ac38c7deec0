#include "npspread/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "npspread/json_io.hpp"
#include "npspread/monomial.hpp"
#include "npspread/oracle.hpp"
#include "npspread/spread.hpp"
#include "npspread/text_io.hpp"

namespace npspread::cli {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        const auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) {
            out.push_back("");
        } else {
            out.push_back(item.substr(begin, end - begin + 1));
        }
    }
    return out;
}

struct IdealOptions {
    std::string vars;
    std::string ideal_text;
    std::string file;
    bool json = false;
};

void add_ideal_options(CLI::App* cmd, IdealOptions& opts) {
    cmd->add_option("--vars", opts.vars, "comma-separated ring variables, e.g. x,y,z")
        ->required();
    cmd->add_option("--ideal", opts.ideal_text, "generators as a comma-separated monomial list");
    cmd->add_option("--file", opts.file, "read the generator list from a file");
    cmd->add_flag("--json", opts.json, "machine-readable JSON output");
}

MonomialIdeal load_ideal(const IdealOptions& opts) {
    Ring ring(split_csv(opts.vars));
    if (opts.ideal_text.empty() == opts.file.empty()) {
        throw user_error("give the ideal with exactly one of --ideal or --file");
    }
    std::string text = opts.ideal_text;
    if (!opts.file.empty()) {
        std::ifstream in(opts.file);
        if (!in) {
            throw user_error("cannot open '" + opts.file + "'");
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return parse_ideal(ring, text);
}

json document(const std::string& command, const MonomialIdeal& ideal) {
    json doc;
    doc["command"] = command;
    doc["ring"] = ideal.ring().variables;
    json gens = json::array();
    for (const QVector& g : ideal.generators()) {
        gens.push_back(qvector_to_json(g));
    }
    doc["input_generators"] = gens;
    return doc;
}

void emit(std::ostream& out, json doc) {
    out << doc.dump(2) << "\n";
}

void print_certificate(std::ostream& out, const SpreadBound& bound, const HRep& np_hrep) {
    if (!bound.certificate) {
        out << "no all-negative combination exists; bound is vacuous\n";
        return;
    }
    const BoundCertificate& cert = *bound.certificate;
    out << "certificate:\n";
    for (std::size_t i = 0; i < cert.alphas.size(); ++i) {
        out << "  alpha[" << i << "] = " << to_string(cert.alphas[i]) << "   (hyperplane: "
            << format_linear(np_hrep.equalities[i].normal, np_hrep.dim) << " = "
            << to_string(np_hrep.equalities[i].rhs) << ")\n";
    }
    for (std::size_t j = 0; j < cert.beta_support.size(); ++j) {
        const Halfspace& f = np_hrep.inequalities[cert.beta_support[j]];
        out << "  beta[" << cert.beta_support[j] << "] = " << to_string(cert.betas[j])
            << "   (halfspace: " << format_linear(f.normal, np_hrep.dim)
            << " <= " << to_string(f.rhs) << ")\n";
    }
    out << "  combination: " << format_qvector(cert.combination) << "\n";
}

int run_np(const IdealOptions& opts, const std::string& obj_path, std::ostream& out) {
    MonomialIdeal ideal = load_ideal(opts);
    NewtonBody np = newton_polytope(ideal);
    NewtonBody npoly = newton_polyhedron(ideal);
    if (!obj_path.empty()) {
        std::ofstream obj(obj_path);
        if (!obj) {
            throw user_error("cannot write '" + obj_path + "'");
        }
        write_newton_off(obj, ideal);
    }
    if (opts.json) {
        json doc = document("np", ideal);
        doc["result"] = json{{"np", np}, {"NP", npoly}};
        emit(out, doc);
        return 0;
    }
    out << "np(I):\n" << format_hrep(np.hrep, false) << format_vrep(np.vrep);
    out << "NP(I):\n" << format_hrep(npoly.hrep, true) << format_vrep(npoly.vrep);
    return 0;
}

int run_spread(const IdealOptions& opts, std::ostream& out) {
    MonomialIdeal ideal = load_ideal(opts);
    SpreadReport report = analytic_spread(ideal);
    if (opts.json) {
        json doc = document("spread", ideal);
        doc["result"] = report;
        emit(out, doc);
        return 0;
    }
    out << "spread = " << report.spread << "\n";
    if (report.bound.certificate) {
        out << "bound = " << report.bound.bound << " (s = " << report.bound.s
            << ", k = " << report.bound.k << ")\n";
    } else {
        out << "bound: no all-negative combination exists\n";
    }
    out << "witness face: dim " << report.witness_face.dim << ", vertices";
    for (std::size_t vi : report.witness_face.vertex_indices) {
        out << " " << format_qvector(report.polytope.vrep.vertices[vi]);
    }
    out << "\n";
    return 0;
}

int run_bound(const IdealOptions& opts, std::ostream& out) {
    MonomialIdeal ideal = load_ideal(opts);
    NewtonBody np = newton_polytope(ideal);
    SpreadBound bound = spread_bound(ideal);
    if (opts.json) {
        json doc = document("bound", ideal);
        doc["result"] = bound;
        emit(out, doc);
        return 0;
    }
    out << "bound = " << bound.bound << " (s = " << bound.s << ", k = " << bound.k << ")\n";
    print_certificate(out, bound, np.hrep);
    return 0;
}

int run_basic(const IdealOptions& opts, std::ostream& out) {
    MonomialIdeal ideal = load_ideal(opts);
    BasicReport report = is_basic(ideal);
    if (opts.json) {
        json doc = document("basic", ideal);
        doc["result"] = report;
        emit(out, doc);
        return 0;
    }
    out << "basic = " << (report.basic ? "true" : "false") << "\n";
    out << "mu = " << report.mu << "\n";
    out << "spread = " << report.spread << "\n";
    auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
    out << "conditions: mu <= n: " << verdict(report.conditions.mu_le_n)
        << " | s = n - mu + 1: " << verdict(report.conditions.expected_hyperplane_count)
        << " | positive entry in every column: "
        << verdict(report.conditions.every_column_positive)
        << " | all-negative combination of hyperplane normals: "
        << verdict(report.conditions.negative_combination) << "\n";
    return 0;
}

int run_reduce(const IdealOptions& opts, const std::string& candidate_text, int max_power,
               std::ostream& out) {
    MonomialIdeal ideal = load_ideal(opts);
    MonomialIdeal candidate = parse_ideal(ideal.ring(), candidate_text);
    ReductionReport report = check_reduction(candidate, ideal, max_power);
    if (opts.json) {
        json doc = document("reduce", ideal);
        json cand = json::array();
        for (const QVector& g : candidate.generators()) {
            cand.push_back(qvector_to_json(g));
        }
        doc["candidate_generators"] = cand;
        doc["result"] = report;
        emit(out, doc);
        return 0;
    }
    out << "reduction = " << (report.is_reduction ? "true" : "false") << "\n";
    out << "method = "
        << (report.method == ReductionMethod::power_witness ? "power-witness" : "np-equality")
        << "\n";
    if (report.witness_power) {
        out << "witness power = " << *report.witness_power << "\n";
    }
    return 0;
}

int run_minred(const IdealOptions& opts, std::ostream& out) {
    MonomialIdeal ideal = load_ideal(opts);
    MonomialIdeal reduction = minimal_monomial_reduction(ideal);
    if (opts.json) {
        json doc = document("minred", ideal);
        json gens = json::array();
        for (const QVector& g : reduction.generators()) {
            gens.push_back(qvector_to_json(g));
        }
        doc["result"] = json{{"generators", gens},
                             {"count", reduction.mu()},
                             {"ideal", format_ideal(reduction)}};
        emit(out, doc);
        return 0;
    }
    out << "minimal monomial reduction = " << format_ideal(reduction) << "\n";
    out << "generators = " << reduction.mu() << "\n";
    return 0;
}

int run_family_disjoint(const std::string& vars, const std::vector<std::string>& component_specs,
                        bool json_mode, bool no_crosscheck, std::ostream& out) {
    Ring ring(split_csv(vars));
    std::vector<PrimaryComponent> components;
    for (const std::string& spec : component_specs) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos) {
            throw user_error("component '" + spec + "' must look like 'vars: ideal'");
        }
        PrimaryComponent component{split_csv(spec.substr(0, colon)),
                                   parse_ideal(ring, spec.substr(colon + 1))};
        components.push_back(std::move(component));
    }
    const int value = spread_disjoint_primary(components, !no_crosscheck);

    MonomialIdeal intersection = components.front().ideal;
    for (std::size_t i = 1; i < components.size(); ++i) {
        intersection = intersect(intersection, components[i].ideal);
    }
    if (json_mode) {
        json doc = document("family disjoint-primary", intersection);
        doc["result"] = json{{"spread", value},
                             {"n", ring.dim()},
                             {"r", components.size()},
                             {"crosscheck", no_crosscheck ? "skipped" : "passed"}};
        emit(out, doc);
        return 0;
    }
    out << "spread = " << value << "\n";
    out << "n = " << ring.dim() << ", r = " << components.size() << "\n";
    out << "cross-check: " << (no_crosscheck ? "skipped" : "passed") << "\n";
    return 0;
}

int run_family_two_primes(const std::string& x_vars, const std::string& y_vars,
                          const std::string& z_vars, int a, int b, bool json_mode,
                          bool no_crosscheck, std::ostream& out) {
    const std::vector<std::string> xs = split_csv(x_vars);
    const std::vector<std::string> ys = y_vars.empty() ? std::vector<std::string>{}
                                                       : split_csv(y_vars);
    const std::vector<std::string> zs = split_csv(z_vars);
    const int value = spread_two_prime_powers(xs, ys, zs, a, b, !no_crosscheck);

    std::vector<std::string> vars = xs;
    vars.insert(vars.end(), ys.begin(), ys.end());
    vars.insert(vars.end(), zs.begin(), zs.end());
    Ring ring(vars);
    auto prime_on = [&ring](const std::vector<std::string>& names) {
        std::vector<QVector> gens;
        for (const std::string& name : names) {
            QVector e(ring.dim(), Rational(0));
            for (std::size_t i = 0; i < ring.dim(); ++i) {
                if (ring.variables[i] == name) {
                    e[i] = 1;
                }
            }
            gens.push_back(std::move(e));
        }
        return MonomialIdeal(ring, std::move(gens));
    };
    std::vector<std::string> p_vars = xs;
    p_vars.insert(p_vars.end(), ys.begin(), ys.end());
    std::vector<std::string> q_vars = ys;
    q_vars.insert(q_vars.end(), zs.begin(), zs.end());
    MonomialIdeal ideal = intersect(power(prime_on(p_vars), a), power(prime_on(q_vars), b));

    if (json_mode) {
        json doc = document("family two-prime-powers", ideal);
        doc["result"] = json{{"spread", value},
                             {"n", ring.dim()},
                             {"a", a},
                             {"b", b},
                             {"crosscheck", no_crosscheck ? "skipped" : "passed"}};
        emit(out, doc);
        return 0;
    }
    out << "spread = " << value << "\n";
    out << "n = " << ring.dim() << " (a = " << a << ", b = " << b << ")\n";
    out << "cross-check: " << (no_crosscheck ? "skipped" : "passed") << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Newton polytope/polyhedron computations for monomial ideals"};
    app.require_subcommand(1);

    IdealOptions np_opts;
    std::string obj_path;
    CLI::App* np_cmd = app.add_subcommand("np", "Newton polytope and polyhedron of an ideal");
    add_ideal_options(np_cmd, np_opts);
    np_cmd->add_option("--obj", obj_path, "write an OFF mesh (three variables only)");

    IdealOptions spread_opts;
    CLI::App* spread_cmd = app.add_subcommand("spread", "analytic spread with witness face");
    add_ideal_options(spread_cmd, spread_opts);

    IdealOptions bound_opts;
    CLI::App* bound_cmd =
        app.add_subcommand("bound", "halfspace/hyperplane upper bound with certificate");
    add_ideal_options(bound_cmd, bound_opts);

    IdealOptions basic_opts;
    CLI::App* basic_cmd = app.add_subcommand("basic", "basic-ideal classification");
    add_ideal_options(basic_cmd, basic_opts);

    IdealOptions reduce_opts;
    std::string candidate_text;
    int max_power = 6;
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "check a candidate reduction");
    add_ideal_options(reduce_cmd, reduce_opts);
    reduce_cmd->add_option("--candidate", candidate_text, "candidate subideal")->required();
    reduce_cmd->add_option("--max-power", max_power, "witness search depth (default 6)");

    IdealOptions minred_opts;
    CLI::App* minred_cmd = app.add_subcommand("minred", "minimal monomial reduction");
    add_ideal_options(minred_cmd, minred_opts);

    CLI::App* family_cmd = app.add_subcommand("family", "closed-form spread families");
    family_cmd->require_subcommand(1);

    std::string family_vars;
    std::vector<std::string> component_specs;
    bool dp_json = false, dp_nocheck = false;
    CLI::App* disjoint_cmd = family_cmd->add_subcommand(
        "disjoint-primary", "intersection of disjointly generated primary ideals");
    disjoint_cmd->add_option("--vars", family_vars, "ring variables")->required();
    disjoint_cmd
        ->add_option("--component", component_specs,
                     "primary component as 'prime vars: generators' (repeatable)")
        ->required();
    disjoint_cmd->add_flag("--json", dp_json, "JSON output");
    disjoint_cmd->add_flag("--no-crosscheck", dp_nocheck, "skip the direct polyhedral check");

    std::string tp_x, tp_y, tp_z;
    int tp_a = 1, tp_b = 1;
    bool tp_json = false, tp_nocheck = false;
    CLI::App* two_primes_cmd = family_cmd->add_subcommand(
        "two-prime-powers", "intersection of powers of two overlapping primes");
    two_primes_cmd->add_option("--x-vars", tp_x, "variables only in the first prime")->required();
    two_primes_cmd->add_option("--y-vars", tp_y, "variables shared by both primes");
    two_primes_cmd->add_option("--z-vars", tp_z, "variables only in the second prime")->required();
    two_primes_cmd->add_option("--a", tp_a, "power of the first prime")->required();
    two_primes_cmd->add_option("--b", tp_b, "power of the second prime")->required();
    two_primes_cmd->add_flag("--json", tp_json, "JSON output");
    two_primes_cmd->add_flag("--no-crosscheck", tp_nocheck, "skip the direct polyhedral check");

    std::vector<const char*> argv;
    argv.push_back("npspread");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (np_cmd->parsed()) {
            return run_np(np_opts, obj_path, out);
        }
        if (spread_cmd->parsed()) {
            return run_spread(spread_opts, out);
        }
        if (bound_cmd->parsed()) {
            return run_bound(bound_opts, out);
        }
        if (basic_cmd->parsed()) {
            return run_basic(basic_opts, out);
        }
        if (reduce_cmd->parsed()) {
            return run_reduce(reduce_opts, candidate_text, max_power, out);
        }
        if (minred_cmd->parsed()) {
            return run_minred(minred_opts, out);
        }
        if (family_cmd->parsed()) {
            if (disjoint_cmd->parsed()) {
                return run_family_disjoint(family_vars, component_specs, dp_json, dp_nocheck, out);
            }
            return run_family_two_primes(tp_x, tp_y, tp_z, tp_a, tp_b, tp_json, tp_nocheck, out);
        }
        throw user_error("no command given");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const user_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace npspread::cli
