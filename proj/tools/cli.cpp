#include "cli.hpp"

#include "dquad/certifier.hpp"
#include "dquad/chowverify.hpp"
#include "dquad/errors.hpp"
#include "dquad/parser.hpp"

#include "CLI11.hpp"
#include "json.hpp"
#include "toml.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace dquad::cli {

namespace {

class InputError : public Error {
public:
    using Error::Error;
};

struct Job {
    std::string command;
    std::string input;
    std::string domain;
    std::optional<std::uint64_t> prime;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_pairs;
    std::string out;
    bool explicit_only = false;
};

/// The parsed input file together with the resolved coefficient domain.
struct Input {
    std::string path;
    toml::table table;
    Domain domain = Domain::rationals();
    /// F_p chosen explicitly; otherwise rationals with a prime fallback.
    bool forced = false;
    std::uint64_t seed = 1;
};

const std::set<std::string> kKeys{"name", "nvars", "Q", "W", "f1", "f2", "f3", "nodes", "domain", "prime", "seed"};

toml::table read_table(const std::string& path) {
    try {
        return toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        const auto& src = e.source();
        std::ostringstream os;
        os << path << ":" << src.begin.line << ":" << src.begin.column << ": " << e.description();
        throw InputError(os.str());
    }
}

std::optional<std::uint64_t> read_unsigned(const toml::table& t, const std::string& key, const std::string& path) {
    const toml::node* n = t.get(key);
    if (!n) return std::nullopt;
    auto v = n->value<std::int64_t>();
    if (!v || *v < 0) throw InputError(path + ": " + key + " must be a non-negative integer");
    return static_cast<std::uint64_t>(*v);
}

std::optional<std::string> read_string(const toml::table& t, const std::string& key, const std::string& path) {
    const toml::node* n = t.get(key);
    if (!n) return std::nullopt;
    if (!n->is_string()) throw InputError(path + ": " + key + " must be a string");
    return *n->value<std::string>();
}

Input load(const Job& job, bool need_file = true) {
    Input in;
    in.path = job.input;
    if (!job.input.empty()) {
        in.table = read_table(job.input);
    } else if (need_file) {
        throw InputError("no input file given");
    }
    for (const auto& [k, v] : in.table)
        if (!kKeys.count(std::string(k.str()))) throw InputError(in.path + ": unknown key '" + std::string(k.str()) + "'");
    if (auto n = read_unsigned(in.table, "nvars", in.path); n && *n != 5)
        throw InputError(in.path + ": nvars must be 5, got " + std::to_string(*n));

    std::string domain = !job.domain.empty() ? job.domain : read_string(in.table, "domain", in.path).value_or("q");
    std::optional<std::uint64_t> prime = job.prime ? job.prime : read_unsigned(in.table, "prime", in.path);
    if (domain == "fp") {
        if (!prime) throw InputError("domain fp requires a prime");
        in.domain = Domain::prime_field(*prime);
        in.forced = true;
    } else if (domain == "q") {
        if (prime) throw InputError("a prime was given but the domain is q");
    } else {
        throw InputError("domain must be q or fp, got '" + domain + "'");
    }
    in.seed = job.seed ? *job.seed : read_unsigned(in.table, "seed", in.path).value_or(1);
    return in;
}

std::optional<Form> read_form(const Input& in, const std::string& key, int degree) {
    auto text = read_string(in.table, key, in.path);
    if (!text) return std::nullopt;
    try {
        Form f = parse_form(*text, 5, in.domain);
        if (f.degree() != degree)
            throw InputError(in.path + ": " + key + " must have degree " + std::to_string(degree) + ", got " +
                             std::to_string(f.degree()));
        return f;
    } catch (const ParseError& e) {
        throw InputError(in.path + ": " + key + ": " + e.what());
    } catch (const InhomogeneousError& e) {
        throw InputError(in.path + ": " + key + ": " + e.what());
    }
}

std::optional<std::vector<ProjectivePoint>> read_nodes(const Input& in) {
    const toml::node* n = in.table.get("nodes");
    if (!n) return std::nullopt;
    const toml::array* rows = n->as_array();
    if (!rows) throw InputError(in.path + ": nodes must be an array of coordinate arrays");
    std::vector<ProjectivePoint> out;
    for (std::size_t i = 0; i < rows->size(); ++i) {
        const toml::array* row = rows->get(i)->as_array();
        std::string where = in.path + ": nodes[" + std::to_string(i) + "]";
        if (!row || row->size() != 5) throw InputError(where + " must hold 5 coordinates");
        std::vector<Scalar> coords;
        for (const auto& c : *row) {
            std::string text;
            if (c.is_string()) text = *c.value<std::string>();
            else if (c.is_integer()) text = std::to_string(*c.value<std::int64_t>());
            else throw InputError(where + ": coordinates are \"num/den\" strings");
            try {
                coords.push_back(in.domain.parse(text));
            } catch (const Error& e) {
                throw InputError(where + ": " + e.what());
            }
        }
        try {
            out.emplace_back(std::move(coords));
        } catch (const Error& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    return out;
}

DoubleQuadricInput read_problem(const Input& in) {
    auto q = read_form(in, "Q", 2);
    if (!q) throw InputError(in.path + ": missing Q");
    auto w = read_form(in, "W", 4);
    auto f1 = read_form(in, "f1", 1), f2 = read_form(in, "f2", 2), f3 = read_form(in, "f3", 3);
    bool any_f = f1 || f2 || f3;
    if (any_f && !(f1 && f2 && f3)) throw InputError(in.path + ": f1, f2 and f3 must be given together");
    DoubleQuadricInput problem{*q, Form::zero(5, 4), std::nullopt, std::nullopt, std::nullopt};
    if (any_f) {
        problem = construct_example(*f1, *f2, *f3, *q);
        if (w) problem.w = *w;
    } else if (w) {
        problem.w = *w;
    } else {
        throw InputError(in.path + ": missing W (or f1, f2, f3)");
    }
    problem.nodes = read_nodes(in);
    return problem;
}

GroebnerOptions groebner_options(const Job& job) {
    GroebnerOptions g;
    if (job.max_pairs) g.max_pairs = *job.max_pairs;
    return g;
}

void emit(const Job& job, const std::string& text, std::ostream& out) {
    if (job.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(job.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + job.out);
    f << text;
}

void emit_json(const Job& job, const nlohmann::json& j, std::ostream& out) { emit(job, j.dump(2) + "\n", out); }

int cmd_certify(const Job& job, std::ostream& out) {
    Input in = load(job);
    DoubleQuadricInput problem = read_problem(in);
    DefectOptions o;
    if (in.forced) o.domain = in.domain;
    o.seed = in.seed;
    o.groebner = groebner_options(job);
    o.symbolic = !job.explicit_only;
    DefectCertificate c = defect(problem, o);
    emit_json(job, to_json(c), out);
    switch (c.verdict) {
        case Verdict::QFactorial: return kExitQFactorial;
        case Verdict::NotQFactorial: return kExitNotQFactorial;
        case Verdict::Undetermined: return kExitUndetermined;
    }
    return kExitUndetermined;
}

int cmd_nodes(const Job& job, std::ostream& out) {
    Input in = load(job);
    DoubleQuadricInput problem = read_problem(in);
    NodeCountOptions o;
    if (in.forced) o.domain = in.domain;
    o.seed = in.seed;
    o.groebner = groebner_options(job);
    NodeCount c = count_nodes(problem.q, problem.w, o);
    nlohmann::json j;
    j["count"] = c.count;
    j["distinct_points"] = c.distinct_points;
    j["reduced"] = c.count == c.distinct_points;
    j["domain"] = c.domain.name();
    j["probabilistic"] = c.probabilistic;
    j["chart"] = c.chart.to_string();
    j["note"] = c.note;
    j["seed"] = in.seed;
    nlohmann::json nodes = nlohmann::json::array();
    if (problem.nodes)
        for (const auto& p : *problem.nodes) nodes.push_back(to_json(verify_node(problem.q, problem.w, p)));
    j["nodes"] = nodes;
    emit_json(job, j, out);
    return 0;
}

int cmd_ek(const Job& job, std::ostream& out) {
    Input in = load(job);
    auto nodes = read_nodes(in);
    if (!nodes) throw InputError(in.path + ": ek needs a node list");
    PositionOptions o;
    o.seed = in.seed;
    nlohmann::json j = to_json(ek_check(*nodes, o));
    j["count"] = nodes->size();
    j["seed"] = in.seed;
    emit_json(job, j, out);
    return 0;
}

Form random_form(std::mt19937_64& rng, int degree, int range) {
    std::uniform_int_distribution<int> e(-range, range);
    const Domain d = Domain::rationals();
    for (;;) {
        std::vector<Term> ts;
        for (const auto& m : monomial_basis(5, degree))
            if (int c = e(rng)) ts.push_back({m, d.from_int(c)});
        if (!ts.empty()) return Form(Polynomial::from_terms(5, std::move(ts)), degree);
    }
}

int cmd_example(const Job& job, std::ostream& out) {
    Input in = load(job, false);
    std::optional<Form> q = read_form(in, "Q", 2);
    std::optional<Form> f1 = read_form(in, "f1", 1), f2 = read_form(in, "f2", 2), f3 = read_form(in, "f3", 3);
    std::mt19937_64 rng(in.seed);
    if (!q) q = parse_form("x0*x3 - x1*x2 + x4^2", 5, in.domain);
    if (!f1) f1 = random_form(rng, 1, 3).to_domain(in.domain);
    if (!f2) f2 = random_form(rng, 2, 3).to_domain(in.domain);
    if (!f3) f3 = random_form(rng, 3, 3).to_domain(in.domain);
    DoubleQuadricInput problem = construct_example(*f1, *f2, *f3, *q);

    toml::table t;
    t.insert("nvars", 5);
    t.insert("Q", problem.q.to_string());
    t.insert("W", problem.w.to_string());
    t.insert("f1", f1->to_string());
    t.insert("f2", f2->to_string());
    t.insert("f3", f3->to_string());
    t.insert("seed", static_cast<std::int64_t>(in.seed));
    if (in.forced) {
        t.insert("domain", "fp");
        t.insert("prime", static_cast<std::int64_t>(in.domain.prime()));
    }
    if (auto nodes = read_nodes(in)) {
        toml::array rows;
        for (const auto& p : *nodes) {
            toml::array row;
            for (const auto& c : p.coords()) row.push_back(exact_string(c));
            rows.push_back(std::move(row));
        }
        t.insert("nodes", std::move(rows));
    }
    std::ostringstream os;
    os << t << "\n";
    emit(job, os.str(), out);
    return 0;
}

int cmd_chow(const Job& job, std::ostream& out) {
    std::string path = job.input.empty() ? std::string(DQUAD_DATA_DIR) + "/chow_golden.json" : job.input;
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    GoldenSet golden = golden_from_json(doc);
    SolvedTables solved = solve_relation_table(golden);

    nlohmann::json identities = nlohmann::json::array();
    bool all = true;
    for (const auto& id : golden.identities) {
        for (const auto& [tag, table] : solved.tables) {
            if (id.table != "all" && id.table != tag) continue;
            IdentityCheck r = verify_identity(parse_chow_expression(id.expression, table.model()), table,
                                              parse_parameter_polynomial(id.expected));
            all = all && r.holds;
            identities.push_back({{"name", id.name},
                                  {"table", tag},
                                  {"expression", id.expression},
                                  {"expected", id.expected},
                                  {"expanded", parameter_polynomial_text(r.expanded)},
                                  {"difference", parameter_polynomial_text(r.difference)},
                                  {"restatement", id.restatement},
                                  {"holds", r.holds}});
        }
    }
    nlohmann::json tables = nlohmann::json::object();
    for (const auto& [tag, table] : solved.tables) {
        nlohmann::json entries = nlohmann::json::object();
        const auto& classes = table.model().classes();
        for (const auto& [t, v] : table.entries())
            entries[classes[t[0]].name + "." + classes[t[1]].name + "." + classes[t[2]].name] = v.to_string();
        tables[tag] = entries;
    }
    nlohmann::json j;
    j["identities"] = identities;
    j["tables"] = tables;
    j["equations"] = solved.equations;
    j["independent"] = solved.independent;
    j["redundant"] = solved.redundant();
    j["all_pass"] = all;
    emit_json(job, j, out);
    return all ? 0 : kExitInputError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Q-factoriality certificates for nodal double covers of a smooth quadric threefold"};
    app.require_subcommand(1, 1);
    Job job;
    auto common = [&](CLI::App* s, const std::string& input_help) {
        s->add_option("input", job.input, input_help);
        s->add_option("--domain", job.domain, "Coefficient domain")->check(CLI::IsMember({"q", "fp"}));
        s->add_option("--prime", job.prime, "Prime for --domain fp");
        s->add_option("--seed", job.seed, "Seed for charts, primes and linear forms");
        s->add_option("--max-pairs", job.max_pairs, "Cap on Groebner S-pairs");
        s->add_option("--out", job.out, "Write the report here instead of stdout");
    };
    auto* certify = app.add_subcommand("certify", "Decide Q-factoriality and write a certificate");
    common(certify, "Input TOML file");
    certify->add_flag("--explicit-only", job.explicit_only, "Skip the scheme-theoretic node count");
    common(app.add_subcommand("nodes", "Count singular points and classify the supplied nodes"), "Input TOML file");
    common(app.add_subcommand("ek", "Check the supplied nodes for general position"), "Input TOML file");
    common(app.add_subcommand("example", "Write a split-family input W = f2^2 + f1*f3"),
           "Optional TOML file with Q, f1, f2, f3");
    common(app.add_subcommand("chow", "Verify the golden intersection-number identities"), "Golden identity JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : kExitInputError;
    }
    job.command = app.get_subcommands().front()->get_name();

    try {
        if (job.command == "certify") return cmd_certify(job, out);
        if (job.command == "nodes") return cmd_nodes(job, out);
        if (job.command == "ek") return cmd_ek(job, out);
        if (job.command == "example") return cmd_example(job, out);
        return cmd_chow(job, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace dquad::cli
