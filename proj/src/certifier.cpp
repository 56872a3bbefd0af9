#include "dquad/certifier.hpp"

#include "dquad/errors.hpp"
#include "dquad/groebner.hpp"
#include "dquad/matrix.hpp"

#include <random>

namespace dquad {

namespace {

void check_degrees(const Form& q, const Form& w) {
    if (q.nvars() != 5 || w.nvars() != 5) throw DimensionError("Q and W must be forms in 5 variables");
    if (q.degree() != 2) throw DimensionError("Q must be a quadric, got degree " + std::to_string(q.degree()));
    if (w.degree() != 4) throw DimensionError("W must be a quartic, got degree " + std::to_string(w.degree()));
}

/// Exact quotient of f by g, or nullopt when g does not divide f.
std::optional<Polynomial> exact_quotient(Polynomial f, const Polynomial& g) {
    const Term& lead = g.leading();
    Scalar inv = lead.coeff.inverse();
    std::vector<Term> q;
    while (!f.is_zero()) {
        const Term& t = f.leading();
        if (!lead.mono.divides(t.mono)) return std::nullopt;
        Term step{t.mono.quotient(lead.mono), t.coeff * inv};
        f -= g * Polynomial::from_terms(g.nvars(), {step});
        q.push_back(step);
    }
    return Polynomial::from_terms(g.nvars(), std::move(q));
}

struct SymbolicDefect {
    std::size_t s = 0;
    std::size_t rank3 = 0;
    bool probabilistic = false;
    std::string domain;
    std::vector<std::uint64_t> primes;
};

SymbolicDefect symbolic_in(const Form& q, const Form& w, const Domain& d, std::uint64_t seed,
                           const GroebnerOptions& groebner) {
    NodeCountOptions o;
    o.domain = d;
    o.seed = seed;
    o.groebner = groebner;
    NodeCount n;
    try {
        n = count_nodes(q, w, o);
    } catch (const NotZeroDimensionalError& e) {
        throw NonNodalError(std::string("S has a positive-dimensional singular locus: ") + e.what());
    }
    if (n.distinct_points != n.count)
        throw NonNodalError("the singular scheme of S has length " + std::to_string(n.count) + " at " +
                            std::to_string(n.distinct_points) + " points, so S is not nodal");
    SymbolicDefect r;
    r.s = n.count;
    r.rank3 = 35 - graded_component_dim(n.saturated, 3);
    r.probabilistic = !d.is_rational();
    r.domain = d.name();
    if (!d.is_rational()) r.primes.push_back(d.prime());
    return r;
}

/// The symbolic path; nullopt with a note on resource failure.
std::optional<SymbolicDefect> symbolic_defect(const DoubleQuadricInput& in, const DefectOptions& o,
                                              std::vector<std::string>& notes) {
    auto dq = in.q.poly().domain();
    const Domain base = dq ? *dq : Domain::rationals();
    try {
        if (o.domain) return symbolic_in(in.q, in.w, *o.domain, o.seed, o.groebner);
        return symbolic_in(in.q, in.w, base, o.seed, o.groebner);
    } catch (const ResourceLimitError& e) {
        notes.push_back(std::string("exact symbolic computation stopped: ") + e.what());
        if (o.domain || !base.is_rational()) return std::nullopt;
    }
    std::mt19937_64 rng(o.seed);
    std::vector<SymbolicDefect> runs;
    try {
        for (int i = 0; i < 2; ++i) runs.push_back(symbolic_in(in.q, in.w, Domain::random_prime_field(rng), o.seed, o.groebner));
    } catch (const ResourceLimitError& e) {
        notes.push_back(std::string("prime-field computation stopped: ") + e.what());
        return std::nullopt;
    }
    if (runs[0].s != runs[1].s || runs[0].rank3 != runs[1].rank3) {
        notes.push_back("the two prime-field computations disagree");
        return std::nullopt;
    }
    SymbolicDefect r = runs[0];
    r.primes.push_back(runs[1].primes[0]);
    r.domain = "F_p";
    notes.push_back("symbolic path counted modulo two random primes");
    return r;
}

void positional_alerts(DefectCertificate& c) {
    const PositionReport& p = *c.position;
    if (p.collinear.count > 3)
        c.alerts.push_back("positional-bound alert: " + std::to_string(p.collinear.count) +
                           " nodes on a line, nodes allow at most 3");
    if (p.coplanar.count > 6)
        c.alerts.push_back("positional-bound alert: " + std::to_string(p.coplanar.count) +
                           " nodes on a plane, nodes allow at most 6");
    if (p.twisted_cubic_flag == CubicFlag::Confirmed)
        c.alerts.push_back("positional-bound alert: 10 nodes on a twisted cubic, nodes allow at most 9");
    else if (p.twisted_cubic_flag == CubicFlag::Suspect)
        c.notes.push_back("10 nodes lie on a net of quadrics (twisted cubic suspected, not used to certify)");
    if (p.conic_flag) c.notes.push_back("7 coplanar nodes lie on a conic");
}

nlohmann::json indices(const std::vector<std::size_t>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto i : v) a.push_back(i);
    return a;
}

nlohmann::json to_json(const SubspaceMax& m) { return {{"count", m.count}, {"witness", indices(m.witness)}}; }

}  // namespace

std::string to_string(DefectPath p) {
    switch (p) {
        case DefectPath::ExplicitPoints: return "explicit-points";
        case DefectPath::Symbolic: return "symbolic";
        case DefectPath::Both: return "both";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::QFactorial: return "Q-factorial";
        case Verdict::NotQFactorial: return "not-Q-factorial";
        case Verdict::Undetermined: return "undetermined";
    }
    return "unknown";
}

bool quadric_is_smooth(const Form& q) {
    std::vector<Polynomial> partials;
    for (int i = 0; i < q.nvars(); ++i) partials.push_back(q.partial_derivative(i).poly());
    Ideal j(q.nvars(), std::move(partials));
    if (j.generators().empty()) return false;
    return is_irrelevant(j);
}

DoubleQuadricInput construct_example(const Form& f1, const Form& f2, const Form& f3, const Form& q) {
    const Form* fs[] = {&f1, &f2, &f3, &q};
    const int degrees[] = {1, 2, 3, 2};
    const char* names[] = {"f1", "f2", "f3", "Q"};
    for (int i = 0; i < 4; ++i) {
        if (fs[i]->nvars() != 5) throw DimensionError(std::string(names[i]) + " must be a form in 5 variables");
        if (fs[i]->degree() != degrees[i])
            throw DimensionError(std::string(names[i]) + " must have degree " + std::to_string(degrees[i]) +
                                 ", got " + std::to_string(fs[i]->degree()));
    }
    if (!quadric_is_smooth(q)) throw SmoothnessError("Q is singular");
    DoubleQuadricInput in{q, f2 * f2 + f1 * f3, std::nullopt, SplitFamily{f1, f2, f3}, std::nullopt};
    in.node_locus = Ideal(5, {f1.poly(), f2.poly(), f3.poly(), q.poly()});
    return in;
}

SplittingWitness verify_splitting(const DoubleQuadricInput& in) {
    if (!in.family) throw Error("input carries no split-family data");
    const SplitFamily& f = *in.family;
    if (f.f1.is_zero()) throw Error("f1 is zero");
    auto quotient = exact_quotient((in.w - f.f2 * f.f2).poly(), f.f1.poly());
    if (!quotient) throw Error("W - f2^2 is not divisible by f1");
    Form qf(*quotient, 3);
    if (qf != f.f3) throw Error("(W - f2^2) / f1 differs from f3");
    SplittingWitness s{qf, {}, false};
    const std::string h = f.f1.to_string();
    Form plus = f.f2, minus = -f.f2;
    s.divisors = {"{" + h + " = 0, y = " + plus.to_string() + "}", "{" + h + " = 0, y = " + minus.to_string() + "}"};
    // y -> -y sends y - f2 to -(y + f2), so the first component goes to the second and back.
    s.exchanged_by_involution = -plus == minus && plus != minus;
    return s;
}

Matrix cubic_evaluation_matrix(const std::vector<ProjectivePoint>& points) {
    const std::vector<Monomial> basis = monomial_basis(5, 3);
    const Domain d = points.empty() ? Domain::rationals() : points[0].domain();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != 5) throw DimensionError("points must have 5 coordinates");
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw DuplicatePointError("point " + points[i].to_string() + " is listed twice");
    }
    Matrix m(points.size(), basis.size(), d);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Scalar v = d.one();
            for (int k = 0; k < 5; ++k)
                if (basis[j][k] > 0) v *= points[i][static_cast<std::size_t>(k)].pow(static_cast<unsigned>(basis[j][k]));
            m(i, j) = v;
        }
    return m;
}

DefectCertificate defect(const DoubleQuadricInput& in, const DefectOptions& o) {
    check_degrees(in.q, in.w);
    if (!quadric_is_smooth(in.q)) throw SmoothnessError("Q is singular");
    DefectCertificate c;
    c.seed = o.seed;
    c.q = in.q.to_string();
    c.w = in.w.to_string();
    c.criterion = "a nodal double cover of a smooth quadric threefold is Q-factorial iff its defect "
                  "s - rank (conditions imposed by the nodes on cubics of P^4) is 0";
    if (in.family) c.witness = verify_splitting(in);

    std::optional<std::size_t> explicit_rank;
    if (in.nodes) {
        for (const auto& p : *in.nodes) {
            NodeReport r = verify_node(in.q, in.w, p);
            if (r.verdict != NodeVerdict::Node)
                throw NonNodalError("supplied point " + p.to_string() + " is " + to_string(r.verdict));
        }
        c.nodes = *in.nodes;
        explicit_rank = rank(cubic_evaluation_matrix(c.nodes));
        c.explicit_defect = c.nodes.size() - *explicit_rank;
        if (!c.nodes.empty()) {
            PositionOptions po;
            po.exact_twisted_cubic = o.exact_twisted_cubic;
            po.seed = o.seed;
            c.position = ek_check(c.nodes, po);
            positional_alerts(c);
        }
    }

    std::optional<SymbolicDefect> sym;
    if (o.symbolic) sym = symbolic_defect(in, o, c.notes);
    if (sym) {
        c.symbolic_defect = sym->s - sym->rank3;
        c.count_domain = sym->domain;
        c.primes = sym->primes;
    }

    if (explicit_rank && sym) {
        if (sym->s != c.nodes.size())
            throw Error("the node list has " + std::to_string(c.nodes.size()) + " points but S has " +
                        std::to_string(sym->s) + " singular points");
        if (*c.explicit_defect != *c.symbolic_defect) {
            if (!sym->probabilistic) throw Error("explicit and symbolic defects disagree");
            c.notes.push_back("the prime-field symbolic defect differs from the exact explicit defect");
        }
        c.path = DefectPath::Both;
        c.s = c.nodes.size();
        c.rank3 = *explicit_rank;
        // A positive defect on verified nodes is exact; completeness of the list is what the count adds.
        c.probabilistic = sym->probabilistic && *c.explicit_defect == 0;
    } else if (explicit_rank) {
        c.path = DefectPath::ExplicitPoints;
        c.s = c.nodes.size();
        c.rank3 = *explicit_rank;
        if (*c.explicit_defect == 0) c.notes.push_back("assumes the supplied node list is complete");
    } else if (sym) {
        c.path = DefectPath::Symbolic;
        c.s = sym->s;
        c.rank3 = sym->rank3;
        c.probabilistic = sym->probabilistic;
    } else {
        c.verdict = Verdict::Undetermined;
        return c;
    }
    c.defect = c.s - c.rank3;
    c.verdict = c.defect == 0 ? Verdict::QFactorial : Verdict::NotQFactorial;
    if (c.s <= 11 && c.defect > 0)
        c.alerts.push_back("positional-bound alert: at most 11 nodes but the defect is positive");

    if (in.node_locus) {
        std::mt19937_64 rng(o.seed);
        try {
            std::vector<Polynomial> gens;
            const Domain d = o.domain ? *o.domain : *in.q.poly().domain();
            for (const auto& g : in.node_locus->generators()) gens.push_back(g.to_domain(d));
            c.family_locus_length = projective_zero_dim_locus(Ideal(5, gens), rng, o.groebner).length;
        } catch (const Error& e) {
            c.notes.push_back(std::string("family node locus not computed: ") + e.what());
        }
    }
    return c;
}

std::string exact_string(const Scalar& c) {
    if (!c.is_rational()) return c.to_string();
    const mpq_class& q = c.rational();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

nlohmann::json to_json(const ProjectivePoint& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : p.coords()) a.push_back(exact_string(x));
    return a;
}

nlohmann::json to_json(const PositionReport& r) {
    nlohmann::json j;
    j["ek_pass"] = r.ek_pass;
    if (r.ek_witness) {
        nlohmann::json eq = nlohmann::json::array();
        for (const auto& f : r.ek_witness->equations) eq.push_back(f.to_string());
        j["ek_witness"] = {{"k", r.ek_witness->k}, {"points", indices(r.ek_witness->points)}, {"equations", eq}};
    } else {
        j["ek_witness"] = nullptr;
    }
    j["collinear"] = to_json(r.collinear);
    j["coplanar"] = to_json(r.coplanar);
    j["hyperplane"] = to_json(r.hyperplane);
    j["conic_flag"] = r.conic_flag;
    j["conic_witness"] = indices(r.conic_witness);
    j["twisted_cubic"] = to_string(r.twisted_cubic_flag);
    j["twisted_cubic_witness"] = indices(r.twisted_cubic_witness);
    return j;
}

nlohmann::json to_json(const NodeReport& r) {
    return {{"point", to_json(r.point)},
            {"on_S", r.on_S},
            {"jacobian_rank", r.jacobian_rank},
            {"hessian_rank_local", r.hessian_rank_local},
            {"verdict", to_string(r.verdict)}};
}

nlohmann::json to_json(const DefectCertificate& c) {
    nlohmann::json j;
    j["s"] = c.s;
    j["rank3"] = c.rank3;
    j["defect"] = c.defect;
    j["path"] = to_string(c.path);
    j["explicit_defect"] = c.explicit_defect ? nlohmann::json(*c.explicit_defect) : nlohmann::json(nullptr);
    j["symbolic_defect"] = c.symbolic_defect ? nlohmann::json(*c.symbolic_defect) : nlohmann::json(nullptr);
    j["position"] = c.position ? to_json(*c.position) : nlohmann::json(nullptr);
    j["verdict"] = to_string(c.verdict);
    if (c.witness) {
        j["witness"] = {{"identity", "W - f2^2 = f1 * f3"},
                        {"quotient", c.witness->quotient.to_string()},
                        {"divisors", {c.witness->divisors[0], c.witness->divisors[1]}},
                        {"exchanged_by_involution", c.witness->exchanged_by_involution}};
    } else {
        j["witness"] = nullptr;
    }
    j["probabilistic"] = c.probabilistic;
    j["count_domain"] = c.count_domain;
    j["primes"] = c.primes;
    j["seed"] = c.seed;
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& p : c.nodes) nodes.push_back(to_json(p));
    j["nodes"] = nodes;
    j["family_locus_length"] = c.family_locus_length ? nlohmann::json(*c.family_locus_length) : nlohmann::json(nullptr);
    j["alerts"] = c.alerts;
    j["notes"] = c.notes;
    j["criterion"] = c.criterion;
    j["input"] = {{"Q", c.q}, {"W", c.w}};
    return j;
}

}  // namespace dquad
