#include "doctest.h"

#include "dquad/certifier.hpp"
#include "dquad/errors.hpp"
#include "support.hpp"

#include <algorithm>

using namespace dquad;
using namespace dquad::testing;

namespace {
const Domain QQ = Domain::rationals();
const Domain FP = Domain::prime_field(2305843009213693951ull);

ProjectivePoint pt(std::initializer_list<long long> v) {
    std::vector<Scalar> c;
    for (auto x : v) c.push_back(QQ.from_int(x));
    return ProjectivePoint(c);
}

DoubleQuadricInput family_input(bool with_nodes = true) {
    auto inst = rational_family_instance();
    DoubleQuadricInput in = construct_example(inst.f1, inst.f2, inst.f3, inst.q);
    if (with_nodes) in.nodes = inst.nodes;
    return in;
}

/// Independent oracle: integer rows (coordinates cleared of denominators) and Bareiss elimination.
std::size_t bareiss_cubic_rank(const std::vector<ProjectivePoint>& pts) {
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& p : pts) {
        mpz_class l = 1;
        for (const auto& x : p.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.rational().get_den_mpz_t());
        std::vector<mpz_class> x;
        for (const auto& c : p.coords()) x.push_back(mpz_class(c.rational() * l));
        std::vector<mpz_class> row;
        for (int a = 0; a < 5; ++a)
            for (int b = a; b < 5; ++b)
                for (int c = b; c < 5; ++c) row.push_back(x[a] * x[b] * x[c]);
        rows.push_back(std::move(row));
    }
    return bareiss_rank(std::move(rows));
}

std::vector<ProjectivePoint> random_points(std::mt19937_64& rng, std::size_t n, int range = 6) {
    std::vector<ProjectivePoint> out;
    while (out.size() < n) {
        auto v = random_point(rng, 5, QQ, range);
        if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
        ProjectivePoint p(v);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("cubic evaluation matrix") {
    Matrix one = cubic_evaluation_matrix({pt({1, 2, 3, 4, 5})});
    CHECK(one.rows() == 1);
    CHECK(one.cols() == 35);
    CHECK(rank(one) == 1);

    std::mt19937_64 rng(3);
    auto eleven = random_points(rng, 11);
    CHECK(rank(cubic_evaluation_matrix(eleven)) == 11);
    CHECK(bareiss_cubic_rank(eleven) == 11);

    auto inst = rational_family_instance();
    Matrix m = cubic_evaluation_matrix(inst.nodes);
    CHECK(m.rows() == 12);
    CHECK(rank(m) == 11);
    CHECK(bareiss_cubic_rank(inst.nodes) == 11);

    CHECK_THROWS_AS(cubic_evaluation_matrix({pt({1, 2, 0, 0, 0}), pt({-2, -4, 0, 0, 0})}), DuplicatePointError);
}

TEST_CASE("quadric smoothness") {
    CHECK(quadric_is_smooth(standard_quadric()));
    CHECK(quadric_is_smooth(parse_form("x0^2 + x1^2 + x2^2 + x3^2 + x4^2", 5)));
    CHECK_FALSE(quadric_is_smooth(parse_form("x0*x3 - x1*x2", 5)));
    CHECK_FALSE(quadric_is_smooth(parse_form("x0^2", 5)));
}

TEST_CASE("constructing the split family") {
    auto inst = rational_family_instance();
    DoubleQuadricInput in = construct_example(inst.f1, inst.f2, inst.f3, inst.q);
    CHECK(in.w == inst.f2 * inst.f2 + inst.f1 * inst.f3);
    REQUIRE(in.family);
    REQUIRE(in.node_locus);
    std::mt19937_64 rng(1);
    CHECK(projective_zero_dim_locus(*in.node_locus, rng).length == 12);
    for (const auto& p : inst.nodes) CHECK(verify_node(in.q, in.w, p).verdict == NodeVerdict::Node);

    CHECK_THROWS_AS(construct_example(inst.f2, inst.f2, inst.f3, inst.q), DimensionError);
    CHECK_THROWS_AS(construct_example(inst.f1, inst.f2, inst.f2, inst.q), DimensionError);
    CHECK_THROWS_AS(construct_example(inst.f1, inst.f2, inst.f3, parse_form("x0*x3 - x1*x2", 5)), SmoothnessError);
}

TEST_CASE("splitting witness") {
    DoubleQuadricInput in = family_input(false);
    SplittingWitness s = verify_splitting(in);
    CHECK(s.quotient == in.family->f3);
    CHECK(s.exchanged_by_involution);
    CHECK(s.divisors[0] == "{x4 = 0, y = " + in.family->f2.to_string() + "}");
    CHECK(s.divisors[1] == "{x4 = 0, y = " + (-in.family->f2).to_string() + "}");

    // A quartic outside the family.
    DoubleQuadricInput other = in;
    other.w = in.w + parse_form("x0^4", 5);
    CHECK_THROWS_AS(verify_splitting(other), Error);
    // Divisible by f1 but with the wrong quotient.
    other.w = in.w + in.family->f1 * parse_form("x0^3", 5);
    CHECK_THROWS_AS(verify_splitting(other), Error);
    DoubleQuadricInput untagged{in.q, in.w, std::nullopt, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(verify_splitting(untagged), Error);
}

TEST_CASE("defect of the rational twelve-node family instance") {
    DefectCertificate c = defect(family_input());
    CHECK(c.s == 12);
    CHECK(c.rank3 == 11);
    CHECK(c.defect == 1);
    CHECK(c.path == DefectPath::Both);
    CHECK(c.explicit_defect == 1u);
    CHECK(c.symbolic_defect == 1u);
    CHECK(c.verdict == Verdict::NotQFactorial);
    CHECK_FALSE(c.probabilistic);
    CHECK(c.count_domain == "Q");
    CHECK(c.family_locus_length == 12u);
    REQUIRE(c.witness);
    CHECK(c.witness->quotient == rational_family_instance().f3);
    REQUIRE(c.position);
    CHECK_FALSE(c.position->ek_pass);
    REQUIRE(c.position->ek_witness);
    CHECK(c.position->ek_witness->k == 3);
    CHECK(c.position->ek_witness->equations.size() == 1);
    CHECK(c.position->ek_witness->equations[0] == rational_family_instance().f1);
    CHECK(c.position->collinear.count == 3);
    CHECK(c.position->coplanar.count == 6);
    CHECK(c.alerts.empty());

    // Symbolic path only.
    DefectCertificate sym = defect(family_input(false));
    CHECK(sym.path == DefectPath::Symbolic);
    CHECK(sym.defect == 1);
    CHECK(sym.verdict == Verdict::NotQFactorial);
    CHECK_FALSE(sym.position);

    // Explicit path only.
    DefectOptions no_sym;
    no_sym.symbolic = false;
    DefectCertificate ex = defect(family_input(), no_sym);
    CHECK(ex.path == DefectPath::ExplicitPoints);
    CHECK(ex.defect == 1);
    CHECK(ex.verdict == Verdict::NotQFactorial);

    // A proper subset of the nodes is detected as incomplete by the symbolic count.
    DoubleQuadricInput partial = family_input();
    partial.nodes->pop_back();
    CHECK_THROWS_AS(defect(partial), Error);
    // Any eleven of the twelve impose independent conditions.
    CHECK(defect(partial, no_sym).defect == 0);
}

TEST_CASE("smooth branch surface") {
    std::mt19937_64 rng(5);
    Form w = random_form(rng, 5, 4, QQ, 0.3);
    DoubleQuadricInput in{standard_quadric(FP), w.to_domain(FP), std::nullopt, std::nullopt, std::nullopt};
    DefectCertificate c = defect(in);
    CHECK(c.s == 0);
    CHECK(c.defect == 0);
    CHECK(c.verdict == Verdict::QFactorial);
    CHECK(c.probabilistic);

    DefectOptions no_sym;
    no_sym.symbolic = false;
    DoubleQuadricInput empty{standard_quadric(), w, std::vector<ProjectivePoint>{}, std::nullopt, std::nullopt};
    DefectCertificate e = defect(empty, no_sym);
    CHECK(e.s == 0);
    CHECK(e.verdict == Verdict::QFactorial);
    DoubleQuadricInput nothing{standard_quadric(), w, std::nullopt, std::nullopt, std::nullopt};
    CHECK(defect(nothing, no_sym).verdict == Verdict::Undetermined);
}

TEST_CASE("few nodes in general position give defect zero on both paths") {
    std::mt19937_64 rng(7);
    Form q = standard_quadric();
    for (std::size_t k : {1u, 3u, 6u}) {
        auto pts = distinct_points_on_quadric(rng, k);
        Form w = quartic_singular_at(rng, q, pts);
        DoubleQuadricInput in{q, w, pts, std::nullopt, std::nullopt};
        DefectCertificate c = defect(in);
        CHECK(c.s == k);
        CHECK(c.path == DefectPath::Both);
        CHECK(c.explicit_defect == c.symbolic_defect);
        CHECK(c.defect == 0);
        CHECK(c.verdict == Verdict::QFactorial);
        CHECK(c.alerts.empty());
    }
}

TEST_CASE("non-nodal inputs are refused") {
    auto inst = rational_family_instance();
    Form quad = parse_form("x0^2 - x1*x3 + 2*x2^2 + x3*x4", 5);
    DoubleQuadricInput degenerate = construct_example(inst.f1, inst.f2, inst.f1 * quad, inst.q);
    CHECK_THROWS_AS(defect(degenerate), NonNodalError);
    degenerate.nodes = std::vector<ProjectivePoint>{pt({5, 1, 5, 1, 0})};
    CHECK_THROWS_AS(defect(degenerate), NonNodalError);

    // A listed point that is not singular on S.
    DoubleQuadricInput in = family_input();
    in.nodes->push_back(pt({1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(defect(in), NonNodalError);

    // An isolated cusp: the singular scheme is zero-dimensional but not reduced.
    Form a2 = parse_form("x0^3*x3 + x0^2*(x1^2 + x2^2 - x1*x2 + x4^2) + x0*x4^3 + x3^4", 5);
    DoubleQuadricInput cusp{standard_quadric(FP), a2.to_domain(FP), std::nullopt, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(defect(cusp), NonNodalError);

    DoubleQuadricInput singular_q{parse_form("x0*x3 - x1*x2", 5), a2, std::nullopt, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(defect(singular_q), SmoothnessError);
    DoubleQuadricInput wrong_degree{standard_quadric(), standard_quadric(), std::nullopt, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(defect(wrong_degree), DimensionError);
}

TEST_CASE("configurations passing the positional check impose independent conditions") {
    std::mt19937_64 rng(11);
    int tested = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t s = 2 + rng() % 12;
        auto pts = random_points(rng, s, 2);
        if (!ek_check(pts).ek_pass) continue;
        ++tested;
        CHECK(rank(cubic_evaluation_matrix(pts)) == s);
    }
    CHECK(tested >= 30);
}

TEST_CASE("defect is invariant under coordinate changes") {
    std::mt19937_64 rng(13);
    DefectOptions no_sym;
    no_sym.symbolic = false;
    DoubleQuadricInput base = family_input();
    for (int trial = 0; trial < 3; ++trial) {
        Matrix m = random_invertible(rng, 5, QQ);
        Matrix inv = invert(m);
        DoubleQuadricInput t{base.q.substitute_linear(m), base.w.substitute_linear(m), std::vector<ProjectivePoint>{},
                             std::nullopt, std::nullopt};
        for (const auto& p : *base.nodes) t.nodes->push_back(ProjectivePoint(inv.apply(p.coords())));
        DefectCertificate c = defect(t, no_sym);
        CHECK(c.s == 12);
        CHECK(c.defect == 1);
        CHECK(c.position->hyperplane.count == 12);
    }
}

TEST_CASE("certificate serialization is canonical") {
    DefectOptions no_sym;
    no_sym.symbolic = false;
    DefectCertificate a = defect(family_input(), no_sym);
    DefectCertificate b = defect(family_input(), no_sym);
    std::string ja = to_json(a).dump(2), jb = to_json(b).dump(2);
    CHECK(ja == jb);
    auto j = nlohmann::json::parse(ja);
    CHECK(j["verdict"] == "not-Q-factorial");
    CHECK(j["defect"] == 1);
    CHECK(j["s"] == 12);
    CHECK(j["path"] == "explicit-points");
    CHECK(j["nodes"][0][0] == "1/1");
    CHECK(j["nodes"][0][1] == "1/2");
    CHECK(j["nodes"][0][4] == "0/1");
    CHECK(j["position"]["ek_witness"]["k"] == 3);
    CHECK(j["position"]["ek_witness"]["equations"][0] == "x4");
    CHECK(j["witness"]["quotient"] == rational_family_instance().f3.to_string());
    // Keys come out sorted.
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(exact_string(QQ.parse("-3/6")) == "-1/2");
    CHECK(exact_string(FP.from_int(-1)) == "2305843009213693950");
}
