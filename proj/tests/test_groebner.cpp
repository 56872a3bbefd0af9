#include "doctest.h"

#include "dquad/errors.hpp"
#include "dquad/groebner.hpp"
#include "dquad/parser.hpp"
#include "support.hpp"

using namespace dquad;

namespace {
const Domain QQ = Domain::rationals();

std::vector<std::string> xyz() { return {"x", "y", "z"}; }

Polynomial P(const std::string& s, int n = 2, const Domain& d = QQ, MonomialOrder o = MonomialOrder::grevlex()) {
    auto names = xyz();
    names.resize(static_cast<std::size_t>(n));
    return parse_polynomial(s, names, d, o);
}

Ideal I(std::initializer_list<const char*> gens, int n = 2, const Domain& d = QQ) {
    std::vector<Polynomial> v;
    for (auto g : gens) v.push_back(P(g, n, d));
    return Ideal(n, std::move(v), Ambient::AffineChart);
}

GroebnerBasis checked_gb(const Ideal& ideal, MonomialOrder order = MonomialOrder::grevlex()) {
    GroebnerBasis gb = buchberger(ideal, order);
    CHECK(satisfies_buchberger_criterion(gb));
    for (const auto& g : ideal.generators()) CHECK(normal_form(g.with_order(order), gb).is_zero());
    for (const auto& g : gb.elements()) CHECK(g.lc().is_one());
    auto lms = gb.leading_monomials();
    for (std::size_t a = 0; a < lms.size(); ++a)
        for (std::size_t b = 0; b < lms.size(); ++b)
            if (a != b) CHECK_FALSE(lms[a].divides(lms[b]));
    return gb;
}

bool same_basis(const GroebnerBasis& gb, std::vector<Polynomial> expected) {
    if (gb.elements().size() != expected.size()) return false;
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& g : gb.elements())
            if (g == e) found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("monomial ideals are already reduced") {
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
        auto gb = checked_gb(I({"x", "y"}, 3), order);
        CHECK(same_basis(gb, {P("x", 3, QQ, order), P("y", 3, QQ, order)}));
        auto gb2 = checked_gb(I({"x^2", "x*y"}), order);
        CHECK(same_basis(gb2, {P("x^2", 2, QQ, order), P("x*y", 2, QQ, order)}));
    }
}

TEST_CASE("crafted bases agree with hand computation") {
    // x^2 = y and xy = 1: S-pair gives y^2 - x, then everything reduces.
    auto gb = checked_gb(I({"x^2 - y", "x*y - 1"}));
    CHECK(same_basis(gb, {P("x^2 - y"), P("x*y - 1"), P("y^2 - x")}));
    CHECK(zero_dim_degree(gb) == 3);

    auto lex = MonomialOrder::lex();
    auto gbl = checked_gb(I({"x^2 - y", "x*y - 1"}), lex);
    CHECK(same_basis(gbl, {P("x - y^2", 2, QQ, lex), P("y^3 - 1", 2, QQ, lex)}));
    CHECK(zero_dim_degree(gbl) == 3);

    // (x^2 + y^2, xy): the S-pair contributes y^3; intersection multiplicity 4 at the origin.
    auto gb3 = checked_gb(I({"x^2 + y^2", "x*y"}));
    CHECK(same_basis(gb3, {P("x^2 + y^2"), P("x*y"), P("y^3")}));
    CHECK(zero_dim_degree(gb3) == 4);

    // Non-monic, redundant input is normalized.
    auto gb4 = checked_gb(I({"2*x - 4*y", "3*x - 6*y", "y^2 - 1"}));
    CHECK(same_basis(gb4, {P("x - 2*y"), P("y^2 - 1")}));
}

TEST_CASE("unit ideal") {
    auto gb = checked_gb(I({"x*y - 1", "x"}));
    CHECK(gb.is_unit());
    CHECK(gb.elements().size() == 1);
    CHECK(zero_dim_degree(gb) == 0);
    CHECK(ideal_dimension(gb) == -1);
}

TEST_CASE("normal form properties") {
    std::mt19937_64 rng(31);
    Ideal ideal = I({"x^2 + y*z - 1", "x*y - z^2", "y^3 - x + z"}, 3);
    auto gb = checked_gb(ideal);
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial f = testing::random_form(rng, 3, 1 + trial % 3, QQ).poly();
        Polynomial h = testing::random_form(rng, 3, trial % 4, QQ).poly();
        const Polynomial& g = ideal.generators()[static_cast<std::size_t>(trial) % 3];
        Polynomial nf = normal_form(h, gb);
        CHECK(normal_form(nf, gb) == nf);
        CHECK(normal_form(f * g + h, gb) == nf);
        // Remainders only contain standard monomials.
        for (const auto& t : nf.terms())
            for (const auto& m : gb.leading_monomials()) CHECK_FALSE(m.divides(t.mono));
    }
    CHECK_THROWS_AS(normal_form(P("x", 2), gb), DimensionError);
    CHECK_THROWS_AS(normal_form(P("x", 3, QQ, MonomialOrder::lex()), gb), DimensionError);
}

TEST_CASE("zero-dimensional degree oracles") {
    CHECK(zero_dim_degree(checked_gb(I({"x", "y"}))) == 1);
    CHECK(zero_dim_degree(checked_gb(I({"x^2", "y"}))) == 2);
    // Four reduced points (+-1, +-1).
    CHECK(zero_dim_degree(checked_gb(I({"x^2 - 1", "y^2 - 1"}))) == 4);
    // Bezout: two generic conics meet in 4 points.
    CHECK(zero_dim_degree(checked_gb(I({"x^2 + 3*x*y - y^2 + x - 2", "2*x^2 - x*y + y^2 - y - 1"}))) == 4);
    CHECK_THROWS_AS(zero_dim_degree(checked_gb(I({"x*y"}))), NotZeroDimensionalError);
    CHECK_THROWS_AS(zero_dim_degree(checked_gb(I({"x^2", "x*y"}))), NotZeroDimensionalError);
}

TEST_CASE("saturation") {
    Ideal total = saturate(I({"x^2*y", "x*y^2"}), P("x*y"));
    CHECK(checked_gb(total).is_unit());

    // (x^2, xy) = (x) cap (x^2, y); every component lies on x = 0, while y removes only the
    // embedded point.
    CHECK(checked_gb(saturate(I({"x^2", "x*y"}), P("x"))).is_unit());
    CHECK(same_basis(checked_gb(saturate(I({"x^2", "x*y"}), P("y"))), {P("x")}));

    // A double point at the origin plus a reduced point at (0, 1): saturating by y removes
    // the origin, saturating by y - 1 removes the other point.
    Ideal both = I({"x^2", "x*y", "y^2 - y"});
    CHECK(zero_dim_degree(checked_gb(both)) == 3);
    auto by_y = checked_gb(saturate(both, P("y")));
    CHECK(same_basis(by_y, {P("x"), P("y - 1")}));
    CHECK(zero_dim_degree(by_y) == 1);
    CHECK(zero_dim_degree(checked_gb(saturate(both, P("y - 1")))) == 2);

    // Saturation by a unit changes nothing.
    CHECK(same_basis(checked_gb(saturate(both, P("3"))), checked_gb(both).elements()));
    CHECK_THROWS_AS(saturate(both, Polynomial(2)), DomainError);
}

TEST_CASE("ideal dimension") {
    CHECK(ideal_dimension(checked_gb(I({"x"}, 3))) == 2);
    CHECK(ideal_dimension(buchberger(Ideal(4, {}, Ambient::AffineChart))) == 4);
    // Twisted cubic in the chart x0 = 1 of P^3, coordinates (x1, x2, x3) -> (x, y, z).
    auto cubic = checked_gb(I({"y - x^2", "x*z - y^2", "z - x*y"}, 3));
    CHECK(ideal_dimension(cubic) == 1);
    // A generic plane meets it in 3 points.
    auto slice = checked_gb(I({"y - x^2", "x*z - y^2", "z - x*y", "x + 2*y - 3*z - 5"}, 3));
    CHECK(zero_dim_degree(slice) == 3);
    CHECK(ideal_dimension(checked_gb(I({"x", "y"}))) == 0);
}

TEST_CASE("graded component dimension") {
    auto x0 = parse_form("x0", 5).poly();
    CHECK(graded_component_dim(Ideal(5, {x0}), 3) == 15);
    CHECK(graded_component_dim(Ideal(5, {Polynomial::constant(5, QQ.one())}), 3) == 35);
    CHECK(graded_component_dim(Ideal(5, {}), 3) == 0);
    // A point imposes one condition.
    auto pt = Ideal(5, {parse_form("x1", 5).poly(), parse_form("x2", 5).poly(), parse_form("x3", 5).poly(),
                        parse_form("x4", 5).poly()});
    CHECK(graded_component_dim(pt, 3) == 34);
    CHECK_THROWS_AS(graded_component_dim(Ideal(2, {P("x + 1")}), 3), DimensionError);
}

TEST_CASE("invariants agree across orders and over F_p") {
    std::vector<Ideal> cases = {
        I({"x^2 - y", "x*y - 1"}),
        I({"x^2 + y^2", "x*y"}),
        I({"x^2", "x*y", "y^2 - y"}),
        I({"x^2 + y*z - 1", "x*y - z^2", "y^3 - x + z"}, 3),
        I({"x^2 - 2*y*z + 3", "y^2 - x + z^2", "z^3 - x*y - 1"}, 3),
    };
    std::mt19937_64 prng(77);
    for (const auto& c : cases) {
        auto g = checked_gb(c);
        auto l = checked_gb(c, MonomialOrder::lex());
        CHECK(zero_dim_degree(g) == zero_dim_degree(l));
        CHECK(ideal_dimension(g) == ideal_dimension(l));
        Domain p = Domain::random_prime_field(prng);
        std::vector<Polynomial> red;
        for (const auto& gen : c.generators()) red.push_back(gen.to_domain(p));
        auto gp = checked_gb(Ideal(c.nvars(), red, Ambient::AffineChart));
        CHECK(zero_dim_degree(gp) == zero_dim_degree(g));
    }
}

TEST_CASE("resource limits are reported") {
    GroebnerOptions tiny;
    tiny.max_pairs = 1;
    try {
        buchberger(I({"x^2 + y*z - 1", "x*y - z^2", "y^3 - x + z"}, 3), MonomialOrder::grevlex(), tiny);
        FAIL("expected a resource limit");
    } catch (const ResourceLimitError& e) {
        CHECK(std::string(e.what()).find("--domain fp") != std::string::npos);
    }
}

TEST_CASE("irrelevant ideals") {
    std::vector<Polynomial> vars;
    for (int i = 0; i < 5; ++i) vars.push_back(Polynomial::variable(5, i, QQ));
    CHECK(is_irrelevant(Ideal(5, vars)));
    vars.pop_back();
    CHECK_FALSE(is_irrelevant(Ideal(5, vars)));
    // Partials of a smooth quadric.
    Form q = parse_form("x0*x3 - x1*x2 + x4^2", 5);
    std::vector<Polynomial> d;
    for (int i = 0; i < 5; ++i) d.push_back(q.partial_derivative(i).poly());
    CHECK(is_irrelevant(Ideal(5, d)));
    // A cone has a singular vertex.
    Form cone = parse_form("x0*x3 - x1*x2", 5);
    std::vector<Polynomial> dc;
    for (int i = 0; i < 5; ++i) dc.push_back(cone.partial_derivative(i).poly());
    CHECK_FALSE(is_irrelevant(Ideal(5, dc)));
}

TEST_CASE("projective loci through affine charts") {
    auto H = [](const char* s, int n) { return parse_form(s, n).poly(); };
    // The three coordinate points of P^2.
    Ideal pts(3, {H("x0*x1", 3), H("x1*x2", 3), H("x0*x2", 3)});
    std::mt19937_64 rng(3);
    ChartedLocus l = projective_zero_dim_locus(pts, rng);
    CHECK(l.length == 3);
    CHECK_FALSE(l.meets_infinity);
    CHECK(l.saturated.is_homogeneous());
    CHECK(graded_component_dim(l.saturated, 2) == 3);
    CHECK(graded_component_dim(l.saturated, 1) == 0);

    // The chart x0 = 1 sees only (1:0:0) and must report the rest at infinity.
    std::vector<Scalar> zero(2, QQ.zero());
    ChartedLocus plain = chart_locus(pts, zero);
    CHECK(plain.length == 1);
    CHECK(plain.meets_infinity);

    // A scheme entirely at infinity has an empty affine part.
    ChartedLocus away = chart_locus(Ideal(3, {H("x0", 3), H("x1", 3)}), zero);
    CHECK(away.dimension == -1);
    CHECK(away.meets_infinity);

    // Twisted cubic in P^3.
    Ideal cubic(4, {H("x1^2 - x0*x2", 4), H("x2^2 - x1*x3", 4), H("x0*x3 - x1*x2", 4)});
    std::vector<Scalar> c{QQ.from_int(1), QQ.from_int(-2), QQ.from_int(3)};
    CHECK(chart_locus(cubic, c).dimension == 1);
    CHECK_THROWS_AS(projective_zero_dim_locus(cubic, rng), NotZeroDimensionalError);
}

TEST_CASE("distinct points of a zero-dimensional locus") {
    auto H = [](const char* s, int n) { return parse_form(s, n).poly(); };
    std::mt19937_64 rng(5);
    std::vector<Scalar> zero(2, QQ.zero());
    // Four reduced points (1 : +-1 : +-1).
    ChartedLocus four = chart_locus(Ideal(3, {H("x1^2 - x0^2", 3), H("x2^2 - x0^2", 3)}), zero);
    CHECK(four.length == 4);
    CHECK(distinct_point_count(four, rng) == 4);
    // Two double points.
    ChartedLocus fat = chart_locus(Ideal(3, {H("x1^2", 3), H("x2^2*(x2 - x0)", 3), H("x1*(x2 - x0)", 3)}), zero);
    CHECK(fat.length == 4);
    CHECK(distinct_point_count(fat, rng) == 2);
    // Points over an extension: x1^2 + x0^2 = 0, x2 = 0 gives two conjugate points.
    ChartedLocus conj = chart_locus(Ideal(3, {H("x1^2 + x0^2", 3), H("x2", 3)}), zero);
    CHECK(distinct_point_count(conj, rng) == 2);
    ChartedLocus away = chart_locus(Ideal(3, {H("x0", 3), H("x1", 3)}), zero);
    CHECK(distinct_point_count(away, rng) == 0);
}
