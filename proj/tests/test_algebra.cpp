#include "doctest.h"

#include "dquad/errors.hpp"
#include "dquad/form.hpp"
#include "dquad/parser.hpp"
#include "support.hpp"

using namespace dquad;
using dquad::testing::random_form;
using dquad::testing::random_invertible;
using dquad::testing::random_point;
using dquad::testing::random_rational;

namespace {
const Domain QQ = Domain::rationals();
const Domain FP = Domain::prime_field(2305843009213693951ull);  // 2^61 - 1

std::vector<Scalar> ints(std::initializer_list<long long> v, const Domain& d = QQ) {
    std::vector<Scalar> out;
    for (auto x : v) out.push_back(d.from_int(x));
    return out;
}
}  // namespace

TEST_CASE("rationals stay canonical") {
    Scalar a = QQ.parse("6/-4");
    CHECK(a.to_string() == "-3/2");
    Scalar b = QQ.parse("2/4") + QQ.parse("1/4");
    CHECK(b.rational().get_den() == 4);
    CHECK(b.rational().get_num() == 3);
    CHECK((QQ.parse("-1/3") * QQ.from_int(-3)).is_one());
    CHECK_THROWS_AS(QQ.parse("1/0"), DomainError);
    CHECK_THROWS_AS(QQ.parse("abc"), DomainError);
}

TEST_CASE("prime field elements are reduced into [0, p)") {
    Scalar m = FP.from_int(-1);
    CHECK(m.modp().value == FP.prime() - 1);
    CHECK((m + FP.one()).is_zero());
    Scalar half = FP.parse("1/2");
    CHECK((half * FP.from_int(2)).is_one());
    CHECK((FP.from_int(12345).inverse() * FP.from_int(12345)).is_one());
    CHECK_THROWS_AS(Domain::prime_field(101), DomainError);
    CHECK_THROWS_AS(Domain::prime_field((1ull << 61) + 1), DomainError);
    CHECK_THROWS_AS(QQ.one() + FP.one(), DomainError);
}

TEST_CASE("random primes are prime and above 2^61") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        Domain d = Domain::random_prime_field(rng);
        CHECK(d.prime() >= (1ull << 61));
        CHECK(is_probable_prime(d.prime()));
    }
    CHECK_FALSE(is_probable_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("parse_form examples") {
    Form f = parse_form("x0^2 + 2*x1*x2", 5);
    CHECK(f.degree() == 2);
    CHECK(f.terms().size() == 2);

    Form q = parse_form("x0*x3 - x1*x2 + x4^2", 5);
    CHECK(q.degree() == 2);
    CHECK(q.terms().size() == 3);

    try {
        parse_form("x0 + x1^2", 5);
        FAIL("expected inhomogeneity error");
    } catch (const InhomogeneousError& e) {
        CHECK(e.first_degree() == 1);
        CHECK(e.second_degree() == 2);
    }
}

TEST_CASE("parser diagnostics") {
    CHECK_THROWS_AS(parse_form("2x0", 5), ParseError);
    try {
        parse_form("x0 + * x1", 5);
        FAIL("expected syntax error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    try {
        parse_form("x0 + x7", 5);
        FAIL("expected unknown variable");
    } catch (const UnknownVariableError& e) {
        CHECK(e.name() == "x7");
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_form("(x0 + x1", 5), ParseError);
    CHECK_THROWS_AS(parse_form("x0^-1", 5), ParseError);
    CHECK_THROWS_AS(parse_form("x0/x1", 5), ParseError);
    CHECK(parse_form("x_0*x_3 - x_1*x_2 + x_4^2", 5) == parse_form("x0*x3-x1*x2+x4^2", 5));
    CHECK(parse_form("-x0^2", 5).terms()[0].coeff == QQ.from_int(-1));
    CHECK(parse_form("3/4*x0 - x1/2", 5).terms()[1].coeff == QQ.parse("-1/2"));
    CHECK(parse_form("(x0+x1)^2 - x0^2 - x1^2", 5) == parse_form("2*x0*x1", 5));
    Form z = parse_form("x0 - x0", 5, QQ, 3);
    CHECK(z.is_zero());
    CHECK(z.degree() == 3);
}

TEST_CASE("evaluate") {
    Form q = parse_form("x0*x3 - x1*x2 + x4^2", 5);
    CHECK(q.evaluate(ints({1, 0, 0, 0, 0})).is_zero());
    CHECK(parse_form("x0^2", 5).evaluate(ints({3, 1, 1, 1, 1})) == QQ.from_int(9));
    CHECK_THROWS_AS(q.evaluate(ints({1, 0, 0})), DimensionError);
}

TEST_CASE("homogeneity of evaluation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int deg = trial % 5;
        Form f = random_form(rng, 5, deg, QQ);
        auto p = random_point(rng, 5, QQ);
        Scalar lambda = random_rational(rng, QQ);
        if (lambda.is_zero()) lambda = QQ.from_int(2);
        std::vector<Scalar> lp;
        for (auto& c : p) lp.push_back(lambda * c);
        CHECK(f.evaluate(lp) == lambda.pow(static_cast<unsigned>(deg)) * f.evaluate(p));
    }
}

TEST_CASE("partial derivatives and the Euler identity") {
    CHECK(parse_form("x0^2", 5).partial_derivative(0) == parse_form("2*x0", 5));
    CHECK(parse_form("x0*x3 - x1*x2 + x4^2", 5).partial_derivative(4) == parse_form("2*x4", 5));
    Form c = parse_form("7", 5);
    CHECK(c.partial_derivative(2).is_zero());
    CHECK(c.partial_derivative(2).degree() == 0);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Form f = random_form(rng, 5, 4, QQ);
        Form euler = Form::zero(5, 4);
        for (int i = 0; i < 5; ++i) {
            Form xi = Form(Polynomial::variable(5, i, QQ), 1);
            euler = euler + xi * f.partial_derivative(i);
        }
        CHECK(euler == f.scaled(QQ.from_int(4)));
        CHECK(f.partial_derivative(trial % 5).degree() == 3);
    }
}

TEST_CASE("linear substitution") {
    std::mt19937_64 rng(13);
    Form f = random_form(rng, 5, 3, QQ);
    CHECK(f.substitute_linear(Matrix::identity(5, QQ)) == f);

    Matrix swap(5, 5, QQ);
    swap(0, 1) = QQ.one();
    swap(1, 0) = QQ.one();
    for (std::size_t i = 2; i < 5; ++i) swap(i, i) = QQ.one();
    CHECK(parse_form("x0", 5).substitute_linear(swap) == parse_form("x1", 5));

    for (int trial = 0; trial < 8; ++trial) {
        Form g = random_form(rng, 5, 4, QQ);
        Matrix m = random_invertible(rng, 5, QQ);
        Form h = g.substitute_linear(m);
        CHECK(h.degree() == 4);
        CHECK(h.substitute_linear(invert(m)) == g);
        // (g o M)(y) = g(M y)
        auto y = random_point(rng, 5, QQ);
        CHECK(h.evaluate(y) == g.evaluate(m.apply(y)));
    }
    Matrix sing(5, 5, QQ);
    CHECK_THROWS_AS(f.substitute_linear(sing), SingularMatrixError);
}

TEST_CASE("monomial basis sizes") {
    CHECK(monomial_basis(5, 3).size() == 35);
    CHECK(monomial_basis(4, 2).size() == 10);
    auto one = monomial_basis(5, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].is_one());
    auto b = monomial_basis(5, 3);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(MonomialOrder::grevlex().greater(b[i], b[i + 1]));
    CHECK(monomial_basis(5, 4, MonomialOrder::lex()).size() == 70);
}

TEST_CASE("ring axioms on random forms") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        Form a = random_form(rng, 5, 1, QQ), b = random_form(rng, 5, 2, QQ), c = random_form(rng, 5, 2, QQ);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(b + c == c + b);
        CHECK((b - b).is_zero());
        CHECK((a * b).degree() == 3);
    }
    CHECK_THROWS_AS(parse_form("x0", 5) + parse_form("x0^2", 5), DimensionError);
}

TEST_CASE("printing round-trips through the parser") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 25; ++trial) {
        Form f = random_form(rng, 5, trial % 5, QQ);
        CHECK(parse_form(f.to_string(), 5, QQ, f.degree()) == f);
        Form g = f.to_domain(FP);
        CHECK(parse_form(g.to_string(), 5, FP, g.degree()) == g);
    }
}

TEST_CASE("reduction mod p commutes with arithmetic") {
    std::mt19937_64 rng(16);
    std::mt19937_64 prng(99);
    for (int trial = 0; trial < 10; ++trial) {
        Domain p = Domain::random_prime_field(prng);
        Form f = random_form(rng, 5, 2, QQ), g = random_form(rng, 5, 2, QQ);
        CHECK((f * g).to_domain(p) == f.to_domain(p) * g.to_domain(p));
        CHECK((f + g).to_domain(p) == f.to_domain(p) + g.to_domain(p));
    }
}
