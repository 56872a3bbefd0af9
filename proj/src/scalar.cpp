#include "dquad/scalar.hpp"

#include "dquad/errors.hpp"

#include <ostream>

namespace dquad {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw DomainError("element not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t m) {
    mpz_class mm;
    mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return count == 0 ? 0 : out;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Domain Domain::prime_field(std::uint64_t p) {
    if (p <= (1ull << 31) || p >= (1ull << 63))
        throw DomainError("prime must lie in (2^31, 2^63): " + std::to_string(p));
    if (!is_probable_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    return Domain(Kind::PrimeField, p);
}

Domain Domain::random_prime_field(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1ull << 61, (1ull << 62) - 1);
    for (;;) {
        std::uint64_t c = dist(rng) | 1ull;
        if (is_probable_prime(c)) return Domain(Kind::PrimeField, c);
    }
}

std::string Domain::name() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(prime_);
}

Scalar Domain::zero() const { return from_int(0); }
Scalar Domain::one() const { return from_int(1); }

Scalar Domain::from_int(long long v) const {
    if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
    __int128 r = static_cast<__int128>(v) % static_cast<__int128>(prime_);
    if (r < 0) r += prime_;
    return Scalar(ModP{static_cast<std::uint64_t>(r), prime_});
}

Scalar Domain::from_rational(const mpq_class& q) const {
    Scalar s(q);
    return is_rational() ? s : s.to_domain(*this);
}

Scalar Domain::parse(const std::string& text) const {
    mpq_class q;
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || q.set_str(t, 10) != 0) throw DomainError("not a rational literal: '" + text + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
    q.canonicalize();
    return from_rational(q);
}

Domain Scalar::domain() const {
    if (is_rational()) return Domain::rationals();
    return Domain(Domain::Kind::PrimeField, std::get<ModP>(v_).modulus);
}

const mpq_class& Scalar::rational() const {
    if (!is_rational()) throw DomainError("scalar is not rational");
    return std::get<mpq_class>(v_);
}

const ModP& Scalar::modp() const {
    if (is_rational()) throw DomainError("scalar is not a field element");
    return std::get<ModP>(v_);
}

bool Scalar::is_zero() const noexcept {
    if (auto q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<ModP>(v_).value == 0;
}

bool Scalar::is_one() const noexcept {
    if (auto q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<ModP>(v_).value == 1;
}

int Scalar::sign() const noexcept {
    if (auto q = std::get_if<mpq_class>(&v_)) return sgn(*q);
    return std::get<ModP>(v_).value == 0 ? 0 : 1;
}

std::size_t Scalar::bit_size() const noexcept {
    if (auto q = std::get_if<mpq_class>(&v_))
        return mpz_sizeinbase(q->get_num_mpz_t(), 2) + mpz_sizeinbase(q->get_den_mpz_t(), 2);
    return 64;
}

void Scalar::check_same(const Scalar& o) const {
    if (v_.index() != o.v_.index() ||
        (!is_rational() && std::get<ModP>(v_).modulus != std::get<ModP>(o.v_).modulus))
        throw DomainError("mixed coefficient domains: " + domain().name() + " and " + o.domain().name());
}

Scalar Scalar::operator-() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
    const auto& m = std::get<ModP>(v_);
    return Scalar(ModP{m.value == 0 ? 0 : m.modulus - m.value, m.modulus});
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (auto q = std::get_if<mpq_class>(&v_)) {
        *q += std::get<mpq_class>(o.v_);
    } else {
        auto& m = std::get<ModP>(v_);
        std::uint64_t s = m.value + std::get<ModP>(o.v_).value;
        m.value = s >= m.modulus ? s - m.modulus : s;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (auto q = std::get_if<mpq_class>(&v_)) {
        *q -= std::get<mpq_class>(o.v_);
    } else {
        auto& m = std::get<ModP>(v_);
        std::uint64_t b = std::get<ModP>(o.v_).value;
        m.value = m.value >= b ? m.value - b : m.value + (m.modulus - b);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (auto q = std::get_if<mpq_class>(&v_)) {
        *q *= std::get<mpq_class>(o.v_);
    } else {
        auto& m = std::get<ModP>(v_);
        m.value = mulmod(m.value, std::get<ModP>(o.v_).value, m.modulus);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    if (o.is_zero()) throw DomainError("division by zero");
    if (auto q = std::get_if<mpq_class>(&v_)) {
        *q /= std::get<mpq_class>(o.v_);
    } else {
        auto& m = std::get<ModP>(v_);
        m.value = mulmod(m.value, invmod(std::get<ModP>(o.v_).value, m.modulus), m.modulus);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (auto q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
    const auto& m = std::get<ModP>(v_);
    return Scalar(ModP{invmod(m.value, m.modulus), m.modulus});
}

Scalar Scalar::pow(unsigned e) const {
    if (auto q = std::get_if<mpq_class>(&v_)) {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), q->get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), q->get_den_mpz_t(), e);
        return Scalar(r);
    }
    const auto& m = std::get<ModP>(v_);
    return Scalar(ModP{powmod(m.value, e, m.modulus), m.modulus});
}

Scalar Scalar::to_domain(const Domain& target) const {
    if (target.is_rational()) {
        if (!is_rational()) throw DomainError("cannot lift a field element to Q");
        return *this;
    }
    if (!is_rational()) {
        if (std::get<ModP>(v_).modulus != target.prime())
            throw DomainError("cannot move between distinct prime fields");
        return *this;
    }
    const auto& q = std::get<mpq_class>(v_);
    std::uint64_t p = target.prime();
    std::uint64_t num = mpz_mod_u64(q.get_num(), p);
    std::uint64_t den = mpz_mod_u64(q.get_den(), p);
    if (den == 0) throw DomainError("denominator " + q.get_den().get_str() + " vanishes modulo " + std::to_string(p));
    return Scalar(ModP{mulmod(num, invmod(den, p), p), p});
}

std::string Scalar::to_string() const {
    if (auto q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<ModP>(v_).value);
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (auto q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
    return std::get<ModP>(a.v_).value == std::get<ModP>(b.v_).value;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dquad
