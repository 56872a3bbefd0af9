#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <variant>

namespace dquad {

class Scalar;

/// Coefficient domain: exact rationals or a prime field F_p with 2^31 < p < 2^63.
class Domain {
public:
    enum class Kind { Rational, PrimeField };

    static Domain rationals() { return Domain(Kind::Rational, 0); }
    /// Throws DomainError unless `p` is a prime in (2^31, 2^63).
    static Domain prime_field(std::uint64_t p);
    /// A prime drawn uniformly from [2^61, 2^62) with the given generator.
    static Domain random_prime_field(std::mt19937_64& rng);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::Rational; }
    std::uint64_t prime() const noexcept { return prime_; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_rational(const mpq_class& q) const;
    /// Accepts "n" or "n/d" with optional sign.
    Scalar parse(const std::string& text) const;

    bool operator==(const Domain& o) const noexcept { return kind_ == o.kind_ && prime_ == o.prime_; }
    bool operator!=(const Domain& o) const noexcept { return !(*this == o); }

private:
    friend class Scalar;
    Domain(Kind k, std::uint64_t p) : kind_(k), prime_(p) {}
    Kind kind_;
    std::uint64_t prime_;
};

bool is_probable_prime(std::uint64_t n);

/// Element of F_p, always reduced into [0, p).
struct ModP {
    std::uint64_t value;
    std::uint64_t modulus;
};

/// Exact coefficient. Arithmetic between scalars of different domains throws DomainError.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    explicit Scalar(const mpq_class& q) : v_(q) {}
    explicit Scalar(ModP m) : v_(m) {}

    Domain domain() const;
    bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
    const mpq_class& rational() const;
    const ModP& modp() const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// Rational sign; field elements report 0 or 1.
    int sign() const noexcept;
    /// Number of bits in numerator plus denominator; 64 for field elements.
    std::size_t bit_size() const noexcept;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    /// Image in `target`. Rational -> F_p fails when p divides the denominator.
    Scalar to_domain(const Domain& target) const;

    /// "n", "n/d" or the field representative.
    std::string to_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void check_same(const Scalar& o) const;
    std::variant<mpq_class, ModP> v_;
};

inline Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
inline Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
inline Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
inline Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dquad
