#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dquad {

inline constexpr int kMaxVars = 32;

/// Exponent vector with cached total degree and a support bitmask for fast divisibility rejection.
/// Unused trailing slots are zero, so comparisons do not need the variable count.
class Monomial {
public:
    Monomial() = default;
    static Monomial from_exponents(std::span<const int> exps);
    static Monomial variable(int index, int power = 1);

    int operator[](int i) const noexcept { return e_[static_cast<std::size_t>(i)]; }
    int degree() const noexcept { return deg_; }
    std::uint32_t support() const noexcept { return mask_; }
    bool is_one() const noexcept { return deg_ == 0; }
    void set(int i, int value);

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const noexcept;
    /// this / o; requires o.divides(*this).
    Monomial quotient(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const noexcept { return (mask_ & o.mask_) == 0; }

    std::vector<int> exponents(int nvars) const;

    bool operator==(const Monomial& o) const noexcept { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const noexcept { return e_ != o.e_; }

private:
    std::array<std::uint8_t, kMaxVars> e_{};
    std::uint16_t deg_ = 0;
    std::uint32_t mask_ = 0;
};

/// Graded reverse lexicographic (default), lexicographic, or a two-block elimination order.
/// Block(k): variables [0, k) form the eliminated block, compared first by degrevlex on that
/// block, then degrevlex on the remaining variables.
class MonomialOrder {
public:
    enum class Kind { DegRevLex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder block(int eliminated) { return MonomialOrder(Kind::Block, eliminated); }

    Kind kind() const noexcept { return kind_; }
    int block_size() const noexcept { return block_; }
    bool is_graded() const noexcept { return kind_ == Kind::DegRevLex; }

    /// Negative, zero or positive as a is smaller, equal or greater than b.
    int compare(const Monomial& a, const Monomial& b) const noexcept;
    bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

    std::string name() const;

    bool operator==(const MonomialOrder& o) const noexcept { return kind_ == o.kind_ && block_ == o.block_; }
    bool operator!=(const MonomialOrder& o) const noexcept { return !(*this == o); }

private:
    MonomialOrder(Kind k, int b) : kind_(k), block_(b) {}
    Kind kind_;
    int block_;
};

/// All monomials of degree d in nvars variables, largest first under `order`.
std::vector<Monomial> monomial_basis(int nvars, int d, MonomialOrder order = MonomialOrder::grevlex());

}  // namespace dquad
