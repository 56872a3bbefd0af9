#include "dquad/monomial.hpp"

#include "dquad/errors.hpp"

#include <algorithm>

namespace dquad {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw DimensionError("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
    return m;
}

Monomial Monomial::variable(int index, int power) {
    Monomial m;
    m.set(index, power);
    return m;
}

void Monomial::set(int i, int value) {
    if (i < 0 || i >= kMaxVars) throw DimensionError("variable index out of range");
    if (value < 0 || value > 255) throw DimensionError("exponent out of range: " + std::to_string(value));
    auto idx = static_cast<std::size_t>(i);
    deg_ = static_cast<std::uint16_t>(deg_ - e_[idx] + value);
    e_[idx] = static_cast<std::uint8_t>(value);
    if (value) mask_ |= (1u << i);
    else mask_ &= ~(1u << i);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        int s = e_[i] + o.e_[i];
        if (s > 255) throw DimensionError("exponent overflow");
        r.e_[i] = static_cast<std::uint8_t>(s);
    }
    r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    r.mask_ = mask_ | o.mask_;
    return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
    if ((mask_ & ~o.mask_) != 0 || deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > e_[i]) throw DimensionError("monomial does not divide");
        r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
        if (r.e_[i]) r.mask_ |= (1u << i);
    }
    r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] = std::max(e_[i], o.e_[i]);
        d += r.e_[i];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    r.mask_ = mask_ | o.mask_;
    return r;
}

std::vector<int> Monomial::exponents(int nvars) const {
    std::vector<int> out(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) out[static_cast<std::size_t>(i)] = e_[static_cast<std::size_t>(i)];
    return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
        case Kind::DegRevLex:
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
            for (int i = kMaxVars - 1; i >= 0; --i) {
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
            return 0;
        case Kind::Lex:
            for (int i = 0; i < kMaxVars; ++i) {
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            }
            return 0;
        case Kind::Block: {
            int c = grevlex_range(a, b, 0, block_);
            if (c != 0) return c;
            return grevlex_range(a, b, block_, kMaxVars);
        }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
}

std::vector<Monomial> monomial_basis(int nvars, int d, MonomialOrder order) {
    if (d < 0) throw DimensionError("negative degree");
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    // Enumerate compositions of d into nvars parts.
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(var)] = k;
            self(self, var + 1, left - k);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return out;
}

}  // namespace dquad
