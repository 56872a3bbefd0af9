#include "dquad/polynomial.hpp"

#include "dquad/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dquad {

Polynomial::Polynomial(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {
    if (nvars < 0 || nvars > kMaxVars) throw DimensionError("unsupported variable count " + std::to_string(nvars));
}

Polynomial Polynomial::constant(int nvars, const Scalar& c, MonomialOrder order) {
    Polynomial p(nvars, order);
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
}

Polynomial Polynomial::variable(int nvars, int index, const Domain& domain, MonomialOrder order) {
    if (index < 0 || index >= nvars) throw DimensionError("variable index out of range");
    Polynomial p(nvars, order);
    p.terms_.push_back({Monomial::variable(index), domain.one()});
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms, MonomialOrder order) {
    Polynomial p(nvars, order);
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    return p;
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw DimensionError("leading term of the zero polynomial");
    return terms_.front();
}

int Polynomial::total_degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

std::vector<int> Polynomial::degrees() const {
    std::set<int> ds;
    for (const auto& t : terms_) ds.insert(t.mono.degree());
    return {ds.begin(), ds.end()};
}

std::optional<Domain> Polynomial::domain() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().coeff.domain();
}

std::size_t Polynomial::max_coeff_bits() const noexcept {
    std::size_t b = 0;
    for (const auto& t : terms_) b = std::max(b, t.coeff.bit_size());
    return b;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    auto d = domain();
    return d ? d->zero() : Scalar();
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
    Polynomial p(nvars_, order);
    p.terms_ = terms_;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return p;
}

Polynomial Polynomial::to_domain(const Domain& d) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.mono, t.coeff.to_domain(d)});
    return from_terms(nvars_, std::move(ts), order_);
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomials live in rings of different size");
    if (order_ != o.order_) throw DimensionError("polynomials use different monomial orders");
}

Polynomial Polynomial::operator-() const {
    Polynomial p(nvars_, order_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, -t.coeff});
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_ring(o);
    if (o.is_zero()) return *this;
    sub_mul_term(Monomial(), -o.terms_.front().coeff.domain().one(), o);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_ring(o);
    if (o.is_zero()) return *this;
    sub_mul_term(Monomial(), o.terms_.front().coeff.domain().one(), o);
    return *this;
}

void Polynomial::sub_mul_term(const Monomial& m, const Scalar& c, const Polynomial& g) {
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    const bool trivial_m = m.is_one();
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j == g.terms_.size()) {
            out.push_back(std::move(terms_[i++]));
            continue;
        }
        Monomial gm = trivial_m ? g.terms_[j].mono : g.terms_[j].mono * m;
        if (i == terms_.size()) {
            out.push_back({gm, -(c * g.terms_[j].coeff)});
            ++j;
            continue;
        }
        int cmp = order_.compare(terms_[i].mono, gm);
        if (cmp > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (cmp < 0) {
            out.push_back({gm, -(c * g.terms_[j].coeff)});
            ++j;
        } else {
            Scalar v = terms_[i].coeff - c * g.terms_[j].coeff;
            if (!v.is_zero()) out.push_back({gm, std::move(v)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) ts.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(nvars_, std::move(ts), order_);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial p(nvars_, order_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
    Polynomial p(nvars_, order_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves the order of terms.
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(nvars_, order_);
    if (e == 0) {
        auto d = domain();
        return constant(nvars_, (d ? *d : Domain::rationals()).one(), order_);
    }
    result = *this;
    for (unsigned k = 1; k < e; ++k) result = result * *this;
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inverse());
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
        throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                             std::to_string(nvars_) + " variables");
    Domain d = !point.empty() ? point[0].domain() : (domain() ? *domain() : Domain::rationals());
    Scalar acc = d.zero();
    for (const auto& t : terms_) {
        Scalar v = t.coeff;
        for (int i = 0; i < nvars_; ++i) {
            int e = t.mono[i];
            if (e) v *= point[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(e));
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw DimensionError("variable index out of range");
    std::vector<Term> ts;
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        ts.push_back({m, t.coeff * t.coeff.domain().from_int(e)});
    }
    return from_terms(nvars_, std::move(ts), order_);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    if (images.size() != static_cast<std::size_t>(nvars_)) throw DimensionError("substitution arity mismatch");
    if (images.empty()) return *this;
    const int tn = images[0].nvars();
    const MonomialOrder to = images[0].order();
    Polynomial result(tn, to);
    // Cache powers of each image.
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& t : terms_) {
        Polynomial prod = constant(tn, t.coeff, to);
        for (int i = 0; i < nvars_ && !prod.is_zero(); ++i) {
            int e = t.mono[i];
            if (!e) continue;
            auto& cache = powers[static_cast<std::size_t>(i)];
            const auto& img = images[static_cast<std::size_t>(i)];
            if (cache.empty()) cache.push_back(img);
            while (cache.size() < static_cast<std::size_t>(e)) cache.push_back(cache.back() * img);
            prod = prod * cache[static_cast<std::size_t>(e - 1)];
        }
        result += prod;
    }
    return result;
}

Polynomial Polynomial::dehomogenize(int var) const {
    if (var < 0 || var >= nvars_) throw DimensionError("variable index out of range");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (int i = 0, k = 0; i < nvars_; ++i) {
            if (i == var) continue;
            m.set(k++, t.mono[i]);
        }
        ts.push_back({m, t.coeff});
    }
    return from_terms(nvars_ - 1, std::move(ts), order_);
}

Polynomial Polynomial::homogenize(int var, std::optional<int> degree) const {
    if (var < 0 || var > nvars_) throw DimensionError("variable index out of range");
    int d = degree.value_or(total_degree());
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.mono.degree() > d) throw DimensionError("homogenizing degree below term degree");
        Monomial m;
        for (int i = 0, k = 0; i <= nvars_; ++i) {
            if (i == var) {
                m.set(i, d - t.mono.degree());
                continue;
            }
            m.set(i, t.mono[k++]);
        }
        ts.push_back({m, t.coeff});
    }
    return from_terms(nvars_ + 1, std::move(ts), order_);
}

Polynomial Polynomial::remap(int nvars, std::span<const int> map) const {
    if (map.size() != static_cast<std::size_t>(nvars_)) throw DimensionError("variable map arity mismatch");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (int i = 0; i < nvars_; ++i) {
            int e = t.mono[i];
            if (!e) continue;
            int target = map[static_cast<std::size_t>(i)];
            if (target < 0 || target >= nvars) throw DimensionError("variable map target out of range");
            m.set(target, m[target] + e);
        }
        ts.push_back({m, t.coeff});
    }
    return from_terms(nvars, std::move(ts), order_);
}

std::string default_variable_name(int i) { return "x" + std::to_string(i); }

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool negative = t.coeff.is_rational() && t.coeff.sign() < 0;
        if (negative) c.erase(0, 1);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit = (c == "1");
        bool wrote = false;
        if (!unit || t.mono.is_one()) {
            os << c;
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            int e = t.mono[i];
            if (!e) continue;
            if (wrote) os << "*";
            os << (names.empty() ? default_variable_name(i) : names[static_cast<std::size_t>(i)]);
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    if (a.order_ == b.order_) {
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].mono != b.terms_[i].mono) return false;
            if (a.terms_[i].coeff.domain() != b.terms_[i].coeff.domain()) return false;
            if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
        }
        return true;
    }
    return a == b.with_order(a.order_);
}

}  // namespace dquad
