#include "dquad/groebner.hpp"

#include "dquad/errors.hpp"
#include "dquad/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dquad {

namespace {

/// work[pos+1..] - c*m*g[1..]; the leading terms cancel by construction.
std::vector<Term> merge_sub(const std::vector<Term>& work, std::size_t pos, const Monomial& m, const Scalar& c,
                            const Polynomial& g, const MonomialOrder& order) {
    const auto& gt = g.terms();
    std::vector<Term> out;
    out.reserve(work.size() - pos + gt.size());
    std::size_t i = pos + 1, j = 1;
    while (i < work.size() || j < gt.size()) {
        if (j == gt.size()) {
            out.push_back(work[i++]);
            continue;
        }
        Monomial gm = gt[j].mono * m;
        if (i == work.size()) {
            out.push_back({gm, -(c * gt[j].coeff)});
            ++j;
            continue;
        }
        int cmp = order.compare(work[i].mono, gm);
        if (cmp > 0) {
            out.push_back(work[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, -(c * gt[j].coeff)});
            ++j;
        } else {
            Scalar v = work[i].coeff - c * gt[j].coeff;
            if (!v.is_zero()) out.push_back({gm, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

const Polynomial* find_reducer(const Monomial& t, const std::vector<const Polynomial*>& reducers) {
    const Polynomial* best = nullptr;
    for (const auto* r : reducers) {
        if (r->lm().divides(t) && (!best || r->size() < best->size())) best = r;
    }
    return best;
}

/// Full reduction of f by monic reducers.
Polynomial reduce(const Polynomial& f, const std::vector<const Polynomial*>& reducers) {
    std::vector<Term> work = f.terms();
    std::vector<Term> rem;
    std::size_t pos = 0;
    const auto& order = f.order();
    while (pos < work.size()) {
        const Term& lt = work[pos];
        const Polynomial* r = find_reducer(lt.mono, reducers);
        if (!r) {
            rem.push_back(lt);
            ++pos;
            continue;
        }
        Monomial q = lt.mono.quotient(r->lm());
        Scalar c = lt.coeff / r->lc();
        work = merge_sub(work, pos, q, c, *r, order);
        pos = 0;
    }
    // rem is already strictly descending.
    return Polynomial::from_terms(f.nvars(), std::move(rem), order);
}

// Fraction-free arithmetic for rational input: primitive integer polynomials, where a
// reduction step scales instead of dividing. This avoids a gcd per coefficient operation.
struct ZTerm {
    Monomial mono;
    mpz_class c;
};
using ZPoly = std::vector<ZTerm>;

void make_primitive(ZPoly& f) {
    mpz_class g = 0;
    for (const auto& t : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

ZPoly to_z(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
    ZPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        const mpq_class& q = t.coeff.rational();
        out.push_back({t.mono, q.get_num() * (l / q.get_den())});
    }
    make_primitive(out);
    return out;
}

Polynomial from_z(const ZPoly& f, int nvars, const MonomialOrder& order) {
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f) {
        mpq_class q(t.c, f.front().c);
        q.canonicalize();
        ts.push_back({t.mono, Scalar(q)});
    }
    return Polynomial::from_terms(nvars, std::move(ts), order);
}

/// bw*work[pos+1..] - aw*m*g[1..]
ZPoly merge_z(const ZPoly& work, std::size_t pos, const mpz_class& bw, const mpz_class& aw, const Monomial& m,
              const ZPoly& g, const MonomialOrder& order) {
    ZPoly out;
    out.reserve(work.size() - pos + g.size());
    const bool scale = bw != 1;
    std::size_t i = pos + 1, j = 1;
    mpz_class v;
    while (i < work.size() || j < g.size()) {
        int cmp;
        Monomial gm;
        if (j < g.size()) gm = g[j].mono * m;
        if (j == g.size()) cmp = 1;
        else if (i == work.size()) cmp = -1;
        else cmp = order.compare(work[i].mono, gm);
        if (cmp > 0) {
            out.push_back(work[i++]);
            if (scale) out.back().c *= bw;
        } else if (cmp < 0) {
            v = aw * g[j++].c;
            out.push_back({gm, -v});
        } else {
            v = bw * work[i++].c;
            mpz_submul(v.get_mpz_t(), aw.get_mpz_t(), g[j++].c.get_mpz_t());
            if (v != 0) out.push_back({gm, v});
        }
    }
    return out;
}

const ZPoly* find_z_reducer(const Monomial& t, const std::vector<const ZPoly*>& reducers) {
    const ZPoly* best = nullptr;
    for (const auto* r : reducers)
        if (r->front().mono.divides(t) && (!best || r->size() < best->size())) best = r;
    return best;
}

/// Full reduction up to a positive rational factor; the result is primitive.
ZPoly reduce_z(ZPoly work, const std::vector<const ZPoly*>& reducers, const MonomialOrder& order) {
    ZPoly rem;
    std::size_t pos = 0;
    unsigned steps = 0;
    mpz_class g, aw, bw;
    while (pos < work.size()) {
        const ZTerm& lt = work[pos];
        const ZPoly* r = find_z_reducer(lt.mono, reducers);
        if (!r) {
            rem.push_back(lt);
            ++pos;
            continue;
        }
        const mpz_class& b = r->front().c;
        mpz_gcd(g.get_mpz_t(), lt.c.get_mpz_t(), b.get_mpz_t());
        mpz_divexact(aw.get_mpz_t(), lt.c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(bw.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
        if (bw < 0) {
            bw = -bw;
            aw = -aw;
        }
        work = merge_z(work, pos, bw, aw, lt.mono.quotient(r->front().mono), *r, order);
        pos = 0;
        if (bw != 1)
            for (auto& t : rem) t.c *= bw;
        if (++steps % 8 == 0) {
            // Strip the common content of the remainder and the work list together.
            mpz_class c = 0;
            for (const auto& t : rem) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
            for (const auto& t : work) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
            if (c > 1) {
                for (auto& t : rem) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                for (auto& t : work) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
            }
        }
    }
    make_primitive(rem);
    return rem;
}

ZPoly s_polynomial_z(const ZPoly& f, const ZPoly& g, const MonomialOrder& order) {
    Monomial l = f.front().mono.lcm(g.front().mono);
    Monomial mf = l.quotient(f.front().mono);
    ZPoly fm;
    fm.reserve(f.size());
    for (const auto& t : f) fm.push_back({t.mono * mf, t.c});
    mpz_class gg, aw, bw;
    mpz_gcd(gg.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    mpz_divexact(aw.get_mpz_t(), f.front().c.get_mpz_t(), gg.get_mpz_t());
    mpz_divexact(bw.get_mpz_t(), g.front().c.get_mpz_t(), gg.get_mpz_t());
    if (bw < 0) {
        bw = -bw;
        aw = -aw;
    }
    return merge_z(fm, 0, bw, aw, l.quotient(g.front().mono), g, order);
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
        int c = order->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

class Buchberger {
public:
    Buchberger(int nvars, MonomialOrder order, bool rational, const GroebnerOptions& opts)
        : nvars_(nvars), order_(order), rational_(rational), opts_(opts), pairs_(PairLess{&order_}) {}

    void add_generator(const Polynomial& g) {
        if (rational_) {
            ZPoly r = reduce_z(to_z(g.with_order(order_)), active_z(), order_);
            if (r.empty()) return;
            Polynomial h = from_z(r, nvars_, order_);
            insert(std::move(h), std::move(r));
            return;
        }
        Polynomial r = reduce(g.with_order(order_), active_reducers());
        if (!r.is_zero()) insert(r.monic());
    }

    void run() {
        while (!pairs_.empty()) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (++processed_ > opts_.max_pairs)
                throw ResourceLimitError("Groebner pair bound of " + std::to_string(opts_.max_pairs) +
                                         " exceeded; rerun over a prime field (--domain fp)");
            if (rational_) {
                ZPoly r = reduce_z(s_polynomial_z(z_[p.i], z_[p.j], order_), active_z(), order_);
                if (r.empty()) continue;
                Polynomial h = from_z(r, nvars_, order_);
                insert(std::move(h), std::move(r));
                continue;
            }
            Polynomial s = s_polynomial(polys_[p.i], polys_[p.j]);
            Polynomial r = reduce(s, active_reducers());
            if (!r.is_zero()) insert(r.monic());
        }
    }

    GroebnerBasis result() {
        std::vector<Polynomial> minimal;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) minimal.push_back(polys_[k]);
        std::sort(minimal.begin(), minimal.end(),
                  [&](const Polynomial& a, const Polynomial& b) { return order_.compare(a.lm(), b.lm()) < 0; });
        std::vector<Polynomial> reduced;
        reduced.reserve(minimal.size());
        std::vector<ZPoly> zmin;
        if (rational_)
            for (const auto& m : minimal) zmin.push_back(to_z(m));
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            if (rational_) {
                std::vector<const ZPoly*> others;
                for (std::size_t l = 0; l < zmin.size(); ++l)
                    if (l != k) others.push_back(&zmin[l]);
                reduced.push_back(from_z(reduce_z(zmin[k], others, order_), nvars_, order_));
                continue;
            }
            std::vector<const Polynomial*> others;
            for (std::size_t l = 0; l < minimal.size(); ++l)
                if (l != k) others.push_back(&minimal[l]);
            reduced.push_back(reduce(minimal[k], others).monic());
        }
        GroebnerBasis gb(nvars_, order_, std::move(reduced), true);
        gb.pairs_processed = processed_;
        gb.pairs_pruned = pruned_;
        return gb;
    }

private:
    std::vector<const Polynomial*> active_reducers() const {
        std::vector<const Polynomial*> out;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) out.push_back(&polys_[k]);
        return out;
    }

    std::vector<const ZPoly*> active_z() const {
        std::vector<const ZPoly*> out;
        for (std::size_t k = 0; k < z_.size(); ++k)
            if (active_[k]) out.push_back(&z_[k]);
        return out;
    }

    void insert(Polynomial h, ZPoly hz = {}) {
        if (opts_.max_coeff_bits && h.max_coeff_bits() > opts_.max_coeff_bits && h.lc().is_rational())
            throw ResourceLimitError("coefficient size bound of " + std::to_string(opts_.max_coeff_bits) +
                                     " bits exceeded; rerun over a prime field (--domain fp)");
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        if (rational_) z_.push_back(std::move(hz));
        active_.push_back(false);
        const Monomial& lh = polys_[hi].lm();

        // Chain criterion among the new pairs (h, g).
        std::vector<std::size_t> cand;
        for (std::size_t g = 0; g < hi; ++g)
            if (active_[g]) cand.push_back(g);
        std::vector<std::pair<std::size_t, Monomial>> c_list, d_list;
        for (auto g : cand) c_list.push_back({g, lh.lcm(polys_[g].lm())});
        for (std::size_t a = 0; a < c_list.size(); ++a) {
            const auto& [g1, l1] = c_list[a];
            bool keep = lh.coprime(polys_[g1].lm());
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < c_list.size() && keep; ++b)
                    if (c_list[b].second.divides(l1)) keep = false;
                for (std::size_t b = 0; b < d_list.size() && keep; ++b)
                    if (d_list[b].second.divides(l1)) keep = false;
            }
            if (keep) d_list.push_back(c_list[a]);
            else ++pruned_;
        }

        // Drop old pairs made redundant by h.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Monomial& l = it->lcm;
            if (lh.divides(l) && lh.lcm(polys_[it->i].lm()) != l && lh.lcm(polys_[it->j].lm()) != l) {
                it = pairs_.erase(it);
                ++pruned_;
            } else {
                ++it;
            }
        }

        // Product criterion.
        for (const auto& [g, l] : d_list) {
            if (lh.coprime(polys_[g].lm())) {
                ++pruned_;
                continue;
            }
            pairs_.insert(Pair{g, hi, l});
        }

        for (auto g : cand)
            if (lh.divides(polys_[g].lm())) active_[g] = false;
        active_[hi] = true;
    }

    int nvars_;
    MonomialOrder order_;
    bool rational_;
    GroebnerOptions opts_;
    std::vector<Polynomial> polys_;
    std::vector<ZPoly> z_;
    std::vector<bool> active_;
    std::set<Pair, PairLess> pairs_;
    std::size_t processed_ = 0;
    std::size_t pruned_ = 0;
};

}  // namespace

Ideal::Ideal(int nvars, std::vector<Polynomial> generators, Ambient ambient) : nvars_(nvars), ambient_(ambient) {
    for (auto& g : generators) {
        if (g.nvars() != nvars) throw DimensionError("generator ring does not match the ideal");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

bool Ideal::is_homogeneous() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

GroebnerBasis::GroebnerBasis(int nvars, MonomialOrder order, std::vector<Polynomial> elements, bool reduced)
    : nvars_(nvars), order_(order), elements_(std::move(elements)), reduced_(reduced) {}

bool GroebnerBasis::is_unit() const noexcept {
    return std::any_of(elements_.begin(), elements_.end(), [](const Polynomial& g) { return g.lm().is_one(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elements_) out.push_back(g.lm());
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = f.lm().lcm(g.lm());
    Polynomial a = f.mul_term(l.quotient(f.lm()), f.lc().inverse());
    Polynomial b = g.mul_term(l.quotient(g.lm()), g.lc().inverse());
    return a - b;
}

GroebnerBasis buchberger(const Ideal& ideal, MonomialOrder order, const GroebnerOptions& options) {
    auto d = ideal.generators().empty() ? std::nullopt : ideal.generators().front().domain();
    Buchberger engine(ideal.nvars(), order, d && d->is_rational(), options);
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.with_order(order));
    std::sort(gens.begin(), gens.end(),
              [&](const Polynomial& a, const Polynomial& b) { return order.compare(a.lm(), b.lm()) < 0; });
    for (const auto& g : gens) engine.add_generator(g);
    engine.run();
    return engine.result();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.nvars() != gb.nvars()) throw DimensionError("polynomial ring does not match the basis");
    if (f.order() != gb.order())
        throw DimensionError("monomial order mismatch: " + f.order().name() + " vs " + gb.order().name());
    std::vector<const Polynomial*> reducers;
    for (const auto& g : gb.elements()) reducers.push_back(&g);
    return reduce(f, reducers);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    const auto& el = gb.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
            if (!normal_form(s_polynomial(el[i], el[j]), gb).is_zero()) return false;
    return true;
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options) {
    if (f.is_zero()) throw DomainError("cannot saturate by the zero polynomial");
    const int n = ideal.nvars();
    if (f.nvars() != n) throw DimensionError("saturating polynomial lives in a different ring");
    if (n + 1 > kMaxVars) throw DimensionError("too many variables to adjoin t");
    const MonomialOrder elim = MonomialOrder::block(1);
    std::vector<int> shift(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = i + 1;

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.with_order(elim).remap(n + 1, shift));
    Domain d = *f.domain();
    Polynomial t = Polynomial::variable(n + 1, 0, d, elim);
    Polynomial one = Polynomial::constant(n + 1, d.one(), elim);
    gens.push_back(t * f.with_order(elim).remap(n + 1, shift) - one);

    GroebnerBasis gb = buchberger(Ideal(n + 1, std::move(gens), Ambient::AffineChart), elim, options);

    // Slot 0 (t) is never read: only t-free elements are mapped back.
    std::vector<int> back(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) back[static_cast<std::size_t>(i)] = i - 1;
    std::vector<Polynomial> out;
    for (const auto& g : gb.elements()) {
        if (g.lm()[0] != 0) continue;
        out.push_back(g.remap(n, back).with_order(MonomialOrder::grevlex()));
    }
    return Ideal(n, std::move(out), ideal.ambient());
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
    if (gb.is_unit()) return {};
    const int n = gb.nvars();
    auto lms = gb.leading_monomials();
    std::vector<int> bound(static_cast<std::size_t>(n), -1);
    for (const auto& m : lms) {
        if (m.degree() == 0) continue;
        for (int i = 0; i < n; ++i) {
            if (m[i] == m.degree()) {
                int& b = bound[static_cast<std::size_t>(i)];
                b = b < 0 ? m[i] : std::min(b, m[i]);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (bound[static_cast<std::size_t>(i)] < 0)
            throw NotZeroDimensionalError("quotient ring is infinite-dimensional: no pure power of x" +
                                          std::to_string(i) + " among leading monomials");
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, int var) -> void {
        if (var == n) {
            for (const auto& m : lms)
                if (m.divides(cur)) return;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e < bound[static_cast<std::size_t>(var)]; ++e) {
            cur.set(var, e);
            // Prune: if cur (with remaining zero) is already in the ideal, larger e are too.
            bool in_ideal = false;
            for (const auto& m : lms)
                if (m.divides(cur)) {
                    in_ideal = true;
                    break;
                }
            if (in_ideal) break;
            self(self, var + 1);
        }
        cur.set(var, 0);
    };
    rec(rec, 0);
    return out;
}

std::size_t zero_dim_degree(const GroebnerBasis& gb) { return standard_monomials(gb).size(); }

int ideal_dimension(const GroebnerBasis& gb) {
    if (gb.is_unit()) return -1;
    const int n = gb.nvars();
    auto lms = gb.leading_monomials();
    int best = 0;
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
        int size = __builtin_popcount(u);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lms)
            if ((m.support() & ~u) == 0) {
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return best;
}

std::size_t graded_component_dim(const Ideal& ideal, int d) {
    if (!ideal.is_homogeneous()) throw DimensionError("graded component of an inhomogeneous ideal");
    const int n = ideal.nvars();
    auto basis = monomial_basis(n, d);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k].exponents(n)] = k;
    if (ideal.generators().empty()) return 0;
    Domain dom = *ideal.generators().front().domain();
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g0 : ideal.generators()) {
        Polynomial g = g0.with_order(MonomialOrder::grevlex());
        int dg = g.total_degree();
        if (dg > d) continue;
        for (const auto& m : monomial_basis(n, d - dg)) {
            std::vector<Scalar> row(basis.size(), dom.zero());
            for (const auto& t : g.terms()) row[index.at((t.mono * m).exponents(n))] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return 0;
    return rank(Matrix::from_rows(rows, dom));
}

bool is_irrelevant(const Ideal& ideal, const GroebnerOptions& options) {
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), options);
    if (gb.is_unit()) return true;
    try {
        zero_dim_degree(gb);
        return true;
    } catch (const NotZeroDimensionalError&) {
        return false;
    }
}

ChartedLocus chart_locus(const Ideal& homogeneous, std::span<const Scalar> chart, const GroebnerOptions& options) {
    if (!homogeneous.is_homogeneous()) throw DimensionError("chart locus of an inhomogeneous ideal");
    const int n = homogeneous.nvars();
    if (chart.size() != static_cast<std::size_t>(n - 1)) throw DimensionError("chart needs n - 1 coefficients");
    if (homogeneous.generators().empty()) throw NotZeroDimensionalError("the zero ideal defines all of projective space");
    const Domain d = *homogeneous.generators().front().domain();
    const int m = n - 1;
    // x0 = t - sum c_i x_i with t = 1 on the chart and t = 0 at infinity.
    auto images = [&](bool at_infinity) {
        std::vector<Polynomial> im;
        Polynomial x0 = at_infinity ? Polynomial(m) : Polynomial::constant(m, d.one());
        for (int i = 1; i < n; ++i) x0 -= Polynomial::variable(m, i - 1, d).scaled(chart[static_cast<std::size_t>(i - 1)]);
        im.push_back(x0);
        for (int i = 1; i < n; ++i) im.push_back(Polynomial::variable(m, i - 1, d));
        return im;
    };
    auto affine = images(false);
    std::vector<Polynomial> ag;
    for (const auto& g : homogeneous.generators()) ag.push_back(g.substitute(affine));
    GroebnerBasis gb = buchberger(Ideal(m, ag, Ambient::AffineChart), MonomialOrder::grevlex(), options);

    ChartedLocus out;
    std::vector<Term> lt{{Monomial::variable(0), d.one()}};
    for (int i = 1; i < n; ++i) lt.push_back({Monomial::variable(i), chart[static_cast<std::size_t>(i - 1)]});
    out.chart = Polynomial::from_terms(n, std::move(lt));
    out.dimension = ideal_dimension(gb);
    if (out.dimension <= 0) {
        out.length = zero_dim_degree(gb);
        auto inf = images(true);
        std::vector<Polynomial> ig;
        for (const auto& g : homogeneous.generators()) ig.push_back(g.substitute(inf));
        out.meets_infinity = !is_irrelevant(Ideal(m, ig), options);
    }
    // Homogenizing a degree-compatible basis gives the ideal of the closure of the affine part.
    std::vector<Polynomial> back{out.chart};
    for (int i = 1; i < n; ++i) back.push_back(Polynomial::variable(n, i, d));
    std::vector<Polynomial> sat;
    for (const auto& g : gb.elements()) sat.push_back(g.homogenize(0).substitute(back));
    out.saturated = Ideal(n, std::move(sat), Ambient::Projective);
    out.affine = std::move(gb);
    return out;
}

ChartedLocus projective_zero_dim_locus(const Ideal& homogeneous, std::mt19937_64& rng, const GroebnerOptions& options,
                                       int attempts) {
    if (homogeneous.generators().empty()) throw NotZeroDimensionalError("the zero ideal defines all of projective space");
    const Domain d = *homogeneous.generators().front().domain();
    std::uniform_int_distribution<int> coef(-30, 30);
    for (int a = 0; a < attempts; ++a) {
        std::vector<Scalar> c;
        for (int i = 1; i < homogeneous.nvars(); ++i) c.push_back(d.from_int(coef(rng)));
        ChartedLocus l = chart_locus(homogeneous, c, options);
        if (l.dimension > 0)
            throw NotZeroDimensionalError("projective scheme has dimension " + std::to_string(l.dimension));
        if (!l.meets_infinity) return l;
    }
    throw Error("no chart avoided the scheme after " + std::to_string(attempts) + " attempts");
}

namespace {

using Univariate = std::vector<Scalar>;

void trim(Univariate& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Univariate remainder(Univariate f, const Univariate& g) {
    Scalar inv = g.back().inverse();
    while (f.size() >= g.size()) {
        Scalar c = f.back() * inv;
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
        f.pop_back();
        trim(f);
    }
    return f;
}

std::size_t gcd_degree(Univariate a, Univariate b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Univariate r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

/// Minimal polynomial of multiplication by `l` on the quotient ring, low degree first.
Univariate minimal_polynomial(const Polynomial& l, const GroebnerBasis& gb, const Domain& d) {
    std::vector<Monomial> basis = standard_monomials(gb);
    std::vector<std::vector<Scalar>> powers;
    Polynomial p = Polynomial::constant(gb.nvars(), d.one());
    while (true) {
        p = normal_form(p, gb);
        std::vector<Scalar> v;
        for (const auto& m : basis) v.push_back(p.coefficient(m));
        powers.push_back(std::move(v));
        Matrix cols = Matrix::from_rows(powers, d).transpose();
        if (rank(cols) < powers.size()) {
            Matrix k = kernel_basis(cols);
            Univariate m = k.column(0);
            trim(m);
            return m;
        }
        p = p * l;
    }
}

}  // namespace

std::size_t distinct_point_count(const ChartedLocus& locus, std::mt19937_64& rng) {
    if (!locus.affine) throw Error("chart locus carries no affine basis");
    if (locus.dimension > 0) throw NotZeroDimensionalError("distinct points of a positive-dimensional locus");
    if (locus.dimension < 0) return 0;
    const GroebnerBasis& gb = *locus.affine;
    const Domain d = *gb.elements().front().domain();
    std::uniform_int_distribution<int> coef(-50, 50);
    Polynomial l(gb.nvars());
    for (int i = 0; i < gb.nvars(); ++i) l += Polynomial::variable(gb.nvars(), i, d).scaled(d.from_int(coef(rng)));
    Univariate m = minimal_polynomial(l, gb, d);
    Univariate dm;
    for (std::size_t i = 1; i < m.size(); ++i) dm.push_back(m[i] * d.from_int(static_cast<long long>(i)));
    return m.size() - 1 - gcd_degree(m, dm);
}

}  // namespace dquad
