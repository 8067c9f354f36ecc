#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dfsub/errors.hpp"

namespace dfsub {

using VarId = std::uint32_t;

/// A power product of variables, stored as (var, exponent) pairs with the
/// variable ids strictly decreasing and every exponent positive.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> f;
    std::uint32_t deg = 0;

    static Monomial var(VarId v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) {
            m.f.emplace_back(v, e);
            m.deg = e;
        }
        return m;
    }

    bool is_one() const { return f.empty(); }

    std::uint32_t exponent(VarId v) const {
        for (const auto& [w, e] : f) {
            if (w == v) return e;
            if (w < v) break;
        }
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f == b.f; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.f != b.f; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.f.reserve(a.f.size() + b.f.size());
        std::size_t i = 0, j = 0;
        while (i < a.f.size() || j < b.f.size()) {
            if (j == b.f.size() || (i < a.f.size() && a.f[i].first > b.f[j].first)) {
                r.f.push_back(a.f[i++]);
            } else if (i == a.f.size() || b.f[j].first > a.f[i].first) {
                r.f.push_back(b.f[j++]);
            } else {
                r.f.emplace_back(a.f[i].first, a.f[i].second + b.f[j].second);
                ++i;
                ++j;
            }
        }
        r.deg = a.deg + b.deg;
        return r;
    }

    bool divides(const Monomial& b) const {
        if (deg > b.deg) return false;
        std::size_t j = 0;
        for (const auto& [v, e] : f) {
            while (j < b.f.size() && b.f[j].first > v) ++j;
            if (j == b.f.size() || b.f[j].first != v || b.f[j].second < e) return false;
        }
        return true;
    }

    // b / a, assuming a.divides(b).
    friend Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r;
        std::size_t i = 0;
        for (const auto& [v, e] : b.f) {
            std::uint32_t d = e;
            if (i < a.f.size() && a.f[i].first == v) d -= a.f[i++].second;
            if (d > 0) r.f.emplace_back(v, d);
        }
        r.deg = b.deg - a.deg;
        return r;
    }

    // Drops variable v, returning its exponent.
    std::uint32_t remove(VarId v) {
        for (auto it = f.begin(); it != f.end(); ++it) {
            if (it->first == v) {
                std::uint32_t e = it->second;
                f.erase(it);
                deg -= e;
                return e;
            }
        }
        return 0;
    }
};

// Graded lexicographic order with larger variable ids more significant.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    std::size_t n = std::min(a.f.size(), b.f.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& [va, ea] = a.f[k];
        const auto& [vb, eb] = b.f[k];
        if (va != vb) return va > vb ? 1 : -1;
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    if (a.f.size() != b.f.size()) return a.f.size() > b.f.size() ? 1 : -1;
    return 0;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) < 0; }
};

/// Sparse multivariate polynomial over a field K. Terms are kept sorted by
/// decreasing grlex order with no zero coefficients.
///
/// K needs field arithmetic, construction from long, is_zero() and is_one().
template <class K>
class SparsePoly {
public:
    struct Term {
        Monomial m;
        K c;
    };

    SparsePoly() = default;
    explicit SparsePoly(K c) {
        if (!c.is_zero()) terms_.push_back({Monomial{}, std::move(c)});
    }
    static SparsePoly constant(K c) { return SparsePoly(std::move(c)); }
    static SparsePoly var(VarId v, std::uint32_t e = 1) { return monomial(Monomial::var(v, e), K(1)); }
    static SparsePoly monomial(Monomial m, K c) {
        SparsePoly p;
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }
    // Accepts terms in any order and with repeats.
    static SparsePoly from_terms(std::vector<Term> ts) {
        SparsePoly p;
        p.terms_ = std::move(ts);
        p.canonicalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    K constant_value() const { return terms_.empty() ? K(0) : terms_[0].m.is_one() ? terms_[0].c : K(0); }
    K constant_term() const {
        if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
        return K(0);
    }
    bool is_one() const { return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one(); }

    const Term& lead() const { return terms_.front(); }
    std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().m.deg; }

    std::uint32_t degree(VarId v) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.m.exponent(v));
        return d;
    }
    std::uint32_t degree_in(const std::set<VarId>& vs) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) {
            std::uint32_t s = 0;
            for (const auto& [v, e] : t.m.f)
                if (vs.count(v)) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    std::set<VarId> vars() const {
        std::set<VarId> out;
        for (const auto& t : terms_)
            for (const auto& [v, e] : t.m.f) out.insert(v);
        return out;
    }
    bool mentions(VarId v) const {
        for (const auto& t : terms_)
            if (t.m.exponent(v) > 0) return true;
        return false;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t k = 0; k < a.terms_.size(); ++k) {
            if (a.terms_[k].m != b.terms_[k].m || !(a.terms_[k].c == b.terms_[k].c)) return false;
        }
        return true;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
    SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
    SparsePoly& operator-=(const SparsePoly& b) { return *this = *this - b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.terms_.size() == 1 && a.terms_[0].m.is_one()) return b.scaled(a.terms_[0].c);
        if (b.terms_.size() == 1 && b.terms_[0].m.is_one()) return a.scaled(b.terms_[0].c);
        std::map<Monomial, K, MonomialLess> acc;
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                Monomial m = s.m * t.m;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(std::move(m), s.c * t.c);
                } else {
                    it->second += s.c * t.c;
                }
            }
        }
        SparsePoly r;
        r.terms_.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
            if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
        }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

    SparsePoly scaled(const K& c) const {
        if (c.is_zero()) return {};
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.c *= c;
        return r;
    }
    SparsePoly times_monomial(const Monomial& m) const {
        SparsePoly r = *this;
        for (auto& t : r.terms_) t.m = t.m * m;  // order is preserved by multiplication
        return r;
    }

    SparsePoly pow(std::uint32_t e) const {
        SparsePoly r(K(1));
        SparsePoly b = *this;
        while (e > 0) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e > 0) b *= b;
        }
        return r;
    }

    // Exact quotient a / b, or nullopt when b does not divide a.
    friend std::optional<SparsePoly> exact_divide(const SparsePoly& a, const SparsePoly& b) {
        if (b.is_zero()) throw Error(ErrorKind::ZeroDivisor, "division by the zero polynomial");
        if (a.is_zero()) return SparsePoly{};
        if (b.terms_.size() == 1 && b.terms_[0].m.is_one()) return a.scaled(K(1) / b.terms_[0].c);
        const Term& lb = b.lead();
        K inv = K(1) / lb.c;
        std::vector<Term> q;
        // Remainder kept in an ordered map: each step costs |b| log |r|.
        std::map<Monomial, K, MonomialLess> r;
        for (const auto& t : a.terms_) r.emplace_hint(r.begin(), t.m, t.c);
        while (!r.empty()) {
            auto top = std::prev(r.end());
            if (!lb.m.divides(top->first)) return std::nullopt;
            Term t{quotient(top->first, lb.m), top->second * inv};
            r.erase(top);
            for (std::size_t k = 1; k < b.terms_.size(); ++k) {
                Monomial m = b.terms_[k].m * t.m;
                K c = b.terms_[k].c * t.c;
                auto [it, fresh] = r.try_emplace(std::move(m), -c);
                if (!fresh) {
                    it->second -= c;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
            q.push_back(std::move(t));
        }
        SparsePoly out;
        out.terms_ = std::move(q);  // produced in decreasing order
        return out;
    }

    SparsePoly partial(VarId v) const {
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            std::uint32_t e = t.m.exponent(v);
            if (e == 0) continue;
            Monomial m = t.m;
            for (auto& pr : m.f) {
                if (pr.first == v) pr.second -= 1;
            }
            m.f.erase(std::remove_if(m.f.begin(), m.f.end(), [](const auto& pr) { return pr.second == 0; }), m.f.end());
            m.deg -= 1;
            ts.push_back({std::move(m), t.c * K(static_cast<long>(e))});
        }
        return from_terms(std::move(ts));
    }

    // Coefficients of powers of v: result[k] is the coefficient of v^k.
    std::vector<SparsePoly> as_univariate(VarId v) const {
        std::vector<std::vector<Term>> buckets(degree(v) + 1);
        for (const auto& t : terms_) {
            Monomial m = t.m;
            std::uint32_t e = m.remove(v);
            buckets[e].push_back({std::move(m), t.c});
        }
        std::vector<SparsePoly> out;
        out.reserve(buckets.size());
        for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
        return out;
    }
    static SparsePoly from_univariate(const std::vector<SparsePoly>& cs, VarId v) {
        std::vector<Term> ts;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            Monomial m = Monomial::var(v, static_cast<std::uint32_t>(k));
            for (const auto& t : cs[k].terms_) ts.push_back({t.m * m, t.c});
        }
        return from_terms(std::move(ts));
    }

    // Leading coefficient with respect to v (a polynomial free of v).
    SparsePoly lead_coeff_in(VarId v) const {
        std::uint32_t d = degree(v);
        std::vector<Term> ts;
        for (const auto& t : terms_) {
            if (t.m.exponent(v) != d) continue;
            Monomial m = t.m;
            m.remove(v);
            ts.push_back({std::move(m), t.c});
        }
        return from_terms(std::move(ts));
    }

    // Replaces v by the polynomial value (Horner in v).
    SparsePoly substitute(VarId v, const SparsePoly& value) const {
        if (!mentions(v)) return *this;
        auto cs = as_univariate(v);
        SparsePoly r = cs.back();
        for (std::size_t k = cs.size() - 1; k-- > 0;) r = r * value + cs[k];
        return r;
    }

    // P(v + c) for each (v, c).
    SparsePoly translate(const std::vector<std::pair<VarId, K>>& shift) const {
        SparsePoly r = *this;
        for (const auto& [v, c] : shift) {
            if (c.is_zero() || !r.mentions(v)) continue;
            r = r.substitute(v, var(v) + SparsePoly(c));
        }
        return r;
    }

    // Keeps the terms whose degree in vs equals d.
    SparsePoly homogeneous_part(const std::set<VarId>& vs, std::uint32_t d) const {
        SparsePoly r;
        for (const auto& t : terms_) {
            std::uint32_t s = 0;
            for (const auto& [v, e] : t.m.f)
                if (vs.count(v)) s += e;
            if (s == d) r.terms_.push_back(t);
        }
        return r;
    }

    template <class F>
    SparsePoly map_coeffs(F&& f) const {
        std::vector<Term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back({t.m, f(t.c)});
        return from_terms(std::move(ts));
    }

    // Scales so the leading coefficient (internal order) is 1.
    SparsePoly monic() const {
        if (is_zero()) return {};
        return scaled(K(1) / lead().c);
    }

private:
    std::vector<Term> terms_;

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grlex_cmp(a.m, b.m) > 0; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c += t.c;
            } else {
                if (!out.empty() && out.back().c.is_zero()) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
        terms_ = std::move(out);
    }

    static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
        SparsePoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c;
            if (i == a.terms_.size()) c = -1;
            else if (j == b.terms_.size()) c = 1;
            else c = grlex_cmp(a.terms_[i].m, b.terms_[j].m);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
                if (subtract) r.terms_.back().c = -r.terms_.back().c;
            } else {
                K s = subtract ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

namespace detail {

template <class K>
SparsePoly<K> exact_quo(const SparsePoly<K>& a, const SparsePoly<K>& b) {
    auto q = exact_divide(a, b);
    if (!q) throw Error(ErrorKind::Unsupported, "internal: inexact division in gcd");
    return *q;
}

template <class K>
SparsePoly<K> gcd_impl(SparsePoly<K> a, SparsePoly<K> b);

// gcd of the coefficients of p viewed in K[rest][v].
template <class K>
SparsePoly<K> content_in(const SparsePoly<K>& p, VarId v) {
    auto cs = p.as_univariate(v);
    std::sort(cs.begin(), cs.end(),
              [](const SparsePoly<K>& x, const SparsePoly<K>& y) { return x.terms().size() < y.terms().size(); });
    SparsePoly<K> g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : gcd_impl(g, c);
        if (g.is_constant()) return SparsePoly<K>(K(1));
    }
    return g.monic();
}

// Pseudo-remainder of a by b in v: lc(b)^(da-db+1)·a mod b.
template <class K>
SparsePoly<K> prem(SparsePoly<K> a, const SparsePoly<K>& b, VarId v) {
    std::uint32_t db = b.degree(v);
    std::uint32_t da = a.degree(v);
    SparsePoly<K> lb = b.lead_coeff_in(v);
    std::uint32_t steps = 0;
    while (!a.is_zero() && a.degree(v) >= db) {
        std::uint32_t d = a.degree(v);
        SparsePoly<K> la = a.lead_coeff_in(v);
        a = lb * a - (la * b).times_monomial(Monomial::var(v, d - db));
        ++steps;
    }
    std::uint32_t e = da - db + 1;
    if (steps < e) a = a * lb.pow(e - steps);
    return a;
}

// Euclid over K for polynomials in the single variable v.
template <class K>
SparsePoly<K> univariate_gcd(SparsePoly<K> a, SparsePoly<K> b, VarId v) {
    // Coefficients with free parameters swell under Euclid; those fields
    // provide a gcd that treats the parameters as variables.
    if constexpr (requires(const K& k) {
                      k.numerator();
                      gcd_over_parameters(a, b, v);
                  }) {
        auto has_parameters = [](const SparsePoly<K>& p) {
            return std::any_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return !t.c.is_numeric(); });
        };
        if (has_parameters(a) || has_parameters(b)) return gcd_over_parameters(a, b, v);
    }
    while (!b.is_zero()) {
        // Remainder over the field.
        std::uint32_t db = b.degree(v);
        K inv = K(1) / b.lead().c;
        while (!a.is_zero() && a.degree(v) >= db) {
            const auto& la = a.lead();
            Monomial shift = Monomial::var(v, la.m.deg - db);
            a = a - b.times_monomial(shift).scaled(la.c * inv);
        }
        std::swap(a, b);
    }
    return a.monic();
}

// Image of p under w -> pt(w) for every variable w other than v.
template <class K, class Point>
SparsePoly<K> specialize(const SparsePoly<K>& p, VarId v, const Point& pt) {
    std::vector<typename SparsePoly<K>::Term> ts;
    ts.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        K c = t.c;
        std::uint32_t ev = 0;
        for (const auto& [w, e] : t.m.f) {
            if (w == v) {
                ev = e;
                continue;
            }
            K x(pt(w));
            for (std::uint32_t k = 0; k < e; ++k) c = c * x;
        }
        ts.push_back({Monomial::var(v, ev), std::move(c)});
    }
    return SparsePoly<K>::from_terms(std::move(ts));
}

// gcd of primitive a, b in v when one specialization settles it: a constant
// image gcd means coprime, a full-degree one is checked by exact division.
template <class K>
std::optional<SparsePoly<K>> gcd_by_evaluation(const SparsePoly<K>& a, const SparsePoly<K>& b, VarId v) {
    const std::uint32_t da = a.degree(v), db = b.degree(v);
    for (long attempt = 0; attempt < 3; ++attempt) {
        auto pt = [&](VarId w) { return static_cast<long>((w * 7919u + attempt * 104729u) % 97u) + 2; };
        SparsePoly<K> ia = specialize(a, v, pt), ib = specialize(b, v, pt);
        // Leading coefficients must survive, otherwise the image degree says nothing.
        if (ia.degree(v) != da || ib.degree(v) != db) continue;
        std::uint32_t dg = univariate_gcd(ia, ib, v).degree(v);
        if (dg == 0) return SparsePoly<K>(K(1));
        if (dg == db && exact_divide(a, b)) return b;
        if (dg == da && exact_divide(b, a)) return a;
        return std::nullopt;
    }
    return std::nullopt;
}

template <class K>
SparsePoly<K> gcd_impl(SparsePoly<K> a, SparsePoly<K> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return SparsePoly<K>(K(1));
    std::set<VarId> va = a.vars();
    std::set<VarId> vb = b.vars();
    std::vector<VarId> common;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
    if (common.empty()) return SparsePoly<K>(K(1));

    // The gcd lives in K[common]: it is the gcd of the coefficients of a and b
    // taken over their remaining variables. Small pieces first, stop at 1.
    if (va.size() != common.size() || vb.size() != common.size()) {
        using Term = typename SparsePoly<K>::Term;
        std::vector<SparsePoly<K>> parts;
        auto split = [&](const SparsePoly<K>& p, const std::set<VarId>& own) {
            if (own.size() == common.size()) {
                parts.push_back(p);
                return;
            }
            std::map<Monomial, std::vector<Term>, MonomialLess> groups;
            for (const auto& t : p.terms()) {
                Monomial outer, inner;
                for (const auto& [w, e] : t.m.f) {
                    Monomial& side = std::binary_search(common.begin(), common.end(), w) ? inner : outer;
                    side.f.emplace_back(w, e);
                    side.deg += e;
                }
                groups[outer].push_back({inner, t.c});
            }
            for (auto& [m, ts] : groups) parts.push_back(SparsePoly<K>::from_terms(std::move(ts)));
        };
        split(a, va);
        split(b, vb);
        std::sort(parts.begin(), parts.end(),
                  [](const SparsePoly<K>& x, const SparsePoly<K>& y) { return x.terms().size() < y.terms().size(); });
        SparsePoly<K> g = parts.front();
        for (std::size_t k = 1; k < parts.size(); ++k) {
            if (g.is_constant()) break;
            g = gcd_impl(g, parts[k]);
        }
        return g.is_constant() ? SparsePoly<K>(K(1)) : g.monic();
    }

    VarId v = common.front();
    std::uint32_t best = a.degree(v) + b.degree(v);
    for (VarId w : common) {
        std::uint32_t s = a.degree(w) + b.degree(w);
        if (s < best) {
            best = s;
            v = w;
        }
    }
    if (common.size() == 1) return univariate_gcd(a, b, v);

    SparsePoly<K> ca = content_in(a, v);
    SparsePoly<K> cb = content_in(b, v);
    SparsePoly<K> d = gcd_impl(ca, cb);
    a = exact_quo(a, ca);
    b = exact_quo(b, cb);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    if (auto quick = gcd_by_evaluation(a, b, v)) return (d * *quick).monic();

    // Subresultant PRS.
    SparsePoly<K> g(K(1)), h(K(1));
    while (true) {
        std::uint32_t delta = a.degree(v) - b.degree(v);
        SparsePoly<K> r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) return d.monic();
        a = b;
        b = exact_quo(r, g * h.pow(delta));
        g = a.lead_coeff_in(v);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact_quo(g.pow(delta), h.pow(delta - 1));
        }
    }
    SparsePoly<K> pb = exact_quo(b, content_in(b, v));
    return (d * pb).monic();
}

}  // namespace detail

// Greatest common divisor, scaled so the leading coefficient is 1.
template <class K>
SparsePoly<K> gcd(const SparsePoly<K>& a, const SparsePoly<K>& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
    if (a == b) return a.monic();
    return detail::gcd_impl(a, b);
}

}  // namespace dfsub
