#include "dfsub/multipoly.hpp"

#include <algorithm>

namespace dfsub {

namespace {

std::vector<std::pair<SymId, std::uint32_t>> canonical_factors(const Monomial& m) {
    auto f = m.f;
    std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return symbol_cmp(a.first, b.first) > 0; });
    return f;
}

}  // namespace

int canonical_monomial_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    if (a.f == b.f) return 0;
    auto fa = canonical_factors(a);
    auto fb = canonical_factors(b);
    std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (fa[k].first != fb[k].first) return symbol_cmp(fa[k].first, fb[k].first) > 0 ? 1 : -1;
        if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second ? 1 : -1;
    }
    if (fa.size() != fb.size()) return fa.size() > fb.size() ? 1 : -1;
    return 0;
}

const MPoly::Term& canonical_lead(const MPoly& p) {
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t k = 1; k < ts.size() && ts[k].m.deg == ts[0].m.deg; ++k) {
        if (canonical_monomial_cmp(ts[k].m, ts[best].m) > 0) best = k;
    }
    return ts[best];
}

MPoly canonical_monic(const MPoly& p) {
    if (p.is_zero()) return p;
    const Const& lc = canonical_lead(p).c;
    if (lc.is_one()) return p;
    return p.scaled(Const(1) / lc);
}

std::vector<MPoly::Term> canonical_terms(const MPoly& p) {
    auto ts = p.terms();
    std::stable_sort(ts.begin(), ts.end(),
                     [](const MPoly::Term& a, const MPoly::Term& b) { return canonical_monomial_cmp(a.m, b.m) > 0; });
    return ts;
}

MPoly poly_gcd(const MPoly& a, const MPoly& b) { return canonical_monic(gcd(a, b)); }

std::optional<MPoly> divides(const MPoly& a, const MPoly& b) { return exact_divide(b, a); }

MPoly partial(const MPoly& p, SymId s) { return p.partial(s); }

MPoly translate(const MPoly& p, const Shift& shift) {
    std::vector<std::pair<VarId, Const>> sh(shift.begin(), shift.end());
    return p.translate(sh);
}

MPoly rescale(const MPoly& p, const Shift& scale) {
    std::vector<MPoly::Term> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) {
        Const c = t.c;
        for (const auto& [v, e] : t.m.f) {
            auto it = scale.find(v);
            if (it == scale.end()) continue;
            for (std::uint32_t k = 0; k < e; ++k) c *= it->second;
        }
        ts.push_back({t.m, std::move(c)});
    }
    return MPoly::from_terms(std::move(ts));
}

std::vector<std::pair<std::uint32_t, MPoly>> homogeneous_components(const MPoly& p, const SymSet& vars) {
    std::map<std::uint32_t, std::vector<MPoly::Term>> parts;
    for (const auto& t : p.terms()) {
        std::uint32_t d = 0;
        for (const auto& [v, e] : t.m.f)
            if (vars.count(v)) d += e;
        parts[d].push_back(t);
    }
    std::vector<std::pair<std::uint32_t, MPoly>> out;
    for (auto& [d, ts] : parts) out.emplace_back(d, MPoly::from_terms(std::move(ts)));
    if (out.empty()) out.emplace_back(0, MPoly());
    return out;
}

SymSet symbols_of(const MPoly& p) { return p.vars(); }

RatExpr RatExpr::raw(MPoly num, MPoly den) {
    RatExpr r;
    if (num.is_zero()) return r;
    const Const lc = canonical_lead(den).c;
    if (!lc.is_one()) {
        Const inv = Const(1) / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatExpr reduce_fraction(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "fraction with zero denominator");
    if (num.is_zero()) return RatExpr();
    if (den.is_constant()) return RatExpr::raw(num, den);
    MPoly g = gcd(num, den);
    if (g.is_constant()) return RatExpr::raw(num, den);
    return RatExpr::raw(*exact_divide(num, g), *exact_divide(den, g));
}

RatExpr RatExpr::operator-() const {
    RatExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

RatExpr operator+(const RatExpr& a, const RatExpr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return RatExpr::raw(a.num_ + b.num_, a.den_);
        return reduce_fraction(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_constant() || b.den_.is_constant()) {
        return reduce_fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    MPoly g = gcd(a.den_, b.den_);
    MPoly ad = *exact_divide(a.den_, g);
    MPoly bd = *exact_divide(b.den_, g);
    MPoly num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return RatExpr();
    // Both inputs are reduced, so num can only share factors with g.
    if (g.is_constant()) return RatExpr::raw(num, a.den_ * bd);
    MPoly h = gcd(num, g);
    if (h.is_constant()) return RatExpr::raw(num, a.den_ * bd);
    return RatExpr::raw(*exact_divide(num, h), *exact_divide(a.den_, h) * bd);
}

RatExpr operator*(const RatExpr& a, const RatExpr& b) {
    if (a.is_zero() || b.is_zero()) return RatExpr();
    if (a.den_.is_one() && b.den_.is_one()) return RatExpr::raw(a.num_ * b.num_, a.den_);
    // Cross-cancel; both inputs are already reduced.
    MPoly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
    if (!d2.is_constant() && !n1.is_constant()) {
        MPoly g = gcd(n1, d2);
        if (!g.is_constant()) {
            n1 = *exact_divide(n1, g);
            d2 = *exact_divide(d2, g);
        }
    }
    if (!d1.is_constant() && !n2.is_constant()) {
        MPoly g = gcd(n2, d1);
        if (!g.is_constant()) {
            n2 = *exact_divide(n2, g);
            d1 = *exact_divide(d1, g);
        }
    }
    return RatExpr::raw(n1 * n2, d1 * d2);
}

RatExpr operator/(const RatExpr& a, const RatExpr& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero expression");
    RatExpr inv = RatExpr::raw(b.den_, b.num_);
    return a * inv;
}

RatExpr RatExpr::pow(long e) const {
    if (e < 0) return RatExpr(1) / pow(-e);
    return raw(num_.pow(static_cast<std::uint32_t>(e)), den_.pow(static_cast<std::uint32_t>(e)));
}

SymSet RatExpr::symbols() const {
    SymSet s = num_.vars();
    SymSet d = den_.vars();
    s.insert(d.begin(), d.end());
    return s;
}

const RatExpr& DerivationTable::get(SymId s) const {
    auto it = map_.find(s);
    if (it == map_.end()) throw Error(ErrorKind::UnknownSymbol, "no derivative declared for " + symbol_text(s));
    return it->second;
}

RatExpr symbol_derivative(SymId s, const DerivationTable& table) {
    const RatExpr& d = table.get(s);
    if (sym_info(s).kind == SymKind::Exponential) return d * RatExpr::symbol(s);
    return d;
}

RatExpr apply_derivation(const MPoly& p, const DerivationTable& table) {
    RatExpr out;
    for (SymId s : p.vars()) {
        MPoly dp = p.partial(s);
        out += RatExpr(dp) * symbol_derivative(s, table);
    }
    return out;
}

RatExpr apply_derivation(const RatExpr& u, const DerivationTable& table) {
    if (u.is_polynomial()) return apply_derivation(u.num(), table) / RatExpr(u.den());
    // (P/Q)′ = (P′Q − PQ′)/Q². With P′ = Pd/L and Q′ = Qd/L the result is
    // M/(L·Q²), M = Pd·Q − P·Qd. Since gcd(P, Q) = 1, gcd(M, Q) = gcd(Qd, Q),
    // and whatever M still shares with Q² divides that; the rest divides L.
    const MPoly& p = u.num();
    const MPoly& q = u.den();
    RatExpr dp = apply_derivation(p, table);
    RatExpr dq = apply_derivation(q, table);
    MPoly l = dp.den();
    if (dq.den() != l) {
        MPoly g = gcd(l, dq.den());
        l = *exact_divide(l, g) * dq.den();
    }
    MPoly pd = dp.num() * *exact_divide(l, dp.den());
    MPoly qd = dq.num() * *exact_divide(l, dq.den());
    MPoly m = pd * q - p * qd;
    if (m.is_zero()) return RatExpr();
    MPoly den = q * q;
    MPoly g1 = gcd(qd.is_zero() ? q : qd, q);
    if (!g1.is_constant()) {
        m = *exact_divide(m, g1);
        den = *exact_divide(den, g1);
        MPoly g2 = gcd(m, g1);
        if (!g2.is_constant()) {
            m = *exact_divide(m, g2);
            den = *exact_divide(den, g2);
        }
    }
    den *= l;
    while (!l.is_constant()) {
        MPoly h = gcd(m, l);
        if (h.is_constant()) break;
        auto dq2 = exact_divide(den, h);
        if (!dq2) break;
        m = *exact_divide(m, h);
        den = std::move(*dq2);
    }
    return RatExpr::raw(m, den);
}

}  // namespace dfsub
