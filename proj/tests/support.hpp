// Random generators and brute-force oracles shared by the unit tests and the
// acceptance runner. Nothing here calls the library routine it checks.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dfsub/frontend/parser.hpp"
#include "dfsub/frontend/printer.hpp"
#include "dfsub/iterlog.hpp"
#include "dfsub/linalg.hpp"
#include "dfsub/multipoly.hpp"
#include "dfsub/subfield.hpp"

namespace dfsub::testing {

// Kind of the dfsub::Error raised by f, or nullopt when nothing is thrown.
template <class F>
std::optional<ErrorKind> error_kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline SymId sym(const std::string& text) {
    RatExpr r = parse_expression(text);
    return *r.symbols().begin();
}

inline MPoly poly(const std::string& text) {
    RatExpr r = parse_expression(text);
    return r.num().scaled(Const(1) / r.den().constant_value());
}

inline std::vector<LinearForm> forms_of(const std::vector<std::string>& texts) {
    std::vector<LinearForm> out;
    for (const auto& t : texts) {
        LinearForm f;
        MPoly p = poly(t);
        for (const auto& term : p.terms()) f[term.m.f.at(0).first] = term.c;
        out.push_back(f);
    }
    return out;
}

inline std::vector<std::string> texts_of(const std::vector<SymId>& ids) {
    std::vector<std::string> out;
    for (SymId s : ids) out.push_back(symbol_text(s));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// ---------------------------------------------------------------------------
// Dense-ish rational polynomial with lex division. Used as the divisibility
// oracle: with a single divisor the remainder is unique, so it vanishes
// exactly when the divisor divides.

struct NaivePoly {
    std::map<std::vector<int>, mpq_class> c;  // exponent vector over nvars

    static NaivePoly from(const MPoly& p, const std::vector<SymId>& vars) {
        NaivePoly n;
        for (const auto& t : p.terms()) {
            std::vector<int> e(vars.size(), 0);
            for (const auto& [v, k] : t.m.f) {
                auto it = std::find(vars.begin(), vars.end(), v);
                e[static_cast<std::size_t>(it - vars.begin())] = static_cast<int>(k);
            }
            n.c[e] = t.c.numeric().re();
        }
        return n;
    }

    bool zero() const { return c.empty(); }

    // Largest exponent vector under lex.
    const std::pair<const std::vector<int>, mpq_class>& lead() const { return *c.rbegin(); }

    void add_scaled_shifted(const NaivePoly& g, const mpq_class& k, const std::vector<int>& shift) {
        for (const auto& [e, v] : g.c) {
            std::vector<int> s = e;
            for (std::size_t j = 0; j < s.size(); ++j) s[j] += shift[j];
            mpq_class r = c[s] + k * v;
            if (r == 0)
                c.erase(s);
            else
                c[s] = r;
        }
    }
};

inline bool naive_divides(const NaivePoly& g, NaivePoly p) {
    const auto& [ge, gc] = g.lead();
    NaivePoly rem;
    while (!p.zero()) {
        auto [pe, pc] = p.lead();
        bool ok = true;
        std::vector<int> shift(pe.size());
        for (std::size_t j = 0; j < pe.size(); ++j) {
            shift[j] = pe[j] - ge[j];
            if (shift[j] < 0) ok = false;
        }
        if (!ok) {
            rem.c[pe] = pc;
            p.c.erase(pe);
            continue;
        }
        p.add_scaled_shifted(g, -pc / gc, shift);
    }
    return rem.zero();
}

// ---------------------------------------------------------------------------
// GCD oracle. Inputs are products of factors from a pool of polynomials that
// are irreducible over Q(i): degree-one forms and a few quadratics of full rank.
// The oracle tries every sub-multiset of the pool, keeps those dividing both
// inputs (by naive division) and returns the one of largest degree.

struct GcdInstance {
    MPoly a, b;
    std::vector<MPoly> pool;
    std::vector<int> bound;  // max multiplicity of each pool entry worth trying
};

inline MPoly random_linear(std::mt19937& rng, const std::vector<SymId>& vars) {
    std::uniform_int_distribution<int> coef(-3, 3);
    for (;;) {
        MPoly p(Const(coef(rng)));
        for (SymId v : vars) {
            if (rng() % 2) continue;
            int k = coef(rng);
            if (k != 0) p += mvar(v).scaled(Const(k));
        }
        if (p.total_degree() == 1) return p;
    }
}

inline GcdInstance random_gcd_instance(std::mt19937& rng, const std::vector<SymId>& vars) {
    GcdInstance g;
    MPoly x = mvar(vars[0]), y = mvar(vars[1 % vars.size()]), z = mvar(vars.back());
    g.pool.push_back(random_linear(rng, vars));
    g.pool.push_back(random_linear(rng, vars));
    g.pool.push_back(random_linear(rng, vars));
    if (vars.size() >= 3) g.pool.push_back(x * x + y * y + z * z + MPoly(Const(1)));
    if (vars.size() >= 2) g.pool.push_back(x * y + z + MPoly(Const(2)));
    // Pool entries must be pairwise non-associate for the oracle to be exact.
    for (std::size_t i = 0; i < g.pool.size(); ++i)
        for (std::size_t j = i + 1; j < g.pool.size(); ++j)
            if (canonical_monic(g.pool[i]) == canonical_monic(g.pool[j])) return random_gcd_instance(rng, vars);

    auto build = [&](std::vector<int>& mult) {
        MPoly p(Const(1 + static_cast<long>(rng() % 3)));
        std::uint32_t deg = 0;
        for (std::size_t k = 0; k < g.pool.size(); ++k) {
            int m = static_cast<int>(rng() % 3);
            if (deg + m * g.pool[k].total_degree() > 4) m = 0;
            mult[k] = m;
            deg += m * g.pool[k].total_degree();
            p *= g.pool[k].pow(static_cast<std::uint32_t>(m));
        }
        return p;
    };
    std::vector<int> ma(g.pool.size()), mb(g.pool.size());
    g.a = build(ma);
    g.b = build(mb);
    g.bound.resize(g.pool.size());
    for (std::size_t k = 0; k < g.pool.size(); ++k) g.bound[k] = std::max(ma[k], mb[k]);
    return g;
}

inline MPoly gcd_oracle(const GcdInstance& g, const std::vector<SymId>& vars) {
    NaivePoly na = NaivePoly::from(g.a, vars), nb = NaivePoly::from(g.b, vars);
    MPoly best(Const(1));
    std::uint32_t best_deg = 0;
    std::vector<int> m(g.pool.size(), 0);
    for (;;) {
        MPoly cand(Const(1));
        for (std::size_t k = 0; k < m.size(); ++k) cand *= g.pool[k].pow(static_cast<std::uint32_t>(m[k]));
        NaivePoly nc = NaivePoly::from(cand, vars);
        if (cand.total_degree() >= best_deg && naive_divides(nc, na) && naive_divides(nc, nb)) {
            best = cand;
            best_deg = cand.total_degree();
        }
        std::size_t k = 0;
        while (k < m.size() && m[k] == g.bound[k]) m[k++] = 0;
        if (k == m.size()) break;
        ++m[k];
    }
    return best;
}

// a = k·b for a nonzero constant k.
inline bool associate(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.size() != b.size()) return false;
    Const k = a.lead().c / b.lead().c;
    return a == b.scaled(k);
}

// ---------------------------------------------------------------------------
// Substitution oracle: applies y -> y + c one variable at a time through
// plain substitution and compares by cross multiplication.

inline bool oracle_fixes(const RatExpr& u, const std::map<SymId, Const>& shift) {
    MPoly p = u.num(), q = u.den();
    for (const auto& [s, c] : shift) {
        MPoly image = mvar(s) + MPoly(c);
        p = p.substitute(s, image);
        q = q.substitute(s, image);
    }
    return p * u.den() == u.num() * q;
}

// ---------------------------------------------------------------------------
// Random iterated-logarithm expressions built from linear combinations of
// π-base candidates, so that nontrivial fixing directions actually occur.

inline const std::vector<std::string>& log_pool() {
    static const std::vector<std::string> pool = {
        "ln(x)",          "ln(x+1)",         "ln(x+2)",       "ln(x-i)",           "ln(x+1/2)",
        "ln(ln(x)+1)",    "ln(ln(x+1)+i)",   "ln(ln(x)-2)",   "ln(ln(ln(x)+1)+3)", "ln(x+@e)",
    };
    return pool;
}

inline std::string random_small_const(std::mt19937& rng) {
    static const std::vector<std::string> c = {"1", "-1", "2", "-2", "1/2", "3"};
    return c[rng() % c.size()];
}

// ≤ 4 top symbols, degree ≤ 3 in them.
inline std::string random_iterlog_text(std::mt19937& rng) {
    const auto& pool = log_pool();
    std::vector<std::string> ys;
    std::size_t count = 1 + rng() % 4;
    while (ys.size() < count) {
        const std::string& s = pool[rng() % pool.size()];
        if (std::find(ys.begin(), ys.end(), s) == ys.end()) ys.push_back(s);
    }
    auto linear = [&] {
        std::string out;
        for (const auto& y : ys) {
            if (rng() % 3 == 0) continue;
            out += (out.empty() ? "" : "+") + std::string("(") + random_small_const(rng) + ")*" + y;
        }
        return out.empty() ? ys[0] : out;
    };
    auto coefficient = [&]() -> std::string {
        switch (rng() % 4) {
            case 0: return "1";
            case 1: return "x";
            case 2: return "(x+" + random_small_const(rng) + ")";
            default: return "x^2";
        }
    };
    // A couple of forms reused across terms keeps the fixing space nontrivial.
    std::vector<std::string> shared{linear(), linear()};
    auto pick = [&] { return rng() % 3 == 0 ? linear() : shared[rng() % 2]; };
    auto side = [&](std::size_t terms) {
        std::string out;
        for (std::size_t k = 0; k < terms; ++k) {
            std::uint32_t d = 1 + static_cast<std::uint32_t>(rng() % 3);
            out += (k ? "+" : "") + coefficient() + "*(" + pick() + ")^" + std::to_string(d);
        }
        return out;
    };
    std::string num = side(1 + rng() % 2);
    if (rng() % 3 == 0) return num;
    return "(" + num + ")/(" + side(1 + rng() % 2) + "+" + coefficient() + ")";
}

// u with symbol s sent to a rational depending on s and seed, atoms through
// evaluate_atoms; nullopt when the denominator vanishes there.
inline std::optional<GaussRat> evaluate_at(const RatExpr& u, long seed) {
    auto eval = [&](const MPoly& p) -> std::optional<GaussRat> {
        GaussRat acc(0);
        for (const auto& t : p.terms()) {
            auto c = evaluate_atoms(t.c, seed);
            if (!c) return std::nullopt;
            GaussRat term = *c;
            for (const auto& [s, e] : t.m.f) {
                GaussRat x(mpq_class(static_cast<long>((s * 31u + static_cast<unsigned long>(seed) * 17u) % 89u) + 3, 7));
                for (std::uint32_t k = 0; k < e; ++k) term *= x;
            }
            acc += term;
        }
        return acc;
    };
    auto n = eval(u.num()), d = eval(u.den());
    if (!n || !d || d->is_zero()) return std::nullopt;
    return *n / *d;
}

}  // namespace dfsub::testing
