#include "dfsub/certify.hpp"

#include <algorithm>
#include <optional>

namespace dfsub {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified:
            return "Certified";
        case Verdict::Refuted:
            return "Refuted";
        case Verdict::Unknown:
            return "Unknown";
    }
    return "Unknown";
}

namespace {

bool coprime(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_constant() && b.is_constant() && !(a.is_zero() && b.is_zero());
    return poly_gcd(a, b).is_constant();
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    return out;
}

// Rational root of a univariate polynomial with rational coefficients, small content only.
std::optional<mpq_class> rational_root(const std::vector<MPoly>& cs) {
    std::vector<mpq_class> q;
    for (const auto& c : cs) {
        if (c.is_zero()) {
            q.emplace_back(0);
            continue;
        }
        if (!c.is_constant()) return std::nullopt;
        Const k = c.constant_value();
        if (!k.is_numeric()) return std::nullopt;
        const GaussRat& g = k.numeric();
        if (!g.is_real()) return std::nullopt;
        q.push_back(g.re());
    }
    if (q.size() < 2) return std::nullopt;
    if (sgn(q[0]) == 0) return mpq_class(0);
    mpz_class l = 1;
    for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpq_class sa0 = abs(q.front() * l), san = abs(q.back() * l);
    mpz_class a0 = sa0.get_num(), an = san.get_num();
    const mpz_class limit = 1000000;
    if (a0 > limit || an > limit) return std::nullopt;
    auto eval = [&](const mpq_class& r) {
        mpq_class acc = 0;
        for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * r + *it;
        return acc;
    };
    for (long p : divisors(a0.get_si()))
        for (long d : divisors(an.get_si()))
            for (long sign : {1L, -1L}) {
                mpq_class r(sign * p, d);
                r.canonicalize();
                if (sgn(eval(r)) == 0) return r;
            }
    return std::nullopt;
}

Certificate refuted(std::string clause, std::size_t index, std::string reason) {
    Certificate c;
    c.verdict = Verdict::Refuted;
    c.clause = std::move(clause);
    c.index = index;
    c.reason = std::move(reason);
    return c;
}

}  // namespace

Certificate jie_check(const std::vector<JieTriple>& triples, JieLevel level) {
    std::optional<Certificate> unknown;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& t = triples[i];
        if (!coprime(t.a, t.b) || !coprime(t.b, t.c) || !coprime(t.a, t.c)) {
            return refuted("coprimality", i, "A, B, C of triple " + std::to_string(i) + " are not pairwise coprime");
        }
        if (t.c.is_constant()) return refuted("C1 (irreducible)", i, "C of triple " + std::to_string(i) + " is constant");
        auto irr = irreducible_linear_check(t.c, t.vars);
        if (irr.verdict == Irreducibility::Reducible) {
            Certificate c = refuted("C1 (irreducible)", i, "C of triple " + std::to_string(i) + " is reducible");
            c.witness = irr.factors;
            return c;
        }
        if (irr.verdict == Irreducibility::Unknown && !unknown) {
            Certificate c;
            c.verdict = Verdict::Unknown;
            c.clause = "C1 (irreducible)";
            c.index = i;
            c.reason = "irreducibility of C in triple " + std::to_string(i) + " assumed, unverified (degree > 2)";
            unknown = c;
        }
    }
    for (std::size_t i = 0; i < triples.size(); ++i) {
        for (std::size_t j = 0; j < triples.size(); ++j) {
            if (i != j && divides(triples[i].c, triples[j].c)) {
                return refuted("C1 (non-associate)", i,
                               "C of triple " + std::to_string(i) + " divides C of triple " + std::to_string(j));
            }
            if (!triples[j].b.is_zero() && divides(triples[i].c, triples[j].b)) {
                return refuted("C1 (C does not divide B)", i,
                               "C of triple " + std::to_string(i) + " divides B of triple " + std::to_string(j));
            }
        }
    }
    std::vector<SymId> witnesses;
    if (level == JieLevel::JIE) {
        for (std::size_t i = 0; i < triples.size(); ++i) {
            const auto& t = triples[i];
            std::vector<SymId> vs(t.vars.begin(), t.vars.end());
            sort_symbols(vs);
            auto it = std::find_if(vs.begin(), vs.end(), [&](SymId v) {
                return t.c.mentions(v) && !t.a.mentions(v) && !t.b.mentions(v);
            });
            if (it == vs.end()) {
                return refuted("C2", i, "no variable of triple " + std::to_string(i) + " occurs in C but not in A or B");
            }
            witnesses.push_back(*it);
        }
    }
    if (unknown) return *unknown;
    Certificate c;
    c.verdict = Verdict::Certified;
    c.witness_vars = std::move(witnesses);
    c.reason = level == JieLevel::JIE ? "coprimality, C1 and C2 hold" : "coprimality and C1 hold";
    return c;
}

std::vector<MPoly> linear_factor_candidates(const MPoly& t, const SymSet& vars) {
    std::vector<MPoly> out;
    auto add = [&](const MPoly& r) {
        MPoly m = canonical_monic(r);
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    };
    std::vector<MPoly> work{t};
    while (!work.empty()) {
        MPoly z = work.back();
        work.pop_back();
        if (z.is_constant()) continue;
        std::vector<SymId> vs;
        for (SymId v : z.vars())
            if (vars.count(v)) vs.push_back(v);
        sort_symbols(vs);
        for (SymId y : vs) {
            std::uint32_t d = z.degree(y);
            auto cs = z.as_univariate(y);
            if (d == 1) {
                MPoly content = poly_gcd(cs[0].is_zero() ? cs[1] : cs[0], cs[1]);
                add(*exact_divide(z, content));
                if (!content.is_constant()) work.push_back(content);
                break;
            }
            if (d > 2 && z.vars().size() == 1) {
                if (auto r = rational_root(cs)) {
                    MPoly lin = mvar(y) - mconst(Const(*r));
                    add(lin);
                    work.push_back(*exact_divide(z, lin));
                }
                break;
            }
            if (d == 2 && z.vars().size() == 1 && cs[2].is_constant()) {
                Const a = cs[2].constant_value();
                Const b = cs[1].constant_value();
                Const c = cs[0].constant_value();
                Const disc = b * b - Const(4) * a * c;
                if (!disc.is_numeric()) break;
                auto s = disc.numeric().sqrt();
                if (!s) break;
                Const root1 = (-b + Const(*s)) / (Const(2) * a);
                Const root2 = (-b - Const(*s)) / (Const(2) * a);
                add(mvar(y) - mconst(root1));
                add(mvar(y) - mconst(root2));
                break;
            }
        }
    }
    return out;
}

Certificate no_antiderivative_certificate(const MPoly& s, const MPoly& t, const std::optional<SymSet>& vars) {
    if (t.is_constant()) throw Error(ErrorKind::ConstantInput, "T must be nonconstant");
    if (!s.is_zero() && !poly_gcd(s, t).is_constant()) throw Error(ErrorKind::NotCoprime, "S and T share a factor");
    SymSet vs = vars ? *vars : t.vars();
    for (const auto& r : linear_factor_candidates(t, vs)) {
        auto q = divides(r, t);
        if (!q) continue;
        if (divides(r, *q)) continue;
        if (!s.is_zero() && !poly_gcd(r, s).is_constant()) continue;
        Certificate c;
        c.verdict = Verdict::Certified;
        c.witness = {r};
        c.reason = "R divides T, R² does not divide T: no element of the tower has derivative S/T";
        return c;
    }
    Certificate c;
    c.verdict = Verdict::Unknown;
    c.clause = "simple irreducible factor";
    c.reason = "no irreducible factor R of T with R² ∤ T was found";
    return c;
}

bool substitution_fixes(const RatExpr& u, const Shift& shift, const Shift& scale) {
    for (const auto& [s, c] : scale)
        if (c.is_zero()) throw Error(ErrorKind::ZeroScale, "zero scale for " + symbol_text(s));
    auto act = [&](const MPoly& p) { return rescale(translate(p, shift), scale); };
    MPoly p = act(u.num());
    MPoly q = act(u.den());
    if (scale.empty()) {
        // Translations keep the top-degree part, so P/Q stays reduced and monic.
        return p == u.num() && q == u.den();
    }
    return p * u.den() == u.num() * q;
}

}  // namespace dfsub
