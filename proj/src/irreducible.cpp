#include <algorithm>

#include "dfsub/linalg.hpp"
#include "dfsub/multipoly.hpp"

namespace dfsub {

namespace {

std::optional<Const> const_sqrt(const Const& c) {
    if (!c.is_numeric()) return std::nullopt;
    auto r = c.numeric().sqrt();
    if (!r) return std::nullopt;
    return Const(*r);
}

// Square root of p when it is the square of a polynomial with coefficients
// that have square roots in Q(i).
std::optional<MPoly> poly_sqrt(const MPoly& p) {
    if (p.is_zero()) return MPoly();
    const auto& lt = p.lead();
    Monomial half;
    for (const auto& [v, e] : lt.m.f) {
        if (e % 2 != 0) return std::nullopt;
        half.f.emplace_back(v, e / 2);
    }
    half.deg = lt.m.deg / 2;
    auto c = const_sqrt(lt.c);
    if (!c) return std::nullopt;
    MPoly s = MPoly::monomial(half, *c);
    for (std::size_t guard = 0; guard < 4 * p.size() + 8; ++guard) {
        MPoly r = p - s * s;
        if (r.is_zero()) return s;
        const auto& rt = r.lead();
        if (!half.divides(rt.m) || grlex_cmp(rt.m, lt.m) > 0) return std::nullopt;
        Monomial q = quotient(rt.m, half);
        if (grlex_cmp(q, half) >= 0) return std::nullopt;
        s = s + MPoly::monomial(q, rt.c / (*c * Const(2)));
    }
    return std::nullopt;
}

Const monomial_coeff(const MPoly& p, const Monomial& m) {
    for (const auto& t : p.terms())
        if (t.m == m) return t.c;
    return Const();
}

// Factors a quadratic with a nonzero y² coefficient as a product of two
// linear polynomials, when the discriminant is a computable square.
std::optional<std::vector<MPoly>> split_in(const MPoly& p, SymId y) {
    auto cs = p.as_univariate(y);
    if (cs.size() != 3 || !cs[2].is_constant()) return std::nullopt;
    Const a = cs[2].constant_value();
    const MPoly& b = cs[1];
    const MPoly& c = cs[0];
    MPoly disc = b * b - c.scaled(a * Const(4));
    auto s = poly_sqrt(disc);
    if (!s) return std::nullopt;
    Const inv = Const(1) / (a * Const(2));
    MPoly r1 = (-b + *s).scaled(inv);
    MPoly r2 = (-b - *s).scaled(inv);
    MPoly f1 = mvar(y) - r1;
    MPoly f2 = (mvar(y) - r2).scaled(a);
    if (f1 * f2 != p) return std::nullopt;
    return std::vector<MPoly>{canonical_monic(f1), f2.scaled(canonical_lead(f1).c)};
}

std::vector<MPoly> quadratic_factors(const MPoly& p, const std::vector<SymId>& vars) {
    for (SymId y : vars) {
        if (p.degree(y) == 2) {
            if (auto f = split_in(p, y)) return *f;
            return {};
        }
    }
    // No square terms: shear z -> z + y to create one, then shear back.
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = i + 1; j < vars.size(); ++j) {
            Monomial m = Monomial::var(vars[i]) * Monomial::var(vars[j]);
            if (monomial_coeff(p, m).is_zero()) continue;
            SymId y = vars[i], z = vars[j];
            MPoly sheared = p.substitute(z, mvar(z) + mvar(y));
            auto f = split_in(sheared, y);
            if (!f) return {};
            std::vector<MPoly> out;
            for (const auto& g : *f) out.push_back(g.substitute(z, mvar(z) - mvar(y)));
            Const scale = canonical_lead(out[0]).c;
            out[0] = out[0].scaled(Const(1) / scale);
            out[1] = out[1].scaled(scale);
            return out;
        }
    }
    return {};
}

}  // namespace

IrreducibleResult irreducible_linear_check(const MPoly& p, const std::optional<SymSet>& vars_opt) {
    if (p.is_zero() || p.is_constant()) throw Error(ErrorKind::ConstantInput, "irreducibility of a constant");
    SymSet vars = vars_opt ? *vars_opt : p.vars();
    std::uint32_t deg = p.degree_in(vars);
    if (deg == 0) throw Error(ErrorKind::ConstantInput, "polynomial is constant in the given variables");
    IrreducibleResult out;
    if (deg == 1) {
        // Coefficients of each variable and the free part, over the other symbols.
        MPoly content;
        MPoly rest = p;
        for (SymId v : vars) {
            auto cs = rest.as_univariate(v);
            if (cs.size() < 2) continue;
            content = content.is_zero() ? cs[1] : poly_gcd(content, cs[1]);
            rest = cs[0];
        }
        if (!rest.is_zero()) content = content.is_zero() ? rest : poly_gcd(content, rest);
        if (content.is_constant()) {
            out.verdict = Irreducibility::Irreducible;
        } else {
            out.verdict = Irreducibility::Reducible;
            out.factors = {content, *exact_divide(p, content)};
        }
        return out;
    }
    if (deg > 2) return out;
    SymSet all = p.vars();
    if (!std::includes(vars.begin(), vars.end(), all.begin(), all.end())) return out;

    std::vector<SymId> vs(all.begin(), all.end());
    sort_symbols(vs);
    std::size_t n = vs.size();
    ConstMatrix m(n + 1, std::vector<Const>(n + 1));
    std::map<SymId, std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k) idx[vs[k]] = k;
    Const half = Const(GaussRat(mpq_class(1, 2)));
    for (const auto& t : p.terms()) {
        std::vector<std::size_t> slots;
        for (const auto& [v, e] : t.m.f)
            for (std::uint32_t k = 0; k < e; ++k) slots.push_back(idx[v]);
        while (slots.size() < 2) slots.push_back(n);
        std::size_t a = slots[0], b = slots[1];
        if (a == b) {
            m[a][a] += t.c;
        } else {
            m[a][b] += t.c * half;
            m[b][a] += t.c * half;
        }
    }
    if (rank(m) >= 3) {
        out.verdict = Irreducibility::Irreducible;
    } else {
        out.verdict = Irreducibility::Reducible;
        out.factors = quadratic_factors(p, vs);
    }
    return out;
}

}  // namespace dfsub
