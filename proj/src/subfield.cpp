#include "dfsub/subfield.hpp"

#include <algorithm>
#include <set>

namespace dfsub {

namespace {

// Splits a monomial into its part in vars and the rest.
std::pair<Monomial, Monomial> split_monomial(const Monomial& m, const SymSet& vars) {
    Monomial in, out;
    for (const auto& pr : m.f) {
        if (vars.count(pr.first)) {
            in.f.push_back(pr);
            in.deg += pr.second;
        } else {
            out.f.push_back(pr);
            out.deg += pr.second;
        }
    }
    return {in, out};
}

std::vector<SymId> sorted(const SymSet& s) {
    std::vector<SymId> v(s.begin(), s.end());
    sort_symbols(v);
    return v;
}

FForm normalize_fform(std::map<SymId, MPoly> raw) {
    MPoly g;
    for (const auto& [y, c] : raw) g = g.is_zero() ? c : poly_gcd(g, c);
    std::vector<SymId> order;
    for (const auto& [y, c] : raw) order.push_back(y);
    sort_symbols(order);
    FForm out;
    Const scale(1);
    bool first = true;
    for (SymId y : order) {
        MPoly c = *exact_divide(raw[y], g);
        if (first) {
            scale = Const(1) / canonical_lead(c).c;
            first = false;
        }
        out[y] = RatExpr(c.scaled(scale));
    }
    return out;
}

void append_unique(std::vector<FForm>& dst, FForm f) {
    if (f.empty()) return;
    if (std::find(dst.begin(), dst.end(), f) == dst.end()) dst.push_back(std::move(f));
}

// The exponential part of a polynomial: e-monomial -> coefficient.
std::vector<std::pair<Monomial, MPoly>> group_by_exponential(const MPoly& p, const SymSet& evars) {
    std::vector<std::pair<Monomial, std::vector<MPoly::Term>>> groups;
    for (const auto& t : p.terms()) {
        auto [e, rest] = split_monomial(t.m, evars);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == e; });
        if (it == groups.end()) {
            groups.push_back({e, {}});
            it = groups.end() - 1;
        }
        it->second.push_back({rest, t.c});
    }
    std::vector<std::pair<Monomial, MPoly>> out;
    for (auto& [e, ts] : groups) out.emplace_back(e, MPoly::from_terms(std::move(ts)));
    return out;
}

std::size_t max_monomial_index(const std::vector<std::pair<Monomial, MPoly>>& groups) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < groups.size(); ++k)
        if (canonical_monomial_cmp(groups[k].first, groups[best].first) > 0) best = k;
    return best;
}

std::vector<mpz_class> exponent_row(const Monomial& m, const std::vector<SymId>& evars) {
    std::vector<mpz_class> row;
    for (SymId e : evars) row.emplace_back(static_cast<unsigned long>(m.exponent(e)));
    return row;
}

std::vector<PowerProduct> lattice_products(const std::vector<std::pair<Monomial, MPoly>>& pg,
                                           const std::vector<std::pair<Monomial, MPoly>>& qg, std::size_t ref,
                                           const std::vector<SymId>& evars) {
    if (evars.empty() || pg.empty()) return {};
    auto base = exponent_row(pg[ref].first, evars);
    IntMatrix rows;
    auto push = [&](const Monomial& m) {
        auto r = exponent_row(m, evars);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= base[k];
        rows.push_back(std::move(r));
    };
    for (const auto& g : pg) push(g.first);
    for (const auto& g : qg) push(g.first);
    std::vector<PowerProduct> out;
    for (const auto& row : hermite_normal_form(rows)) {
        PowerProduct pp;
        for (std::size_t k = 0; k < evars.size(); ++k)
            if (row[k] != 0) pp[evars[k]] = row[k].get_si();
        out.push_back(std::move(pp));
    }
    return out;
}

SymSet minus(const SymSet& a, const SymSet& b) {
    SymSet out;
    for (SymId s : a)
        if (!b.count(s)) out.insert(s);
    return out;
}

void finish_forms(SubfieldPresentation& out, const std::vector<FForm>& forms) {
    try {
        out.linear_forms = reduce_forms_over_C(clear_denominators(forms));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonPolynomialCoefficient) throw;
        out.f_forms = forms;
        out.provenance.emplace_back("F-level only: coefficients are not polynomial over C");
    }
}

}  // namespace

std::vector<FForm> fixing_forms(const MPoly& p, const SymSet& vars) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "fixing forms of the zero polynomial");
    std::vector<FForm> out;
    for (const auto& [deg, h] : homogeneous_components(p, vars)) {
        if (deg == 0) continue;
        // Σ cᵢ ∂H/∂yᵢ grouped by the monomial ω in vars.
        std::vector<std::pair<Monomial, std::map<SymId, std::vector<MPoly::Term>>>> groups;
        for (SymId y : h.vars()) {
            if (!vars.count(y)) continue;
            MPoly dh = h.partial(y);
            for (const auto& t : dh.terms()) {
                auto [omega, rest] = split_monomial(t.m, vars);
                auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == omega; });
                if (it == groups.end()) {
                    groups.push_back({omega, {}});
                    it = groups.end() - 1;
                }
                it->second[y].push_back({rest, t.c});
            }
        }
        for (auto& [omega, coeffs] : groups) {
            std::map<SymId, MPoly> raw;
            for (auto& [y, ts] : coeffs) {
                MPoly c = MPoly::from_terms(std::move(ts));
                if (!c.is_zero()) raw[y] = std::move(c);
            }
            if (!raw.empty()) append_unique(out, normalize_fform(std::move(raw)));
        }
    }
    return out;
}

std::vector<FForm> clear_denominators(const std::vector<FForm>& forms) {
    std::vector<FForm> out;
    for (const auto& f : forms) {
        MPoly l(Const(1));
        for (const auto& [y, c] : f) {
            if (c.is_polynomial()) continue;
            l = *exact_divide(l * c.den(), poly_gcd(l, c.den()));
        }
        if (l.is_one()) {
            out.push_back(f);
            continue;
        }
        FForm g;
        for (const auto& [y, c] : f) g[y] = c * RatExpr(l);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<LinearForm> reduce_forms_over_C(const std::vector<FForm>& forms) {
    std::vector<LinearForm> cforms;
    for (const auto& f : forms) {
        std::vector<std::pair<Monomial, LinearForm>> groups;
        for (const auto& [y, c] : f) {
            if (!c.is_polynomial()) {
                throw Error(ErrorKind::NonPolynomialCoefficient, "form coefficient has a nontrivial denominator");
            }
            Const scale = Const(1) / c.den().constant_value();
            for (const auto& t : c.num().terms()) {
                auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t.m; });
                if (it == groups.end()) {
                    groups.push_back({t.m, {}});
                    it = groups.end() - 1;
                }
                it->second[y] += t.c * scale;
            }
        }
        for (auto& [m, lf] : groups) {
            for (auto it = lf.begin(); it != lf.end();) it = it->second.is_zero() ? lf.erase(it) : std::next(it);
            if (!lf.empty()) cforms.push_back(std::move(lf));
        }
    }
    return rref_forms(cforms);
}

SubfieldPresentation antiderivative_subfield(const RatExpr& u, const SymSet& vars, const SymSet& base) {
    SubfieldPresentation out;
    SymSet present;
    for (SymId s : u.symbols())
        if (vars.count(s)) present.insert(s);
    out.vars = sorted(vars);
    out.base_symbols = sorted(base.empty() ? minus(u.symbols(), vars) : base);
    std::vector<FForm> forms;
    if (!u.is_zero())
        for (auto& f : fixing_forms(u.num(), present)) append_unique(forms, std::move(f));
    for (auto& f : fixing_forms(u.den(), present)) append_unique(forms, std::move(f));
    finish_forms(out, forms);
    return out;
}

SubfieldPresentation exponential_subfield(const RatExpr& u, const SymSet& evars, const SymSet& base) {
    SubfieldPresentation out;
    out.vars = sorted(evars);
    out.base_symbols = sorted(base.empty() ? minus(u.symbols(), evars) : base);
    if (u.is_zero()) return out;
    auto pg = group_by_exponential(u.num(), evars);
    auto qg = group_by_exponential(u.den(), evars);
    out.power_products = lattice_products(pg, qg, max_monomial_index(pg), out.vars);
    return out;
}

SubfieldPresentation mixed_subfield(const RatExpr& u, const SymSet& avars, const SymSet& evars, const SymSet& base) {
    SubfieldPresentation out;
    SymSet all = avars;
    all.insert(evars.begin(), evars.end());
    out.vars = sorted(all);
    out.base_symbols = sorted(base.empty() ? minus(u.symbols(), all) : base);
    if (u.is_zero()) return out;
    auto pg = group_by_exponential(u.num(), evars);
    auto qg = group_by_exponential(u.den(), evars);
    std::size_t k = max_monomial_index(pg);
    const MPoly& ak = pg[k].second;
    std::vector<FForm> forms;
    auto add_ratio = [&](const MPoly& a) {
        RatExpr r = reduce_fraction(a, ak);  // α/β with the monic convention
        if (!r.num().is_constant())
            for (auto& f : fixing_forms(r.num(), avars)) append_unique(forms, std::move(f));
        if (!r.den().is_constant())
            for (auto& f : fixing_forms(r.den(), avars)) append_unique(forms, std::move(f));
    };
    for (const auto& g : pg) add_ratio(g.second);
    for (const auto& g : qg) add_ratio(g.second);
    finish_forms(out, forms);
    out.power_products = lattice_products(pg, qg, k, sorted(evars));
    if (!avars.empty() && !evars.empty())
        out.provenance.emplace_back("coefficient ratios normalized by the coefficient of the maximal exponential monomial");
    return out;
}

IterlogAnalysis analyze_iterlog(const RatExpr& u) {
    IterlogAnalysis a;
    a.essential = essential_elements(u);
    for (SymId s : a.essential) {
        if (!is_logsym(s)) {
            throw Error(ErrorKind::NotIterLogExpression, symbol_text(s) + " is not an iterated logarithm");
        }
    }
    SubfieldPresentation& p = a.presentation;
    if (a.essential.empty()) {
        p.provenance.emplace_back("u is constant: the field is C");
        return a;
    }
    SymId x = SymbolTable::instance().x();
    if (a.essential.size() == 1 && *a.essential.begin() == x) {
        p.base_symbols = {x};
        p.provenance.emplace_back("u is rational in x: the field is C(x)");
        a.closure = closure(a.essential);
        return a;
    }
    a.closure = closure(a.essential);
    SymSet vars(a.closure->pi_base.begin(), a.closure->pi_base.end());
    SymSet base;
    for (SymId s : a.closure->closure)
        if (!vars.count(s)) base.insert(s);
    p = antiderivative_subfield(u, vars, base);
    for (SymId y : vars) {
        bool covered = std::any_of(p.linear_forms.begin(), p.linear_forms.end(),
                                   [&](const LinearForm& f) { return f.count(y) > 0; });
        if (!covered) throw Error(ErrorKind::Unsupported, "internal: π-base symbol " + symbol_text(y) + " has no form");
    }
    p.provenance.emplace_back("forms from P and Q over the π-base, per homogeneous component, reduced over C");
    return a;
}

SubfieldPresentation iterlog_subfield(const RatExpr& u) { return analyze_iterlog(u).presentation; }

RatExpr combine_to_single_generator(const SubfieldPresentation& p) {
    SymId x = SymbolTable::instance().x();
    if (p.linear_forms.empty()) {
        if (std::find(p.base_symbols.begin(), p.base_symbols.end(), x) == p.base_symbols.end()) {
            throw Error(ErrorKind::EmptyPresentation, "presentation has no generators");
        }
        return RatExpr::symbol(x);
    }
    MPoly u;
    MPoly xp = mvar(x);
    MPoly power = xp;
    for (const auto& f : p.linear_forms) {
        MPoly l;
        for (const auto& [s, c] : f) l += mvar(s).scaled(c);
        u += power * l;
        power = power * xp;
    }
    return RatExpr(u);
}

Rewritten rewrite_in_generators(const MPoly& p, const std::vector<LinearForm>& forms, const SymSet& vars) {
    auto basis = rref_forms(forms);
    std::vector<SymId> cols = sorted(vars);
    for (const auto& f : basis)
        for (const auto& [s, c] : f)
            if (!vars.count(s)) cols.push_back(s);
    sort_symbols(cols);
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    std::vector<SymId> pivots;
    for (const auto& f : basis) {
        SymId piv = f.begin()->first;
        for (const auto& [s, c] : f)
            if (symbol_cmp(s, piv) < 0) piv = s;
        pivots.push_back(piv);
    }
    std::vector<SymId> free_cols;
    for (SymId s : cols)
        if (std::find(pivots.begin(), pivots.end(), s) == pivots.end()) free_cols.push_back(s);

    Rewritten out;
    auto& table = SymbolTable::instance();
    for (std::size_t k = 0; k < basis.size() + free_cols.size(); ++k) {
        out.coordinates.push_back(table.coordinate("w" + std::to_string(k + 1)));
    }
    out.meaning = basis;
    for (SymId s : free_cols) out.meaning.push_back(LinearForm{{s, Const(1)}});

    // y_free_j = w_{r+j};  y_pivot_i = w_i − Σ_j a_ij w_{r+j}.
    std::map<SymId, MPoly> image;
    for (std::size_t j = 0; j < free_cols.size(); ++j) image[free_cols[j]] = mvar(out.coordinates[basis.size() + j]);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        MPoly e = mvar(out.coordinates[i]);
        for (const auto& [s, c] : basis[i]) {
            if (s == pivots[i]) continue;
            e -= image.at(s).scaled(c);
        }
        image[pivots[i]] = e;
    }
    MPoly r = p;
    for (const auto& [s, e] : image) r = r.substitute(s, e);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        if (r.mentions(out.coordinates[basis.size() + j])) {
            throw Error(ErrorKind::NotFixed, "polynomial depends on the kernel direction " + symbol_text(free_cols[j]));
        }
    }
    out.poly = std::move(r);
    return out;
}

std::vector<LinearForm> minimal_forms(const RatExpr& f) {
    SymSet vars = f.symbols();
    std::vector<FForm> forms;
    if (!f.is_zero())
        for (auto& g : fixing_forms(f.num(), vars)) append_unique(forms, std::move(g));
    for (auto& g : fixing_forms(f.den(), vars)) append_unique(forms, std::move(g));
    return reduce_forms_over_C(forms);
}

std::vector<LinearForm> differential_closure(const RatExpr& u, const DerivationTable& table) {
    std::vector<LinearForm> v = minimal_forms(u);
    std::size_t checked = 0;
    std::vector<LinearForm> queue = v;
    while (checked < queue.size()) {
        const LinearForm l = queue[checked++];
        RatExpr d;
        for (const auto& [s, c] : l) {
            if (sym_info(s).kind == SymKind::Exponential) {
                throw Error(ErrorKind::Unsupported, "differential closure is defined for antiderivative towers only");
            }
            d += RatExpr(c) * symbol_derivative(s, table);
        }
        for (const auto& m : minimal_forms(d)) {
            if (in_span(m, v)) continue;
            v.push_back(m);
            v = rref_forms(v);
            queue.push_back(m);
        }
    }
    return rref_forms(v);
}

}  // namespace dfsub
