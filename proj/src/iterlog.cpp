#include "dfsub/iterlog.hpp"

#include <algorithm>
#include <set>

namespace dfsub {

RatExpr log_derivative(SymId y) {
    const SymbolInfo& s = sym_info(y);
    if (s.kind == SymKind::BaseX) return RatExpr(1);
    if (s.kind != SymKind::IterLog) {
        throw Error(ErrorKind::NotIterLogExpression, symbol_text(y) + " is not an iterated logarithm");
    }
    // ℓ[c⃗,n]′ = Π_{i=0}^{n-1} 1 / (ℓ[π^{i+1}c⃗, n-i-1] + ψ(π^i c⃗))
    MPoly den(Const(1));
    for (std::size_t i = 0; i < s.level(); ++i) {
        SymId inner = project(y, i + 1);
        Const shift = vec_last(vec_project(s.vec, i));
        den = den * (mvar(inner) + mconst(shift));
    }
    return reduce_fraction(MPoly(Const(1)), den);
}

DerivationTable iterlog_table(const SymSet& symbols) {
    DerivationTable t;
    for (SymId y : symbols) {
        for (std::size_t k = 0; k <= sym_level(y); ++k) {
            SymId p = project(y, k);
            if (!t.has(p)) t.set(p, log_derivative(p));
        }
        if (!is_logsym(y)) t.set(y, log_derivative(y));  // throws
    }
    return t;
}

SymSet essential_elements(const RatExpr& u) { return u.symbols(); }

ClosureSet closure(const SymSet& essential) {
    if (essential.empty()) throw Error(ErrorKind::EmptyInput, "closure of an empty set");
    std::size_t n = 0;
    for (SymId y : essential) {
        if (!is_logsym(y)) {
            throw Error(ErrorKind::NotIterLogExpression, symbol_text(y) + " is not an iterated logarithm");
        }
        n = std::max(n, sym_level(y));
    }
    ClosureSet c;
    c.n = n;
    std::set<SymId> all;
    std::set<SymId> projected;  // ∪_{i≥1} πⁱ(E)
    for (SymId y : essential) {
        all.insert(y);
        for (std::size_t k = 1; k <= n; ++k) {
            SymId p = project(y, k);
            all.insert(p);
            projected.insert(p);
        }
    }
    c.closure.assign(all.begin(), all.end());
    sort_symbols(c.closure);
    c.levels.assign(n + 1, {});
    for (SymId y : c.closure) c.levels[sym_level(y)].push_back(y);
    for (SymId y : essential)
        if (!projected.count(y) && sym_level(y) > 0) c.pi_base.push_back(y);
    sort_symbols(c.pi_base);
    return c;
}

TowerReport towers(const ClosureSet& c) {
    TowerReport r;
    std::set<SymId> acc;
    for (std::size_t i = 0; i <= c.n; ++i) {
        acc.insert(c.levels[i].begin(), c.levels[i].end());
        std::vector<SymId> v(acc.begin(), acc.end());
        sort_symbols(v);
        r.levelled.push_back(std::move(v));
    }
    std::set<SymId> pacc{SymbolTable::instance().x()};
    for (std::size_t i = 0; i <= c.n; ++i) {
        for (SymId y : c.pi_base) pacc.insert(project(y, c.n - i));
        std::vector<SymId> v(pacc.begin(), pacc.end());
        sort_symbols(v);
        r.pi.push_back(std::move(v));
    }
    for (std::size_t i = 0; i <= c.n; ++i) {
        if (!std::includes(r.levelled[i].begin(), r.levelled[i].end(), r.pi[i].begin(), r.pi[i].end(), SymLess{})) {
            throw Error(ErrorKind::Unsupported, "internal: π-tower stage not contained in levelled stage");
        }
    }
    return r;
}

void sort_for_display(std::vector<SymId>& ids) {
    std::sort(ids.begin(), ids.end(), [](SymId a, SymId b) {
        const SymbolInfo& sa = sym_info(a);
        const SymbolInfo& sb = sym_info(b);
        bool la = is_logsym(a), lb = is_logsym(b);
        if (la && lb && sa.level() != sb.level()) return sa.level() > sb.level();
        return symbol_cmp(a, b) < 0;
    });
}

}  // namespace dfsub
