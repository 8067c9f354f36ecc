#include "dfsub/probe.hpp"

#include <algorithm>

#include "dfsub/certify.hpp"

namespace dfsub {

std::vector<Const> default_probe_values() {
    return {Const(0), Const(1), Const(-1), Const(2), Const(-2), Const(mpq_class(1, 2))};
}

Shift probe_point(std::size_t index, const std::vector<SymId>& vars, const std::vector<Const>& values) {
    Shift s;
    for (SymId v : vars) {
        const Const& c = values[index % values.size()];
        index /= values.size();
        if (!c.is_zero()) s[v] = c;
    }
    return s;
}

namespace {

std::size_t grid_size(std::size_t nvars, std::size_t nvalues) {
    std::size_t n = 1;
    for (std::size_t k = 0; k < nvars; ++k) n *= nvalues;
    return n;
}

// 1 when fixed, plus 2 when the forms disagree.
int evaluate_point(const RatExpr& u, const std::vector<LinearForm>& forms, const Shift& shift) {
    bool fixes = substitution_fixes(u, shift);
    bool vanish = std::all_of(forms.begin(), forms.end(), [&](const LinearForm& f) { return evaluate_form(f, shift).is_zero(); });
    return (fixes ? 1 : 0) | (fixes != vanish ? 2 : 0);
}

}  // namespace

ProbeReport probe_grid_serial(const RatExpr& u, const std::vector<LinearForm>& forms, const std::vector<SymId>& vars,
                              const std::vector<Const>& values) {
    ProbeReport r;
    r.points = grid_size(vars.size(), values.size());
    for (std::size_t k = 0; k < r.points; ++k) {
        int res = evaluate_point(u, forms, probe_point(k, vars, values));
        if (res & 1) ++r.fixed;
        if (res & 2) {
            ++r.mismatches;
            r.mismatch_points.push_back(k);
        }
    }
    return r;
}

ProbeReport probe_grid_parallel(const RatExpr& u, const std::vector<LinearForm>& forms, const std::vector<SymId>& vars,
                                const std::vector<Const>& values) {
    ProbeReport r;
    r.points = grid_size(vars.size(), values.size());
    std::vector<int> results(r.points, 0);
    const auto n = static_cast<long long>(r.points);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long k = 0; k < n; ++k) {
        auto idx = static_cast<std::size_t>(k);
        results[idx] = evaluate_point(u, forms, probe_point(idx, vars, values));
    }
    for (std::size_t k = 0; k < r.points; ++k) {
        if (results[k] & 1) ++r.fixed;
        if (results[k] & 2) {
            ++r.mismatches;
            r.mismatch_points.push_back(k);
        }
    }
    return r;
}

}  // namespace dfsub
