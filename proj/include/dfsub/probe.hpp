#pragma once

#include <vector>

#include "dfsub/linalg.hpp"
#include "dfsub/multipoly.hpp"

namespace dfsub {

// {0, 1, -1, 2, -2, 1/2}
std::vector<Const> default_probe_values();

struct ProbeReport {
    std::size_t points = 0;
    std::size_t fixed = 0;        // points where the substitution fixes u
    std::size_t mismatches = 0;   // points where "fixes u" and "forms vanish" disagree
    std::vector<std::size_t> mismatch_points;  // grid indices, increasing

    friend bool operator==(const ProbeReport&, const ProbeReport&) = default;
};

// Shift vector of grid point `index` (mixed radix over values, first var fastest).
Shift probe_point(std::size_t index, const std::vector<SymId>& vars, const std::vector<Const>& values);

// Checks on every grid point that y -> y + c fixes u exactly when all forms
// vanish at c. The serial version is the reference for the parallel one.
ProbeReport probe_grid_serial(const RatExpr& u, const std::vector<LinearForm>& forms, const std::vector<SymId>& vars,
                              const std::vector<Const>& values);
ProbeReport probe_grid_parallel(const RatExpr& u, const std::vector<LinearForm>& forms, const std::vector<SymId>& vars,
                                const std::vector<Const>& values);

}  // namespace dfsub
