#pragma once

#include <vector>

#include "dfsub/multipoly.hpp"

namespace dfsub {

// ℓ[c⃗, n]′ as a product of reciprocals of the lower levels plus shifts.
RatExpr log_derivative(SymId y);

// Derivation table covering every symbol of `symbols` and their π-chains.
DerivationTable iterlog_table(const SymSet& symbols);

// Symbols on which the reduced u actually depends.
SymSet essential_elements(const RatExpr& u);

struct ClosureSet {
    std::vector<SymId> closure;              // 𝔈, canonical order
    std::size_t n = 0;                       // minimal n with πⁿ(E) = {x}
    std::vector<std::vector<SymId>> levels;  // T₀ … T_n
    std::vector<SymId> pi_base;              // 𝒫
};

// EmptyInput on an empty set; NotIterLogExpression on a generic symbol.
ClosureSet closure(const SymSet& essential);

struct TowerReport {
    // Index i holds the symbols of Kᵢ (resp. Pᵢ), i = 0 … n.
    std::vector<std::vector<SymId>> levelled;
    std::vector<std::vector<SymId>> pi;
};

TowerReport towers(const ClosureSet& c);

// Display order used for field listings: higher levels first, x last.
void sort_for_display(std::vector<SymId>& ids);

}  // namespace dfsub
