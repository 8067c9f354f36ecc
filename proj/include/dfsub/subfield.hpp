#pragma once

#include <map>
#include <string>
#include <vector>

#include "dfsub/iterlog.hpp"
#include "dfsub/linalg.hpp"
#include "dfsub/multipoly.hpp"

namespace dfsub {

/// A linear form whose coefficients lie in the base field.
using FForm = std::map<SymId, RatExpr>;

/// Integer exponents over exponential symbols.
using PowerProduct = std::map<SymId, long>;

struct SubfieldPresentation {
    std::vector<LinearForm> linear_forms;   // RREF over the canonical order
    std::vector<FForm> f_forms;             // only when C-reduction was impossible
    std::vector<PowerProduct> power_products;  // HNF rows
    std::vector<SymId> base_symbols;
    std::vector<SymId> vars;  // variables the forms and products range over
    std::vector<std::string> provenance;
};

// Forms Aⱼ with translate(p, c) = p iff every Aⱼ(c) = 0; one group per
// homogeneous component and monomial in vars. ZeroPolynomial on p = 0.
std::vector<FForm> fixing_forms(const MPoly& p, const SymSet& vars);

// Multiplies each form by the lcm of its coefficient denominators.
std::vector<FForm> clear_denominators(const std::vector<FForm>& forms);

// C-linear system with the same solution set in Cⁿ, in RREF. Coefficients
// must be polynomials (NonPolynomialCoefficient otherwise).
std::vector<LinearForm> reduce_forms_over_C(const std::vector<FForm>& forms);

SubfieldPresentation antiderivative_subfield(const RatExpr& u, const SymSet& vars, const SymSet& base = {});
SubfieldPresentation exponential_subfield(const RatExpr& u, const SymSet& evars, const SymSet& base = {});
SubfieldPresentation mixed_subfield(const RatExpr& u, const SymSet& avars, const SymSet& evars,
                                    const SymSet& base = {});

struct IterlogAnalysis {
    SymSet essential;
    std::optional<ClosureSet> closure;
    SubfieldPresentation presentation;
};

// The full iterated-logarithm pipeline.
IterlogAnalysis analyze_iterlog(const RatExpr& u);
SubfieldPresentation iterlog_subfield(const RatExpr& u);

// u = Σ xⁱ Lᵢ over the forms of p; EmptyPresentation when p describes C.
RatExpr combine_to_single_generator(const SubfieldPresentation& p);

// Rewrites p in coordinates w = (forms, complementary kernel directions) and
// checks that no kernel coordinate survives (NotFixed otherwise). The
// returned polynomial uses fresh coordinate symbols w1, w2, ...
struct Rewritten {
    MPoly poly;
    std::vector<SymId> coordinates;  // w1..wr for the forms, then kernel ones
    std::vector<LinearForm> meaning;  // what each coordinate stands for
};
Rewritten rewrite_in_generators(const MPoly& p, const std::vector<LinearForm>& forms, const SymSet& vars);

// The smallest linear span V of symbols with u ∈ C(V) and C(V) closed under
// the derivation, assuming every symbol is an algebraically independent
// antiderivative over C whose subfields are all of the form C(span).
std::vector<LinearForm> differential_closure(const RatExpr& u, const DerivationTable& table);

// Minimal C-forms whose field contains f, treating every symbol as a variable.
std::vector<LinearForm> minimal_forms(const RatExpr& f);

}  // namespace dfsub
