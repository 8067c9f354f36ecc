#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfsub/linalg.hpp"
#include "dfsub/multipoly.hpp"

namespace dfsub {

enum class Verdict { Certified, Refuted, Unknown };

std::string_view verdict_name(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Unknown;
    std::string clause;                 // violated or undecided clause, empty when certified
    std::optional<std::size_t> index;   // triple the clause refers to
    std::vector<MPoly> witness;         // e.g. the factor R
    std::vector<SymId> witness_vars;    // 𝔵_{Cᵢ} per triple
    std::string reason;
};

/// y′ = A/(CB) over the polynomial ring in `vars`.
struct JieTriple {
    MPoly a, b, c;
    SymSet vars;
};

// IE checks coprimality and C1; JIE adds C2.
enum class JieLevel { IE, JIE };

Certificate jie_check(const std::vector<JieTriple>& triples, JieLevel level = JieLevel::JIE);

// Searches T for an irreducible factor R with R² ∤ T. NotCoprime when S and T
// share a factor; ConstantInput when T is constant.
Certificate no_antiderivative_certificate(const MPoly& s, const MPoly& t, const std::optional<SymSet>& vars = std::nullopt);

// Degree-1 factors of t found by the extraction heuristics, canonical monic.
std::vector<MPoly> linear_factor_candidates(const MPoly& t, const SymSet& vars);

// Whether y -> y + shift[y], e -> scale[e]·e fixes u. ZeroScale on a zero scale.
bool substitution_fixes(const RatExpr& u, const Shift& shift, const Shift& scale = {});

}  // namespace dfsub
