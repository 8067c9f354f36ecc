#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfsub/certify.hpp"
#include "dfsub/frontend/parser.hpp"
#include "dfsub/subfield.hpp"

namespace dfsub {

struct JieSpec {
    std::string a, b, c;
};

struct TowerDecl {
    std::string name;
    SymKind kind = SymKind::Antiderivative;  // or Exponential
    std::string derivative;  // y′ for antiderivatives, e′/e for exponentials
    std::optional<JieSpec> jie;
};

/// A declared differential tower over C(x).
struct Tower {
    std::vector<TowerDecl> decls;
    std::vector<SymId> symbols;  // declaration order
    DerivationTable table;
    std::map<SymId, std::size_t> stage;  // x is stage 0

    SymbolLookup lookup() const;
    std::size_t stage_of(SymId s) const;
};

// Builds a tower from declarations, checking well-foundedness and that no
// antiderivative has a constant derivative. Errors are InvalidTower.
Tower build_tower(const std::vector<TowerDecl>& decls);
// JSON array of {name, kind, derivative | log_derivative, jie?}.
std::vector<TowerDecl> parse_tower_json(const std::string& text);
Tower load_tower_file(const std::string& path);

struct GenericAnalysis {
    RatExpr u;
    std::size_t stage = 0;
    SymSet avars, evars, base;
    SubfieldPresentation presentation;             // F⟨u⟩ over F = C(base)
    std::optional<std::vector<LinearForm>> closure;  // C⟨u⟩ = C(span) for antiderivative towers
};

GenericAnalysis generic_analyze(const Tower& tower, const std::string& expr);

struct StageCertificate {
    std::size_t stage;
    std::vector<std::string> names;
    Certificate certificate;
};

// One J-I-E certificate per stage for the declarations that carry jie data.
std::vector<StageCertificate> tower_jie_check(const Tower& tower, JieLevel level);

}  // namespace dfsub
