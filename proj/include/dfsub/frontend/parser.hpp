#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfsub/multipoly.hpp"

namespace dfsub {

enum class ParseMode { IterLog, Generic };

struct ExprAst {
    enum class Kind { Sum, Difference, Product, Quotient, Power, Negate, Symbol, Constant, Ln };
    Kind kind;
    std::vector<std::shared_ptr<const ExprAst>> kids;
    std::string name;         // Symbol: identifier as written
    Const value;              // Constant
    std::uint32_t exponent{};  // Power
    std::size_t pos = 0;      // byte offset of the node in the input
};
using AstPtr = std::shared_ptr<const ExprAst>;

// Resolves generic identifiers to symbols; returns nullopt for unknown names.
using SymbolLookup = std::function<std::optional<SymId>(std::string_view)>;

// SyntaxError (with position) on malformed input. In generic mode an
// identifier the lookup does not know raises UnknownSymbol.
AstPtr parse(std::string_view text, ParseMode mode = ParseMode::IterLog, const SymbolLookup& lookup = {});

// Evaluates the tree; every ln must be applied to (iterated log + constant),
// otherwise NotIterLog names the offending subtree.
RatExpr evaluate(const AstPtr& ast, const SymbolLookup& lookup = {});

RatExpr normalize_iterlog(const AstPtr& ast);

// parse + evaluate.
RatExpr parse_expression(std::string_view text, ParseMode mode = ParseMode::IterLog, const SymbolLookup& lookup = {});

// Source-like text of a tree.
std::string ast_text(const AstPtr& ast);

}  // namespace dfsub
