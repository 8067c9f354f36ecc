#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dfsub/constfield.hpp"

namespace dfsub {

using SymId = VarId;

enum class SymKind {
    BaseX,           // x, the level-0 iterated logarithm
    IterLog,         // ℓ[c⃗, n] with n ≥ 1
    Antiderivative,  // declared generic antiderivative
    Exponential,     // declared exponential of an integral
    Coordinate,      // fresh coordinate introduced by a change of variables
};

struct SymbolInfo {
    SymKind kind;
    ConstVec vec;      // iterated logs only
    std::string name;  // generic symbols and coordinates
    std::string text;  // display form
    std::size_t level() const { return vec.size(); }
};

/// Global registry of tower symbols. Interning is serialized; lookups of an
/// already-interned id never lock and are safe from parallel regions.
class SymbolTable {
public:
    static SymbolTable& instance();

    SymId x();
    // ℓ[vec, |vec|]; the empty vector gives x.
    SymId iterlog(const ConstVec& vec);
    SymId antiderivative(std::string_view name);
    SymId exponential(std::string_view name);
    SymId coordinate(std::string_view name);

    // Generic symbol by name, if declared.
    std::optional<SymId> find_generic(std::string_view name) const;

    const SymbolInfo& info(SymId id) const;
    std::size_t size() const;

private:
    SymbolTable();
    SymId intern(SymbolInfo info);
    struct Impl;
    Impl* impl_;
};

inline const SymbolInfo& sym_info(SymId id) { return SymbolTable::instance().info(id); }
inline bool is_logsym(SymId id) {
    auto k = sym_info(id).kind;
    return k == SymKind::BaseX || k == SymKind::IterLog;
}
inline std::size_t sym_level(SymId id) { return sym_info(id).level(); }

// π^k on a symbol. π of x is x; other kinds are returned unchanged.
SymId project(SymId id, std::size_t k = 1);

// Canonical symbol order: x and iterated logs by (level, vector), then
// antiderivatives, exponentials and coordinates by name.
int symbol_cmp(SymId a, SymId b);
struct SymLess {
    bool operator()(SymId a, SymId b) const { return symbol_cmp(a, b) < 0; }
};
void sort_symbols(std::vector<SymId>& ids);

// Display text: "x", "ln(x+1)", "ln(ln(x-i)+2)", or the declared name.
std::string symbol_text(SymId id);

}  // namespace dfsub
