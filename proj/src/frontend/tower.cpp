#include "dfsub/frontend/tower.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dfsub/iterlog.hpp"

namespace dfsub {

namespace {

bool valid_name(const std::string& n) {
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
    return std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

SymbolLookup make_lookup(const std::map<std::string, SymId>& names) {
    return [names](std::string_view n) -> std::optional<SymId> {
        auto it = names.find(std::string(n));
        if (it == names.end()) return std::nullopt;
        return it->second;
    };
}

// Adds iterated logarithms (and their π-chains) appearing in u.
void add_log_entries(DerivationTable& table, const SymSet& syms) {
    SymSet logs;
    for (SymId s : syms)
        if (is_logsym(s)) logs.insert(s);
    DerivationTable logs_table = iterlog_table(logs);
    for (const auto& [s, d] : logs_table.entries())
        if (!table.has(s)) table.set(s, d);
}

}  // namespace

SymbolLookup Tower::lookup() const {
    std::map<std::string, SymId> names;
    for (std::size_t k = 0; k < decls.size(); ++k) names[decls[k].name] = symbols[k];
    return make_lookup(names);
}

std::size_t Tower::stage_of(SymId s) const {
    if (is_logsym(s)) return sym_level(s);
    auto it = stage.find(s);
    if (it == stage.end()) throw Error(ErrorKind::UnknownSymbol, "symbol " + symbol_text(s) + " is not in the tower");
    return it->second;
}

Tower build_tower(const std::vector<TowerDecl>& decls) {
    Tower t;
    t.decls = decls;
    auto& table = SymbolTable::instance();
    SymId x = table.x();
    t.table.set(x, RatExpr(1));
    t.stage[x] = 0;
    std::map<std::string, SymId> names;
    for (const auto& d : decls) {
        if (!valid_name(d.name) || d.name == "x" || d.name == "i" || d.name == "ln") {
            throw Error(ErrorKind::InvalidTower, "invalid symbol name '" + d.name + "'");
        }
        if (names.count(d.name)) throw Error(ErrorKind::InvalidTower, "symbol '" + d.name + "' declared twice");
        RatExpr der;
        try {
            der = parse_expression(d.derivative, ParseMode::Generic, make_lookup(names));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::UnknownSymbol) {
                throw Error(ErrorKind::InvalidTower,
                            "derivative of '" + d.name + "' may only use earlier symbols: " + e.what());
            }
            throw;
        }
        if (der.is_constant()) {
            if (d.kind == SymKind::Antiderivative || der.is_zero()) {
                throw Error(ErrorKind::InvalidTower, "derivative of '" + d.name +
                                                         "' is constant; the symbol would be algebraic over C(x)");
            }
        }
        SymId s = d.kind == SymKind::Exponential ? table.exponential(d.name) : table.antiderivative(d.name);
        std::size_t st = 0;
        SymSet used = der.symbols();
        add_log_entries(t.table, used);
        for (SymId u : used) st = std::max(st, is_logsym(u) ? sym_level(u) : t.stage.at(u));
        t.stage[s] = st + 1;
        t.table.set(s, der);
        t.symbols.push_back(s);
        names[d.name] = s;
    }
    return t;
}

std::vector<TowerDecl> parse_tower_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidTower, std::string("tower file is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw Error(ErrorKind::InvalidTower, "tower file must be a JSON array");
    std::vector<TowerDecl> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("name") || !item.contains("kind")) {
            throw Error(ErrorKind::InvalidTower, "each declaration needs 'name' and 'kind'");
        }
        TowerDecl d;
        d.name = item.at("name").get<std::string>();
        std::string kind = item.at("kind").get<std::string>();
        if (kind == "antiderivative") {
            d.kind = SymKind::Antiderivative;
            if (!item.contains("derivative")) throw Error(ErrorKind::InvalidTower, "'" + d.name + "' needs 'derivative'");
            d.derivative = item.at("derivative").get<std::string>();
        } else if (kind == "exponential") {
            d.kind = SymKind::Exponential;
            if (!item.contains("log_derivative")) {
                throw Error(ErrorKind::InvalidTower, "'" + d.name + "' needs 'log_derivative'");
            }
            d.derivative = item.at("log_derivative").get<std::string>();
        } else {
            throw Error(ErrorKind::InvalidTower, "unknown kind '" + kind + "'");
        }
        if (item.contains("jie")) {
            const auto& q = item.at("jie");
            d.jie = JieSpec{q.value("A", "1"), q.value("B", "1"), q.value("C", "1")};
        }
        out.push_back(std::move(d));
    }
    return out;
}

Tower load_tower_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidTower, "cannot read tower file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return build_tower(parse_tower_json(ss.str()));
}

GenericAnalysis generic_analyze(const Tower& tower, const std::string& expr) {
    GenericAnalysis g;
    g.u = parse_expression(expr, ParseMode::Generic, tower.lookup());
    SymSet syms = g.u.symbols();
    DerivationTable table = tower.table;
    add_log_entries(table, syms);
    for (SymId s : syms) g.stage = std::max(g.stage, tower.stage_of(s));

    SymId x = SymbolTable::instance().x();
    if (g.stage == 0) {
        if (!syms.empty()) g.presentation.base_symbols = {x};
        g.presentation.provenance.emplace_back(syms.empty() ? "u is constant: the field is C"
                                                            : "u is rational in x: the field is C(x)");
        g.closure = std::vector<LinearForm>{};
        if (!syms.empty()) g.closure->push_back(LinearForm{{x, Const(1)}});
        return g;
    }
    for (SymId s : syms) {
        if (tower.stage_of(s) != g.stage) continue;
        (sym_info(s).kind == SymKind::Exponential ? g.evars : g.avars).insert(s);
    }
    g.base.insert(x);
    for (SymId s : tower.symbols)
        if (tower.stage_of(s) < g.stage) g.base.insert(s);
    for (const auto& [s, d] : table.entries())
        if (is_logsym(s) && sym_level(s) < g.stage) g.base.insert(s);
    g.presentation = mixed_subfield(g.u, g.avars, g.evars, g.base);
    g.presentation.provenance.emplace_back("relative to the field of stage-" + std::to_string(g.stage - 1) +
                                           " symbols; top-stage symbols assumed J-I-E over it");

    bool has_exp = std::any_of(table.entries().begin(), table.entries().end(),
                               [](const auto& e) { return sym_info(e.first).kind == SymKind::Exponential; });
    if (!has_exp) g.closure = differential_closure(g.u, table);
    return g;
}

std::vector<StageCertificate> tower_jie_check(const Tower& tower, JieLevel level) {
    std::map<std::size_t, std::vector<std::size_t>> by_stage;
    for (std::size_t k = 0; k < tower.decls.size(); ++k)
        if (tower.decls[k].jie) by_stage[tower.stage_of(tower.symbols[k])].push_back(k);
    auto lookup = tower.lookup();
    std::vector<StageCertificate> out;
    for (const auto& [stage, idx] : by_stage) {
        SymSet vars{SymbolTable::instance().x()};
        for (SymId s : tower.symbols)
            if (tower.stage_of(s) < stage) vars.insert(s);
        StageCertificate sc;
        sc.stage = stage;
        std::vector<JieTriple> triples;
        for (std::size_t k : idx) {
            const auto& d = tower.decls[k];
            auto poly = [&](const std::string& text) {
                RatExpr r = parse_expression(text, ParseMode::Generic, lookup);
                if (!r.is_polynomial()) throw Error(ErrorKind::InvalidTower, "J-I-E data of '" + d.name + "' must be polynomials");
                return r.num().scaled(Const(1) / r.den().constant_value());
            };
            JieTriple t{poly(d.jie->a), poly(d.jie->b), poly(d.jie->c), vars};
            RatExpr der = reduce_fraction(t.a, t.c * t.b);
            if (der != tower.table.get(tower.symbols[k])) {
                throw Error(ErrorKind::InvalidTower, "A/(CB) differs from the declared derivative of '" + d.name + "'");
            }
            sc.names.push_back(d.name);
            triples.push_back(std::move(t));
        }
        sc.certificate = jie_check(triples, level);
        out.push_back(std::move(sc));
    }
    return out;
}

}  // namespace dfsub
