#include "dfsub/frontend/report.hpp"

#include "dfsub/frontend/printer.hpp"

namespace dfsub {

Json symbols_json(std::vector<SymId> ids) {
    sort_for_display(ids);
    Json out = Json::array();
    for (SymId s : ids) out.push_back(symbol_text(s));
    return out;
}

Json form_json(const LinearForm& f) {
    std::vector<SymId> order;
    for (const auto& [s, c] : f) order.push_back(s);
    sort_symbols(order);
    Json coeffs = Json::object();
    for (SymId s : order) coeffs[symbol_text(s)] = f.at(s).to_string();
    return Json{{"text", form_text(f)}, {"coefficients", coeffs}};
}

Json presentation_json(const SubfieldPresentation& p) {
    Json forms = Json::array();
    for (const auto& f : p.linear_forms) forms.push_back(form_json(f));
    Json products = Json::array();
    for (const auto& pp : p.power_products) {
        Json exps = Json::object();
        for (const auto& [s, e] : pp) exps[symbol_text(s)] = e;
        products.push_back(Json{{"text", product_text(pp)}, {"exponents", exps}});
    }
    Json g{{"linear_forms", forms}, {"power_products", products}, {"base_symbols", symbols_json(p.base_symbols)}};
    if (!p.f_forms.empty()) {
        Json ff = Json::array();
        for (const auto& f : p.f_forms) ff.push_back(fform_text(f));
        g["f_forms"] = ff;
    }
    return g;
}

std::string tower_text(const std::vector<std::vector<SymId>>& stages) {
    std::string out;
    for (std::size_t k = stages.size(); k-- > 0;) out += field_text(stages[k], {}) + " ⊃ ";
    return out + "C";
}

namespace {

Json towers_block(const ClosureSet& c, const TowerReport& t) {
    Json lev = Json::array();
    for (const auto& s : t.levelled) lev.push_back(symbols_json(s));
    Json pi = Json::array();
    for (const auto& s : t.pi) pi.push_back(symbols_json(s));
    Json parts = Json::array();
    for (const auto& s : c.levels) parts.push_back(symbols_json(s));
    return Json{{"levelled", lev},
                {"pi", pi},
                {"levelled_text", tower_text(t.levelled)},
                {"pi_text", tower_text(t.pi)},
                {"levelled_partition", parts}};
}

Json provenance_json(const std::vector<std::string>& notes) {
    Json p = Json::array();
    for (const auto& n : notes) p.push_back(n);
    return p;
}

}  // namespace

Json analysis_json(const std::string& input, const IterlogAnalysis& a) {
    Json out{{"mode", "iterlog"}, {"input", input}};
    out["essential_elements"] = symbols_json({a.essential.begin(), a.essential.end()});
    if (a.closure) {
        out["pi_base"] = symbols_json(a.closure->pi_base);
        out["towers"] = towers_block(*a.closure, towers(*a.closure));
    } else {
        out["pi_base"] = Json::array();
        out["towers"] = nullptr;
    }
    out["generators"] = presentation_json(a.presentation);
    out["field"] = field_text(a.presentation);
    out["provenance"] = provenance_json(a.presentation.provenance);
    return out;
}

Json towers_json(const std::string& input, const ClosureSet& c, const TowerReport& t) {
    Json out{{"mode", "iterlog"}, {"input", input}};
    out["closure"] = symbols_json(c.closure);
    out["n"] = c.n;
    out["pi_base"] = symbols_json(c.pi_base);
    out["towers"] = towers_block(c, t);
    return out;
}

Json essential_json(const std::string& input, const SymSet& e) {
    return Json{{"mode", "iterlog"}, {"input", input}, {"essential_elements", symbols_json({e.begin(), e.end()})}};
}

Json certificate_json(const Certificate& c) {
    Json out{{"verdict", std::string(verdict_name(c.verdict))}};
    if (!c.clause.empty()) out["clause"] = c.clause;
    if (c.index) out["index"] = *c.index;
    Json w = Json::array();
    for (const auto& p : c.witness) w.push_back(poly_text(p));
    out["witness"] = w;
    if (!c.witness_vars.empty()) {
        Json v = Json::array();
        for (SymId s : c.witness_vars) v.push_back(symbol_text(s));
        out["witness_vars"] = v;
    }
    out["reason"] = c.reason;
    return out;
}

Json generic_json(const std::string& input, const GenericAnalysis& g) {
    Json out{{"mode", "generic"}, {"input", input}, {"reduced", rat_text(g.u)}, {"stage", g.stage}};
    out["antiderivative_vars"] = symbols_json({g.avars.begin(), g.avars.end()});
    out["exponential_vars"] = symbols_json({g.evars.begin(), g.evars.end()});
    out["generators"] = presentation_json(g.presentation);
    out["field"] = field_text(g.presentation);
    if (g.closure) {
        Json forms = Json::array();
        for (const auto& f : *g.closure) forms.push_back(form_json(f));
        out["differential_closure"] = Json{{"linear_forms", forms}, {"field", field_text({}, *g.closure)}};
    }
    out["provenance"] = provenance_json(g.presentation.provenance);
    return out;
}

Json probe_json(const std::string& input, const std::vector<SymId>& vars, const std::vector<Const>& values,
                const ProbeReport& r) {
    Json vals = Json::array();
    for (const auto& v : values) vals.push_back(v.to_string());
    Json vs = Json::array();
    for (SymId s : vars) vs.push_back(symbol_text(s));
    return Json{{"mode", "verify"},      {"input", input},           {"vars", vs},
                {"probe_values", vals},  {"points", r.points},       {"fixed_points", r.fixed},
                {"mismatches", r.mismatches}, {"sound", r.mismatches == 0}};
}

Json error_json(const Error& e) {
    Json err{{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
    if (e.position()) err["position"] = *e.position();
    return Json{{"error", err}};
}

}  // namespace dfsub
