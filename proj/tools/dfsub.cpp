// Command-line front end: dfsub <subcommand> ...
#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "dfsub/certify.hpp"
#include "dfsub/frontend/parser.hpp"
#include "dfsub/frontend/printer.hpp"
#include "dfsub/frontend/report.hpp"
#include "dfsub/frontend/tower.hpp"
#include "dfsub/iterlog.hpp"
#include "dfsub/probe.hpp"
#include "dfsub/subfield.hpp"

using namespace dfsub;

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

SymSet towers_input(const std::string& text) {
    auto items = split_list(text);
    if (items.size() == 1) return essential_elements(parse_expression(text));
    SymSet e;
    for (const auto& item : items) {
        RatExpr r = parse_expression(item);
        auto syms = r.symbols();
        if (syms.size() != 1 || r != RatExpr::symbol(*syms.begin())) {
            throw Error(ErrorKind::SyntaxError, "'" + item + "' is not a single iterated logarithm");
        }
        e.insert(*syms.begin());
    }
    return e;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differential subfields of iterated-logarithm and antiderivative towers"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    bool json_flag = true;
    app.add_flag("--json", json_flag, "Compact JSON output (default)");
    app.add_flag("--pretty", pretty, "Indented JSON output");

    std::string expr, tower_path, s_text, t_text, vars_text, grid_text, level_text = "jie";
    bool serial = false;

    auto* analyze = app.add_subcommand("analyze", "Subfield C<u> of an iterated-logarithm expression");
    analyze->add_option("expr", expr, "Expression")->required();

    auto* towers_cmd = app.add_subcommand("towers", "Levelled and π towers of an expression or symbol list");
    towers_cmd->add_option("expr", expr, "Expression or comma-separated iterated logarithms")->required();

    auto* essential = app.add_subcommand("essential", "Essential elements of an expression");
    essential->add_option("expr", expr, "Expression")->required();

    auto* jie = app.add_subcommand("jie-check", "Check J-I-E conditions declared in a tower file");
    jie->add_option("tower_file", tower_path, "Tower JSON file")->required()->check(CLI::ExistingFile);
    jie->add_option("--level", level_text, "ie or jie")->check(CLI::IsMember({"ie", "jie"}));

    auto* nonint = app.add_subcommand("certify-nonint", "Certificate that S/T has no antiderivative in the tower");
    nonint->add_option("S", s_text, "Numerator")->required();
    nonint->add_option("T", t_text, "Denominator")->required();
    nonint->add_option("--vars", vars_text, "Comma-separated variables to search for factors");

    auto* generic = app.add_subcommand("generic", "Generic tower mode");
    generic->require_subcommand(1);
    generic->fallthrough();
    auto* gen_analyze = generic->add_subcommand("analyze", "Subfield generated by an element of a declared tower");
    gen_analyze->add_option("tower_file", tower_path, "Tower JSON file")->required()->check(CLI::ExistingFile);
    gen_analyze->add_option("expr", expr, "Expression")->required();

    auto* verify = app.add_subcommand("verify", "Probe-grid soundness check of the computed forms");
    verify->add_option("expr", expr, "Expression")->required();
    verify->add_option("--probe-grid", grid_text, "Comma-separated probe constants");
    verify->add_flag("--serial", serial, "Use the serial reference kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto emit = [&](const Json& j) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; };
    try {
        if (*analyze) {
            emit(analysis_json(expr, analyze_iterlog(parse_expression(expr))));
        } else if (*towers_cmd) {
            ClosureSet c = closure(towers_input(expr));
            emit(towers_json(expr, c, towers(c)));
        } else if (*essential) {
            emit(essential_json(expr, essential_elements(parse_expression(expr))));
        } else if (*jie) {
            Tower t = load_tower_file(tower_path);
            auto certs = tower_jie_check(t, level_text == "ie" ? JieLevel::IE : JieLevel::JIE);
            Json stages = Json::array();
            Verdict overall = Verdict::Certified;
            for (const auto& sc : certs) {
                Json names = Json::array();
                for (const auto& n : sc.names) names.push_back(n);
                stages.push_back(Json{{"stage", sc.stage}, {"symbols", names}, {"certificate", certificate_json(sc.certificate)}});
                if (sc.certificate.verdict == Verdict::Refuted) overall = Verdict::Refuted;
                if (sc.certificate.verdict == Verdict::Unknown && overall == Verdict::Certified) overall = Verdict::Unknown;
            }
            emit(Json{{"mode", "jie-check"}, {"level", level_text}, {"verdict", std::string(verdict_name(overall))}, {"stages", stages}});
        } else if (*nonint) {
            auto poly = [](const std::string& text) {
                RatExpr r = parse_expression(text);
                if (!r.is_polynomial()) throw Error(ErrorKind::SyntaxError, "'" + text + "' is not a polynomial");
                return r.num().scaled(Const(1) / r.den().constant_value());
            };
            MPoly s = poly(s_text), t = poly(t_text);
            std::optional<SymSet> vars;
            if (!vars_text.empty()) {
                vars = SymSet{};
                for (const auto& v : split_list(vars_text)) {
                    RatExpr r = parse_expression(v);
                    auto syms = r.symbols();
                    if (syms.size() != 1) throw Error(ErrorKind::SyntaxError, "'" + v + "' is not a variable");
                    vars->insert(*syms.begin());
                }
            }
            Json out{{"mode", "certify-nonint"}, {"S", poly_text(s)}, {"T", poly_text(t)}};
            out["certificate"] = certificate_json(no_antiderivative_certificate(s, t, vars));
            emit(out);
        } else if (*gen_analyze) {
            Tower t = load_tower_file(tower_path);
            emit(generic_json(expr, generic_analyze(t, expr)));
        } else if (*verify) {
            RatExpr u = parse_expression(expr);
            IterlogAnalysis a = analyze_iterlog(u);
            std::vector<SymId> vars = a.presentation.vars;
            std::vector<Const> values = default_probe_values();
            if (!grid_text.empty()) {
                values.clear();
                for (const auto& v : split_list(grid_text)) {
                    RatExpr r = parse_expression(v);
                    if (!r.is_constant()) throw Error(ErrorKind::SyntaxError, "probe value '" + v + "' is not a constant");
                    values.push_back(r.constant_value());
                }
            }
            ProbeReport r = serial ? probe_grid_serial(u, a.presentation.linear_forms, vars, values)
                                   : probe_grid_parallel(u, a.presentation.linear_forms, vars, values);
            emit(probe_json(expr, vars, values, r));
            if (r.mismatches != 0) return 1;
        }
    } catch (const Error& e) {
        emit(error_json(e));
        return 1;
    }
    return 0;
}
