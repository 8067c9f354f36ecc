#include <doctest.h>

#include "dfsub/frontend/printer.hpp"
#include "dfsub/frontend/report.hpp"
#include "dfsub/frontend/tower.hpp"
#include "support.hpp"

using namespace dfsub;
using namespace dfsub::testing;

namespace {

std::optional<std::size_t> syntax_position(const std::string& text) {
    try {
        parse(text);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SyntaxError) return e.position();
    }
    return std::nullopt;
}

const char* arctan_json = R"json([
  {"name": "t1", "kind": "antiderivative", "derivative": "1/(x^2+1)",
   "jie": {"A": "1", "B": "x+i", "C": "x-i"}},
  {"name": "t2", "kind": "antiderivative", "derivative": "1/((t1^2+1)*(x^2+1))"}
])json";

}  // namespace

TEST_CASE("iterated logarithms are recognized") {
    CHECK(parse_expression("ln(ln(x+@e)+5)") == RatExpr::symbol(SymbolTable::instance().iterlog({Const::atom("e"), Const(5)})));
    CHECK(parse_expression("ln(x)") == RatExpr::symbol(SymbolTable::instance().iterlog({Const(0)})));
    // The argument only has to equal an iterated log plus a constant.
    CHECK(parse_expression("ln(2+x-1)") == parse_expression("ln(x+1)"));
    CHECK(parse_expression("ln((x^2-1)/(x-1))") == parse_expression("ln(x+1)"));
    CHECK(error_kind_of([] { return parse_expression("ln(x^2+1)"); }) == ErrorKind::NotIterLog);
    CHECK(error_kind_of([] { return parse_expression("ln(2*x)"); }) == ErrorKind::NotIterLog);
    CHECK(error_kind_of([] { return parse_expression("ln(x*ln(x))"); }) == ErrorKind::NotIterLog);
    CHECK(error_kind_of([] { return parse_expression("ln(3)"); }) == ErrorKind::NotIterLog);
    AstPtr ast = parse("ln(x*x)");
    CHECK(ast->kind == ExprAst::Kind::Ln);
    CHECK(error_kind_of([&] { return normalize_iterlog(ast); }) == ErrorKind::NotIterLog);
}

TEST_CASE("literals and operators") {
    CHECK(parse_expression("x^-2") == parse_expression("1/x^2"));
    CHECK(parse_expression("-x+3/4") == RatExpr(Const(mpq_class(3, 4))) - RatExpr::symbol(SymbolTable::instance().x()));
    CHECK(parse_expression("i*i") == RatExpr(-1));
    CHECK(parse_expression("@e - @e") == RatExpr());
    CHECK(parse_expression("(x+1)^0") == RatExpr(1));
    CHECK(error_kind_of([] { return parse_expression("@sqrt2=2"); }) == ErrorKind::RelationNotSupported);
    CHECK(error_kind_of([] { return parse_expression("1/(x-x)"); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("syntax errors carry a position") {
    CHECK(syntax_position("x+") == std::optional<std::size_t>(2));
    CHECK(syntax_position("ln(x") == std::optional<std::size_t>(4));
    CHECK(syntax_position("2*)").has_value());
    CHECK(syntax_position("x^y").has_value());
    CHECK(syntax_position("x $ 1").has_value());
    CHECK(syntax_position("").has_value());
    CHECK(syntax_position("y").has_value());
}

TEST_CASE("generic identifiers go through the lookup") {
    SymId t = SymbolTable::instance().antiderivative("frontend_t");
    SymbolLookup lookup = [&](std::string_view n) -> std::optional<SymId> {
        if (n == "T") return t;
        return std::nullopt;
    };
    CHECK(parse_expression("T^2+x", ParseMode::Generic, lookup) ==
          RatExpr::symbol(t) * RatExpr::symbol(t) + RatExpr::symbol(SymbolTable::instance().x()));
    CHECK(error_kind_of([&] { return parse_expression("T+U", ParseMode::Generic, lookup); }) ==
          ErrorKind::UnknownSymbol);
}

TEST_CASE("printed values parse back") {
    std::mt19937 rng(51);
    for (int k = 0; k < 60; ++k) {
        std::string text = random_iterlog_text(rng);
        RatExpr u = parse_expression(text);
        CHECK(parse_expression(rat_text(u)) == u);
        CHECK(parse_expression(poly_text(u.num())) == RatExpr(u.num()));
        CHECK(parse_expression(ast_text(parse(text))) == u);

        SubfieldPresentation p = iterlog_subfield(u);
        for (const auto& f : p.linear_forms) {
            RatExpr back = parse_expression(form_text(f));
            RatExpr direct;
            for (const auto& [y, c] : f) direct += c * RatExpr::symbol(y);
            CHECK(back == direct);
        }
    }
}

TEST_CASE("report fields") {
    IterlogAnalysis a = analyze_iterlog(parse_expression("ln(x+1)-2*ln(x)"));
    Json j = analysis_json("ln(x+1)-2*ln(x)", a);
    for (const char* key : {"mode", "input", "essential_elements", "pi_base", "towers", "generators", "field", "provenance"})
        CHECK(j.contains(key));
    CHECK(j["mode"] == "iterlog");
    for (const char* key : {"linear_forms", "power_products", "base_symbols"}) CHECK(j["generators"].contains(key));
    CHECK(j["generators"]["linear_forms"].size() == 1);
    CHECK(j["field"] == "C(x, -1/2*ln(x+1)+ln(x))");

    Json e = error_json(Error(ErrorKind::SyntaxError, "unexpected end", 3));
    CHECK(e["error"]["kind"] == "SyntaxError");
    CHECK(e["error"]["position"] == 3);
}

TEST_CASE("tower declarations") {
    Tower t = build_tower(parse_tower_json(arctan_json));
    REQUIRE(t.symbols.size() == 2);
    CHECK(t.stage_of(t.symbols[0]) == 1);
    CHECK(t.stage_of(t.symbols[1]) == 2);
    CHECK(t.stage_of(SymbolTable::instance().x()) == 0);
    CHECK(symbol_derivative(t.symbols[0], t.table) == parse_expression("1/(x^2+1)"));

    auto invalid = [](const std::string& json) {
        return error_kind_of([&] { return build_tower(parse_tower_json(json)); });
    };
    CHECK(invalid(R"([{"name": "a", "kind": "antiderivative", "derivative": "3"}])") == ErrorKind::InvalidTower);
    const std::string forward = R"([{"name": "a", "kind": "antiderivative", "derivative": "b"},
                                    {"name": "b", "kind": "antiderivative", "derivative": "1/x"}])";
    const std::string duplicate = R"json([{"name": "a", "kind": "antiderivative", "derivative": "1/x"},
                                          {"name": "a", "kind": "antiderivative", "derivative": "1/(x+1)"}])json";
    CHECK(invalid(forward) == ErrorKind::InvalidTower);
    CHECK(invalid(duplicate) == ErrorKind::InvalidTower);
    CHECK(invalid(R"([{"name": "a", "kind": "sideways", "derivative": "1/x"}])") == ErrorKind::InvalidTower);
    CHECK(invalid(R"({"name": "a"})") == ErrorKind::InvalidTower);
    CHECK(invalid("not json") == ErrorKind::InvalidTower);
}

TEST_CASE("generic analysis over the arctan tower") {
    Tower t = build_tower(parse_tower_json(arctan_json));
    GenericAnalysis g = generic_analyze(t, "t2");
    CHECK(g.stage == 2);
    REQUIRE(g.closure);
    std::vector<LinearForm> expect{{{SymbolTable::instance().x(), Const(1)}},
                                   {{t.symbols[0], Const(1)}},
                                   {{t.symbols[1], Const(1)}}};
    CHECK(span_equal(*g.closure, expect));
    Json j = generic_json("t2", g);
    CHECK(j["mode"] == "generic");
    CHECK(j.contains("differential_closure"));

    auto stages = tower_jie_check(t, JieLevel::IE);
    REQUIRE(stages.size() == 1);
    CHECK(stages[0].certificate.verdict == Verdict::Certified);
    CHECK(tower_jie_check(t, JieLevel::JIE)[0].certificate.clause == "C2");
}

TEST_CASE("generic analysis over an exponential") {
    Tower t = build_tower(parse_tower_json(R"([{"name": "E", "kind": "exponential", "log_derivative": "1"}])"));
    GenericAnalysis g = generic_analyze(t, "E^2+1");
    REQUIRE(g.presentation.power_products.size() == 1);
    const PowerProduct& pp = g.presentation.power_products[0];
    REQUIRE(pp.size() == 1);
    CHECK(std::abs(pp.begin()->second) == 2);
}
