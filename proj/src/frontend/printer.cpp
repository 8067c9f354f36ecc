#include "dfsub/frontend/printer.hpp"

#include <algorithm>

#include "dfsub/iterlog.hpp"

namespace dfsub {

namespace {

struct SignedText {
    bool negative = false;
    std::string text;  // magnitude
    bool wrap = false; // needs parentheses as a factor
};

SignedText split_sign(const Const& c) {
    SignedText s;
    if (c.is_numeric()) {
        const GaussRat& g = c.numeric();
        if (g.is_real() || sgn(g.re()) == 0) {
            s.negative = g.is_real() ? sgn(g.re()) < 0 : sgn(g.im()) < 0;
            s.text = (s.negative ? -g : g).to_string();
            return s;
        }
        s.text = g.to_string();
        s.wrap = true;
        return s;
    }
    std::string t = c.to_string();
    if (c.is_compound()) {
        s.text = t;
        s.wrap = true;
        return s;
    }
    if (t[0] == '-') {
        s.negative = true;
        t.erase(0, 1);
    }
    s.text = t;
    return s;
}

std::string monomial_text(const Monomial& m) {
    auto f = m.f;
    std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return symbol_cmp(a.first, b.first) > 0; });
    std::string out;
    for (const auto& [v, e] : f) {
        if (!out.empty()) out += "*";
        out += symbol_text(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool is_single_factor(const MPoly& p) {
    if (p.size() != 1) return false;
    const auto& t = p.terms()[0];
    return t.c.is_one() && t.m.f.size() == 1;
}

}  // namespace

std::string poly_text(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : canonical_terms(p)) {
        SignedText c = split_sign(t.c);
        if (first) {
            if (c.negative) out += "-";
        } else {
            out += c.negative ? "-" : "+";
        }
        first = false;
        std::string mono = monomial_text(t.m);
        bool unit = c.text == "1" && !c.wrap;
        if (mono.empty()) {
            out += c.text;
        } else if (unit) {
            out += mono;
        } else {
            out += (c.wrap ? "(" + c.text + ")" : c.text) + "*" + mono;
        }
    }
    return out;
}

std::string rat_text(const RatExpr& u) {
    if (u.is_polynomial()) return poly_text(u.num());
    std::string n = poly_text(u.num());
    if (u.num().size() > 1) n = "(" + n + ")";
    std::string d = poly_text(u.den());
    if (!is_single_factor(u.den())) d = "(" + d + ")";
    return n + "/" + d;
}

std::string form_text(const LinearForm& f) {
    MPoly p;
    for (const auto& [s, c] : f) p += mvar(s).scaled(c);
    return poly_text(p);
}

std::string fform_text(const FForm& f) {
    std::vector<SymId> order;
    for (const auto& [s, c] : f) order.push_back(s);
    sort_symbols(order);
    std::string out;
    for (SymId s : order) {
        if (!out.empty()) out += "+";
        out += "(" + rat_text(f.at(s)) + ")*" + symbol_text(s);
    }
    return out;
}

std::string product_text(const PowerProduct& p) {
    std::string num, den;
    std::size_t nden = 0;
    for (const auto& [s, e] : p) {
        std::string& dst = e > 0 ? num : den;
        if (!dst.empty()) dst += "*";
        dst += symbol_text(s);
        long a = e > 0 ? e : -e;
        if (a > 1) dst += "^" + std::to_string(a);
        if (e < 0) ++nden;
    }
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    return num + "/" + (nden > 1 ? "(" + den + ")" : den);
}

std::string field_text(const std::vector<SymId>& symbols, const std::vector<LinearForm>& forms,
                       const std::vector<PowerProduct>& products) {
    std::vector<SymId> syms = symbols;
    sort_for_display(syms);
    std::vector<std::string> parts;
    for (SymId s : syms) parts.push_back(symbol_text(s));
    for (const auto& f : forms) parts.push_back(form_text(f));
    for (const auto& p : products) parts.push_back(product_text(p));
    if (parts.empty()) return "C";
    std::string out = "C(";
    for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k];
    return out + ")";
}

std::string field_text(const SubfieldPresentation& p) {
    return field_text(p.base_symbols, p.linear_forms, p.power_products);
}

}  // namespace dfsub
