#include "dfsub/constfield.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace dfsub {

struct AtomRegistry::Impl {
    mutable std::mutex mu;
    std::deque<std::string> names;
    std::unordered_map<std::string, VarId> ids;
};

AtomRegistry& AtomRegistry::instance() {
    static AtomRegistry reg;
    return reg;
}

AtomRegistry::Impl& AtomRegistry::impl() const {
    static Impl state;
    return state;
}

VarId AtomRegistry::intern(std::string_view name) {
    for (char ch : name) {
        if (ch == '=' || ch == '^' || ch == '<' || ch == '>') {
            throw Error(ErrorKind::RelationNotSupported,
                        "atom '" + std::string(name) + "' carries a relation; atoms are free transcendentals");
        }
    }
    bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
    for (char ch : name) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw Error(ErrorKind::SyntaxError, "invalid atom name '" + std::string(name) + "'");
    Impl& s = impl();
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.ids.find(std::string(name));
    if (it != s.ids.end()) return it->second;
    auto id = static_cast<VarId>(s.names.size());
    s.names.emplace_back(name);
    s.ids.emplace(std::string(name), id);
    return id;
}

std::string AtomRegistry::name(VarId id) const {
    Impl& s = impl();
    std::lock_guard<std::mutex> lock(s.mu);
    return s.names.at(id);
}

std::size_t AtomRegistry::size() const {
    Impl& s = impl();
    std::lock_guard<std::mutex> lock(s.mu);
    return s.names.size();
}

Const Const::atom(std::string_view name) {
    VarId id = AtomRegistry::instance().intern(name);
    return from_parts(AtomPoly::var(id), AtomPoly(GaussRat(1)));
}

Const Const::fraction(const AtomPoly& num, const AtomPoly& den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "constant with zero denominator");
    if (num.is_zero()) return Const();
    AtomPoly g = gcd(num, den);
    AtomPoly n = num, d = den;
    if (!g.is_constant()) {
        n = *exact_divide(num, g);
        d = *exact_divide(den, g);
    }
    return from_parts(std::move(n), std::move(d));
}

// Assumes num/den is already in lowest terms.
Const Const::from_parts(AtomPoly num, AtomPoly den) {
    GaussRat lc = den.lead().c;
    if (!lc.is_one()) {
        GaussRat inv = GaussRat(1) / lc;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    Const out;
    if (den.is_constant() && num.is_constant()) {
        out.num_ = num.constant_value();
        return out;
    }
    out.frac_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
    return out;
}

namespace {

// Atom k becomes variable k + 1, leaving 0 for the main variable.
Monomial shift_atoms(const Monomial& m) {
    Monomial r = m;
    for (auto& [a, e] : r.f) a += 1;
    return r;
}

Monomial unshift_atoms(const Monomial& m) {
    Monomial r = m;
    for (auto& [a, e] : r.f) a -= 1;
    return r;
}

AtomPoly lift(const SparsePoly<Const>& p, VarId v) {
    AtomPoly l(GaussRat(1));
    for (const auto& t : p.terms()) {
        AtomPoly d = t.c.denominator();
        if (!d.is_constant()) l = *exact_divide(l * d, gcd(l, d));
    }
    std::vector<AtomPoly::Term> ts;
    for (const auto& t : p.terms()) {
        AtomPoly n = t.c.numerator() * *exact_divide(l, t.c.denominator());
        Monomial mv = Monomial::var(0, t.m.exponent(v));
        for (const auto& u : n.terms()) ts.push_back({shift_atoms(u.m) * mv, u.c});
    }
    return AtomPoly::from_terms(std::move(ts));
}

GaussRat eval_atom_poly(const AtomPoly& p, long seed) {
    GaussRat acc(0);
    for (const auto& t : p.terms()) {
        GaussRat c = t.c;
        for (const auto& [a, e] : t.m.f) {
            GaussRat x(static_cast<long>((a * 7919u + static_cast<unsigned long>(seed) * 104729u) % 97u) + 2);
            for (std::uint32_t k = 0; k < e; ++k) c *= x;
        }
        acc += c;
    }
    return acc;
}

}  // namespace

std::optional<GaussRat> evaluate_atoms(const Const& c, long seed) {
    if (c.is_numeric()) return c.numeric();
    GaussRat d = eval_atom_poly(c.denominator(), seed);
    if (d.is_zero()) return std::nullopt;
    return eval_atom_poly(c.numerator(), seed) / d;
}

SparsePoly<Const> gcd_over_parameters(const SparsePoly<Const>& a, const SparsePoly<Const>& b, VarId v) {
    AtomPoly g = gcd(lift(a, v), lift(b, v));
    std::map<std::uint32_t, std::vector<AtomPoly::Term>> parts;
    for (const auto& t : g.terms()) {
        Monomial m = t.m;
        std::uint32_t e = m.remove(0);
        parts[e].push_back({unshift_atoms(m), t.c});
    }
    std::vector<SparsePoly<Const>::Term> ts;
    for (auto& [e, terms] : parts) {
        ts.push_back({Monomial::var(v, e), Const::fraction(AtomPoly::from_terms(std::move(terms)), AtomPoly(GaussRat(1)))});
    }
    return SparsePoly<Const>::from_terms(std::move(ts)).monic();
}

AtomPoly Const::numerator() const { return frac_ ? frac_->num : AtomPoly(num_); }
AtomPoly Const::denominator() const { return frac_ ? frac_->den : AtomPoly(GaussRat(1)); }

Const Const::operator-() const {
    if (!frac_) return Const(-num_);
    Const out;
    out.frac_ = std::make_shared<const Frac>(Frac{-frac_->num, frac_->den});
    return out;
}

Const& Const::operator+=(const Const& o) {
    if (!frac_ && !o.frac_) {
        num_ += o.num_;
        return *this;
    }
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    AtomPoly d1 = denominator(), d2 = o.denominator();
    if (d1 == d2) return *this = fraction(numerator() + o.numerator(), d1);
    return *this = fraction(numerator() * d2 + o.numerator() * d1, d1 * d2);
}

Const& Const::operator-=(const Const& o) { return *this += -o; }

Const& Const::operator*=(const Const& o) {
    if (!frac_ && !o.frac_) {
        num_ *= o.num_;
        return *this;
    }
    if (is_zero() || o.is_zero()) return *this = Const();
    if (!o.frac_) return *this = from_parts(frac_->num.scaled(o.num_), frac_->den);
    if (!frac_) return *this = from_parts(o.frac_->num.scaled(num_), o.frac_->den);
    return *this = fraction(frac_->num * o.frac_->num, frac_->den * o.frac_->den);
}

Const& Const::operator/=(const Const& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero constant");
    if (!frac_ && !o.frac_) {
        num_ /= o.num_;
        return *this;
    }
    return *this = fraction(numerator() * o.denominator(), denominator() * o.numerator());
}

bool operator==(const Const& a, const Const& b) {
    if (!a.frac_ && !b.frac_) return a.num_ == b.num_;
    if (!a.frac_ || !b.frac_) return false;
    return a.frac_->num == b.frac_->num && a.frac_->den == b.frac_->den;
}

namespace {

int compare_atom_poly(const AtomPoly& a, const AtomPoly& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (int c = grlex_cmp(a.terms()[k].m, b.terms()[k].m); c != 0) return c;
        if (int c = a.terms()[k].c.compare(b.terms()[k].c); c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

bool gauss_compound(const GaussRat& g) { return !g.is_real() && sgn(g.re()) != 0; }

std::string atom_poly_text(const AtomPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        GaussRat c = t.c;
        bool neg = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        first = false;
        std::string mono;
        for (auto it = t.m.f.rbegin(); it != t.m.f.rend(); ++it) {
            if (!mono.empty()) mono += "*";
            mono += "@" + AtomRegistry::instance().name(it->first);
            if (it->second > 1) mono += "^" + std::to_string(it->second);
        }
        if (mono.empty()) {
            out += gauss_compound(c) ? "(" + c.to_string() + ")" : c.to_string();
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += (gauss_compound(c) ? "(" + c.to_string() + ")" : c.to_string()) + "*" + mono;
        }
    }
    return out;
}

}  // namespace

int Const::compare(const Const& o) const {
    if (!frac_ && !o.frac_) return num_.compare(o.num_);
    if (!frac_) return -1;
    if (!o.frac_) return 1;
    if (int c = compare_atom_poly(frac_->num, o.frac_->num); c != 0) return c;
    return compare_atom_poly(frac_->den, o.frac_->den);
}

bool Const::is_compound() const {
    if (!frac_) return gauss_compound(num_) || (num_.is_real() && num_.re().get_den() != 1);
    if (!frac_->den.is_one()) return true;
    const AtomPoly& n = frac_->num;
    if (n.size() > 1) return true;
    return !n.terms()[0].c.is_one();
}

std::string Const::to_string() const {
    if (!frac_) return num_.to_string();
    std::string n = atom_poly_text(frac_->num);
    if (frac_->den.is_one()) return n;
    if (frac_->num.size() > 1) n = "(" + n + ")";
    std::string d = atom_poly_text(frac_->den);
    bool simple_den = frac_->den.size() == 1 && frac_->den.terms()[0].c.is_one() && frac_->den.terms()[0].m.f.size() == 1 &&
                      frac_->den.terms()[0].m.deg == 1;
    return n + "/" + (simple_den ? d : "(" + d + ")");
}

ConstVec vec_project(const ConstVec& v, std::size_t k) {
    if (k >= v.size()) return {};
    return ConstVec(v.begin(), v.end() - static_cast<std::ptrdiff_t>(k));
}

const Const& vec_last(const ConstVec& v) {
    if (v.empty()) throw Error(ErrorKind::EmptyVector, "last coordinate of an empty vector");
    return v.back();
}

int compare_vec(const ConstVec& a, const ConstVec& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
        if (int c = a[k].compare(b[k]); c != 0) return c;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace dfsub
