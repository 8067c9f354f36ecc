#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfsub/gauss_rational.hpp"
#include "dfsub/sparse_poly.hpp"

namespace dfsub {

using AtomPoly = SparsePoly<GaussRat>;

/// Global append-only registry of named transcendental constants.
class AtomRegistry {
public:
    static AtomRegistry& instance();

    // Registers (or looks up) an atom. Names carrying a relation such as
    // "sqrt2=2" are refused with RelationNotSupported.
    VarId intern(std::string_view name);
    std::string name(VarId id) const;
    std::size_t size() const;

private:
    AtomRegistry() = default;
    struct Impl;
    Impl& impl() const;
};

/// An element of C = Q(i)(atoms).
///
/// Purely numeric values live in a GaussRat; anything involving atoms is a
/// reduced fraction of atom polynomials whose denominator is monic.
class Const {
public:
    Const() = default;
    Const(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Const(GaussRat v) : num_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Const(const mpq_class& v) : num_(v) {}  // NOLINT(google-explicit-constructor)

    static Const i() { return Const(GaussRat::i()); }
    static Const atom(std::string_view name);
    // num / den; throws DivisionByZero when den is zero.
    static Const fraction(const AtomPoly& num, const AtomPoly& den);

    bool is_numeric() const { return !frac_; }
    const GaussRat& numeric() const { return num_; }
    bool is_zero() const { return !frac_ && num_.is_zero(); }
    bool is_one() const { return !frac_ && num_.is_one(); }

    // Numerator and denominator as atom polynomials.
    AtomPoly numerator() const;
    AtomPoly denominator() const;

    Const operator-() const;
    Const& operator+=(const Const& o);
    Const& operator-=(const Const& o);
    Const& operator*=(const Const& o);
    Const& operator/=(const Const& o);
    friend Const operator+(Const a, const Const& b) { return a += b; }
    friend Const operator-(Const a, const Const& b) { return a -= b; }
    friend Const operator*(Const a, const Const& b) { return a *= b; }
    friend Const operator/(Const a, const Const& b) { return a /= b; }

    friend bool operator==(const Const& a, const Const& b);
    friend bool operator!=(const Const& a, const Const& b) { return !(a == b); }

    // Deterministic total order: numeric values first, then by structure.
    int compare(const Const& o) const;

    // Literal syntax accepted by the parser, e.g. "1/2", "-i", "@e+1".
    std::string to_string() const;
    // True when to_string() needs parentheses as a factor or summand.
    bool is_compound() const;

private:
    struct Frac {
        AtomPoly num;
        AtomPoly den;
    };
    GaussRat num_;
    std::shared_ptr<const Frac> frac_;

    static Const from_parts(AtomPoly num, AtomPoly den);
};

// c with every atom sent to a small integer picked by seed; nullopt when the
// denominator vanishes there.
std::optional<GaussRat> evaluate_atoms(const Const& c, long seed);

// Monic gcd of a, b in C[v], computed in Q(i)[v, atoms] after clearing denominators.
SparsePoly<Const> gcd_over_parameters(const SparsePoly<Const>& a, const SparsePoly<Const>& b, VarId v);

using ConstVec = std::vector<Const>;

// Drops the last min(k, n) coordinates.
ConstVec vec_project(const ConstVec& v, std::size_t k);
// Last coordinate; EmptyVector on an empty vector.
const Const& vec_last(const ConstVec& v);
int compare_vec(const ConstVec& a, const ConstVec& b);

}  // namespace dfsub
