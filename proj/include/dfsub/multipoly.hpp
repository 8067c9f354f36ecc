#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dfsub/constfield.hpp"
#include "dfsub/symbols.hpp"

namespace dfsub {

using MPoly = SparsePoly<Const>;
using SymSet = std::set<SymId>;
using Shift = std::map<SymId, Const>;

inline MPoly mvar(SymId s) { return MPoly::var(s); }
inline MPoly mconst(Const c) { return MPoly(std::move(c)); }

// Comparison of monomials under the canonical symbol order (grlex).
int canonical_monomial_cmp(const Monomial& a, const Monomial& b);
// Leading term under the canonical order; p must be nonzero.
const MPoly::Term& canonical_lead(const MPoly& p);
MPoly canonical_monic(const MPoly& p);
// Terms sorted by decreasing canonical order.
std::vector<MPoly::Term> canonical_terms(const MPoly& p);

// Monic gcd; BothZero when a = b = 0.
MPoly poly_gcd(const MPoly& a, const MPoly& b);
// Quotient b / a when a divides b; ZeroDivisor when a = 0.
std::optional<MPoly> divides(const MPoly& a, const MPoly& b);
MPoly partial(const MPoly& p, SymId s);
MPoly translate(const MPoly& p, const Shift& shift);
// Scales each exponential symbol: e -> λ·e.
MPoly rescale(const MPoly& p, const Shift& scale);
// Components graded by total degree in vars, degrees increasing.
std::vector<std::pair<std::uint32_t, MPoly>> homogeneous_components(const MPoly& p, const SymSet& vars);
SymSet symbols_of(const MPoly& p);

class DerivationTable;

/// Reduced fraction P/Q with Q monic under the canonical order.
class RatExpr {
public:
    RatExpr() : den_(Const(1)) {}
    RatExpr(Const c) : num_(std::move(c)), den_(Const(1)) {}  // NOLINT(google-explicit-constructor)
    RatExpr(long c) : RatExpr(Const(c)) {}                    // NOLINT(google-explicit-constructor)
    RatExpr(MPoly p) : num_(std::move(p)), den_(Const(1)) {}  // NOLINT(google-explicit-constructor)
    static RatExpr symbol(SymId s) { return RatExpr(mvar(s)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Const constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatExpr operator-() const;
    friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator-(const RatExpr& a, const RatExpr& b) { return a + (-b); }
    friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
    friend RatExpr operator/(const RatExpr& a, const RatExpr& b);
    RatExpr& operator+=(const RatExpr& b) { return *this = *this + b; }
    RatExpr& operator-=(const RatExpr& b) { return *this = *this - b; }
    RatExpr& operator*=(const RatExpr& b) { return *this = *this * b; }
    RatExpr pow(long e) const;

    friend bool operator==(const RatExpr& a, const RatExpr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatExpr& a, const RatExpr& b) { return !(a == b); }

    SymSet symbols() const;

private:
    MPoly num_;
    MPoly den_;
    friend RatExpr reduce_fraction(const MPoly& num, const MPoly& den);
    friend RatExpr apply_derivation(const RatExpr& u, const DerivationTable& table);
    static RatExpr raw(MPoly num, MPoly den);
};

// num/den in lowest terms; ZeroDenominator when den = 0.
RatExpr reduce_fraction(const MPoly& num, const MPoly& den);

/// Derivatives of tower symbols. Exponential symbols store e′/e.
class DerivationTable {
public:
    void set(SymId s, RatExpr d) { map_[s] = std::move(d); }
    bool has(SymId s) const { return map_.count(s) > 0; }
    const RatExpr& get(SymId s) const;
    const std::map<SymId, RatExpr>& entries() const { return map_; }

private:
    std::map<SymId, RatExpr> map_;
};

// Derivative of a symbol as a RatExpr (e′ = (e′/e)·e for exponentials).
RatExpr symbol_derivative(SymId s, const DerivationTable& table);
RatExpr apply_derivation(const MPoly& p, const DerivationTable& table);
RatExpr apply_derivation(const RatExpr& u, const DerivationTable& table);

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibleResult {
    Irreducibility verdict = Irreducibility::Unknown;
    std::vector<MPoly> factors;  // filled for Reducible when computable
};

// Degree 1 with trivial content is irreducible; degree 2 is decided over the
// algebraically closed constant field by the rank of the quadratic form;
// higher degrees are Unknown. `vars` restricts the variables (default all).
IrreducibleResult irreducible_linear_check(const MPoly& p, const std::optional<SymSet>& vars = std::nullopt);

}  // namespace dfsub
