#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "dfsub/constfield.hpp"
#include "dfsub/symbols.hpp"

namespace dfsub {

using ConstMatrix = std::vector<std::vector<Const>>;

// In-place reduced row echelon form; zero rows are dropped. Returns the
// pivot column of each remaining row.
std::vector<std::size_t> rref(ConstMatrix& m);
std::size_t rank(ConstMatrix m);

/// A C-linear combination of tower symbols. Zero coefficients are not stored.
using LinearForm = std::map<SymId, Const>;

// Columns in canonical symbol order over the union of supports.
std::vector<SymId> form_columns(const std::vector<LinearForm>& forms);
// Canonical basis of the row space: RREF with pivots taken in canonical
// symbol order, each row scaled so its pivot is 1.
std::vector<LinearForm> rref_forms(const std::vector<LinearForm>& forms);
bool span_equal(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b);
// Whether f lies in the row space of basis.
bool in_span(const LinearForm& f, const std::vector<LinearForm>& basis);
Const evaluate_form(const LinearForm& f, const std::map<SymId, Const>& point);

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Row-style Hermite normal form of the lattice spanned by the rows: upper
// echelon, positive pivots, entries above a pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

}  // namespace dfsub
