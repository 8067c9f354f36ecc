#pragma once

#include <string>
#include <vector>

#include "dfsub/linalg.hpp"
#include "dfsub/multipoly.hpp"
#include "dfsub/subfield.hpp"

namespace dfsub {

// All printers emit text that parse() reads back to the same value.
std::string poly_text(const MPoly& p);
std::string rat_text(const RatExpr& u);
std::string form_text(const LinearForm& f);
std::string fform_text(const FForm& f);
std::string product_text(const PowerProduct& p);

// "C", "C(x)", "C(ln(x+1), x, ...)" from base symbols and generators.
std::string field_text(const SubfieldPresentation& p);
std::string field_text(const std::vector<SymId>& symbols, const std::vector<LinearForm>& forms,
                       const std::vector<PowerProduct>& products = {});

}  // namespace dfsub
