#pragma once

#include <json.hpp>
#include <string>

#include "dfsub/certify.hpp"
#include "dfsub/frontend/tower.hpp"
#include "dfsub/probe.hpp"
#include "dfsub/subfield.hpp"

namespace dfsub {

using Json = nlohmann::ordered_json;

Json symbols_json(std::vector<SymId> ids);
Json form_json(const LinearForm& f);
Json presentation_json(const SubfieldPresentation& p);
Json analysis_json(const std::string& input, const IterlogAnalysis& a);
Json towers_json(const std::string& input, const ClosureSet& c, const TowerReport& t);
Json essential_json(const std::string& input, const SymSet& e);
Json certificate_json(const Certificate& c);
Json generic_json(const std::string& input, const GenericAnalysis& g);
Json probe_json(const std::string& input, const std::vector<SymId>& vars, const std::vector<Const>& values,
                const ProbeReport& r);
Json error_json(const Error& e);

// "C(a, b) ⊃ C(b) ⊃ C" from the top stage down.
std::string tower_text(const std::vector<std::vector<SymId>>& stages);

}  // namespace dfsub
