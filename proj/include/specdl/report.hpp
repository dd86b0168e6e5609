#ifndef SPECDL_REPORT_HPP
#define SPECDL_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "specdl/closed_form.hpp"
#include "specdl/energy.hpp"
#include "specdl/search.hpp"
#include "specdl/theorems.hpp"

namespace specdl {

// Insertion-ordered JSON so identical inputs serialize byte-identically.
using json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

// Rounds to 12 significant digits before insertion; the serialized form then
// never carries more digits and is stable across runs.
double round12(double v);
json json_number(double v);
json json_spectrum(const std::vector<double>& descending);

json to_json(const EnergyReport& r);
json to_json(const BoundCheck& c);
json to_json(const AnalyticSpectrum& s);
json to_json(const ExtremalResult& r);
json to_json(const SigmaCensus& c);

// Report envelope: schema version plus the input description.
json report_shell(const std::string& command, const json& input);

// bound_checks flattened for spreadsheets; includes a header row.
std::string bound_checks_csv(const std::vector<std::pair<std::string, BoundCheck>>& rows);

// FNV-1a digest of file bytes, hex; identifies --edgelist inputs in reports.
std::string fnv1a_hex(const std::string& bytes);

} // namespace specdl

#endif
