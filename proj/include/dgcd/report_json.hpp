#pragma once

#include <string>
#include <string_view>

#include "dgcd/closure_lab.hpp"
#include "dgcd/jacobian.hpp"
#include "dgcd/theorem_lab.hpp"

namespace dgcd {

// Stable JSON for every report type. Polynomials are print_polynomial strings;
// each report carries its variables and monomial order so it can be read back
// without context. Minor columns are 1-based in JSON.

std::string to_json(const JacobianReport& r);
std::string to_json(const WitnessReport& r);
std::string to_json(const Theorem1Report& r);
std::string to_json(const CampaignReport& r);
std::string to_json(const ClosureReport& r);

/// Same shape as a witness report with "found": false and "w": null.
std::string witness_not_found_json(const Polynomial& g, const std::vector<Polynomial>& members, int search_degree_bound);

// Throw Error on malformed input.
JacobianReport jacobian_report_from_json(std::string_view text);
WitnessReport witness_report_from_json(std::string_view text);
Theorem1Report theorem1_report_from_json(std::string_view text);
CampaignReport campaign_report_from_json(std::string_view text);
ClosureReport closure_report_from_json(std::string_view text);

}  // namespace dgcd
