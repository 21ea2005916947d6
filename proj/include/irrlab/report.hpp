#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "irrlab/claims.hpp"
#include "irrlab/invariants.hpp"
#include "irrlab/verifier.hpp"

namespace irrlab {

// Single-line JSON; rationals as {"num":..., "den":...}.
std::string bundle_to_json(const InvariantBundle& bundle);

// Report schema: {run, outcomes, extremal, summary, claim_summaries}.
// Exact values carry num/den plus a decimal rendering; float-only values
// carry "approx". Pretty-printed with a trailing newline.
std::string report_to_json(const Report& report);

// One row per (claim, class) with verdict counts.
std::string report_to_csv(const Report& report);

// class,index,count,min,max,min_witnesses,max_witnesses
std::string extremal_csv_header();
std::string extremal_to_csv_row(const ExtremalResult& result);

// id, statement, kind, guard, parameters, source, parts, interpretation.
std::string catalogue_to_json();

// Outcomes read back from a report, enough to replay witnesses; lhs and rhs
// are not reconstructed. Throws Error{kInvalidParams} on malformed input.
std::vector<ClaimOutcome> outcomes_from_json(std::string_view text);

}  // namespace irrlab
