#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "breakout/classifier.hpp"
#include "breakout/kinematics.hpp"
#include "breakout/pell.hpp"
#include "breakout/simulator.hpp"

namespace breakout {

/// Field order follows insertion so that output is stable. Big integers and
/// rationals are always written as decimal strings.
using Json = nlohmann::ordered_json;

struct ConditionSetReport {
  BigInt chi;
  ConditionSet set;
  friend bool operator==(const ConditionSetReport&, const ConditionSetReport&) = default;
};

struct VerificationSummary {
  Slope slope;
  Rational y0;
  Period period;
  std::size_t periods = 0;
  VerificationReport result;

  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

Json to_json(const Rational& r);
Json to_json(const ConditionSetReport& r);
Json to_json(const SlopeVerdict& v);
Json to_json(const PeriodicityReport& r);
Json to_json(const OrbitEvent& e);
Json to_json(const PellSolution& s);
Json to_json(const Census& c);
Json to_json(const SlicingProfile& p);
Json to_json(const VerificationSummary& v);

Rational rational_from_json(const Json& j);
ConditionSetReport condition_set_report_from_json(const Json& j);
SlopeVerdict slope_verdict_from_json(const Json& j);
PeriodicityReport periodicity_report_from_json(const Json& j);
OrbitEvent orbit_event_from_json(const Json& j);
PellSolution pell_solution_from_json(const Json& j);
Census census_from_json(const Json& j);
SlicingProfile slicing_profile_from_json(const Json& j);
VerificationSummary verification_summary_from_json(const Json& j);

/// Compact single-line text.
std::string export_json(const Json& j);

/// One event per line.
std::string events_to_json_lines(const std::vector<OrbitEvent>& events);

}  // namespace breakout
