#include "breakout/report_json.hpp"

#include <stdexcept>

namespace breakout {

namespace {

Json big(const BigInt& v) { return v.str(); }

BigInt big_from(const Json& j) { return parse_bigint(j.get<std::string>()); }

Slope slope_from(const Json& j) {
  const Rational r = Rational::parse(j.get<std::string>());
  return make_slope(r.numerator(), r.denominator());
}

Json condition_names(const ConditionSet& set) {
  Json out = Json::array();
  for (Condition c : set.members()) out.push_back(std::string(condition_name(c)));
  return out;
}

ConditionSet conditions_from(const Json& j) {
  ConditionSet set;
  for (const auto& item : j) {
    const auto c = parse_condition(item.get<std::string>());
    if (!c) throw std::invalid_argument("unknown condition " + item.dump());
    set.insert(*c);
  }
  return set;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json optional_big(const std::optional<BigInt>& v) { return v ? big(*v) : Json(nullptr); }

std::optional<BigInt> optional_big_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return big_from(j);
}

std::optional<Rational> optional_rational_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return rational_from_json(j);
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

Json to_json(const ConditionSetReport& r) { return Json{{"chi", big(r.chi)}, {"set", condition_names(r.set)}}; }

ConditionSetReport condition_set_report_from_json(const Json& j) {
  return {big_from(j.at("chi")), conditions_from(j.at("set"))};
}

Json to_json(const SlopeVerdict& v) {
  Json periods = Json::array();
  for (const ElementaryPeriod& p : v.periods) {
    periods.push_back(Json{{"period", p.period.to_string()},
                           {"window", Json::array({to_json(p.window.lo), to_json(p.window.hi)})},
                           {"chi", big(p.chi)},
                           {"condition", std::string(condition_name(p.condition))}});
  }
  return Json{{"slope", v.slope.to_string()},
              {"elementary", v.elementary},
              {"reason", std::string(reason_name(v.reason))},
              {"periods", periods}};
}

SlopeVerdict slope_verdict_from_json(const Json& j) {
  const auto reason = parse_reason(j.at("reason").get<std::string>());
  if (!reason) throw std::invalid_argument("unknown reason " + j.at("reason").dump());
  SlopeVerdict v{slope_from(j.at("slope")), j.at("elementary").get<bool>(), *reason, {}};
  for (const auto& p : j.at("periods")) {
    const auto cond = parse_condition(p.at("condition").get<std::string>());
    if (!cond) throw std::invalid_argument("unknown condition " + p.at("condition").dump());
    const auto& w = p.at("window");
    v.periods.push_back({Period::parse(p.at("period").get<std::string>()),
                         {rational_from_json(w.at(0)), rational_from_json(w.at(1))},
                         big_from(p.at("chi")),
                         *cond});
  }
  return v;
}

Json to_json(const PeriodicityReport& r) {
  Json translations = Json::array();
  for (const auto& t : r.translations) translations.push_back(Json::array({t[0], t[1]}));
  return Json{{"preperiod", r.preperiod},
              {"period", r.period},
              {"translation", Json::array({r.translation[0], r.translation[1]})},
              {"verified_window", r.verified_window},
              {"uniform", r.uniform},
              {"translations", translations}};
}

PeriodicityReport periodicity_report_from_json(const Json& j) {
  PeriodicityReport r;
  r.preperiod = j.at("preperiod").get<std::size_t>();
  r.period = j.at("period").get<std::size_t>();
  r.translation = {j.at("translation").at(0).get<long long>(), j.at("translation").at(1).get<long long>()};
  r.verified_window = j.at("verified_window").get<std::size_t>();
  r.uniform = j.at("uniform").get<bool>();
  for (const auto& t : j.at("translations")) r.translations.push_back({t.at(0).get<long long>(), t.at(1).get<long long>()});
  return r;
}

Json to_json(const OrbitEvent& e) {
  return Json{{"index", e.index},
              {"brick", Json::array({e.brick.x, e.brick.y})},
              {"edge", e.edge == Edge::Horizontal ? "h" : "v"},
              {"hit", Json::array({to_json(e.hit.x), to_json(e.hit.y)})}};
}

OrbitEvent orbit_event_from_json(const Json& j) {
  const std::string edge = j.at("edge").get<std::string>();
  if (edge != "h" && edge != "v") throw std::invalid_argument("edge must be \"h\" or \"v\"");
  return {j.at("index").get<std::size_t>(),
          {j.at("brick").at(0).get<long long>(), j.at("brick").at(1).get<long long>()},
          edge == "h" ? Edge::Horizontal : Edge::Vertical,
          {rational_from_json(j.at("hit").at(0)), rational_from_json(j.at("hit").at(1))}};
}

Json to_json(const PellSolution& s) {
  Json out{{"x", big(s.x)}, {"y", big(s.y)}, {"alpha0", optional_big(s.alpha0)}, {"alpha2", optional_big(s.alpha2)}};
  out["chi"] = s.alpha0 ? big(chi_from_solution(s)) : Json(nullptr);
  return out;
}

PellSolution pell_solution_from_json(const Json& j) {
  PellSolution s = make_pell_solution(big_from(j.at("x")), big_from(j.at("y")));
  if (optional_big_from(j.at("alpha0")) != s.alpha0 || optional_big_from(j.at("alpha2")) != s.alpha2)
    throw std::invalid_argument("block coordinates inconsistent with (x, y)");
  return s;
}

Json to_json(const Census& c) {
  Json out = Json::array();
  for (const auto& [chi, set] : c) out.push_back(to_json(ConditionSetReport{chi, set}));
  return out;
}

Census census_from_json(const Json& j) {
  Census out;
  for (const auto& item : j) {
    ConditionSetReport r = condition_set_report_from_json(item);
    out.emplace(std::move(r.chi), r.set);
  }
  return out;
}

Json to_json(const SlicingProfile& p) {
  return Json{{"lambda0", big(p.lambda0)},
              {"mu0", to_json(p.mu0)},
              {"leading", big(p.leading)},
              {"correcting", optional_big(p.correcting)},
              {"lambda1", optional_big(p.lambda1)},
              {"mu1", optional_json(p.mu1)},
              {"s_prime", optional_json(p.s_prime)}};
}

SlicingProfile slicing_profile_from_json(const Json& j) {
  return {big_from(j.at("lambda0")),
          rational_from_json(j.at("mu0")),
          big_from(j.at("leading")),
          optional_big_from(j.at("correcting")),
          optional_big_from(j.at("lambda1")),
          optional_rational_from(j.at("mu1")),
          optional_rational_from(j.at("s_prime"))};
}

Json to_json(const VerificationSummary& v) {
  const VerificationReport& r = v.result;
  return Json{{"slope", v.slope.to_string()},
              {"y0", to_json(v.y0)},
              {"period", v.period.to_string()},
              {"periods", v.periods},
              {"passed", r.passed},
              {"blocks_checked", r.blocks_checked},
              {"events_checked", r.events_checked},
              {"first_mismatch", r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr)},
              {"detail", r.detail}};
}

VerificationSummary verification_summary_from_json(const Json& j) {
  VerificationSummary v{slope_from(j.at("slope")), rational_from_json(j.at("y0")),
                        Period::parse(j.at("period").get<std::string>()), j.at("periods").get<std::size_t>(), {}};
  v.result.passed = j.at("passed").get<bool>();
  v.result.blocks_checked = j.at("blocks_checked").get<std::size_t>();
  v.result.events_checked = j.at("events_checked").get<std::size_t>();
  if (!j.at("first_mismatch").is_null()) v.result.first_mismatch = j.at("first_mismatch").get<std::size_t>();
  v.result.detail = j.at("detail").get<std::string>();
  return v;
}

std::string export_json(const Json& j) { return j.dump(); }

std::string events_to_json_lines(const std::vector<OrbitEvent>& events) {
  std::string out;
  for (const OrbitEvent& e : events) out += to_json(e).dump() + "\n";
  return out;
}

}  // namespace breakout
