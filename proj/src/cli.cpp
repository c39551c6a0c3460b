#include "breakout/cli.hpp"

#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "breakout/report_json.hpp"
#include "breakout/svg.hpp"

namespace breakout {

namespace {

constexpr std::size_t kConfirmPeriods = 3;

// Usage errors detected after CLI11 parsing (malformed numbers and the like).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

BigInt arg_int(const std::string& text, const char* what) {
  try {
    return parse_bigint(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not an integer: '" + text + "'");
  }
}

Rational arg_rational(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not a fraction: '" + text + "'");
  }
}

// Ordinate used when none is given: inside the first elementary window when
// there is one, otherwise inside (0, S).
Rational pick_ordinate(const Slope& slope, const SlopeVerdict& verdict) {
  const OpenInterval window = verdict.periods.empty() ? phase_interval(slope) : verdict.periods.front().window;
  return default_ordinate(slope, window);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification and simulation of breakout slopes", "breakout"};
  app.require_subcommand(1);

  std::string p_text, q_text, chi_text, lo_text, hi_text, y0_text;
  unsigned jobs = 1;
  std::size_t events = 200, periods = 10, count = 8, length = 20;
  std::string json_path, svg_path;

  auto* classify = app.add_subcommand("classify", "Classify the slope p/q");
  classify->add_option("p", p_text)->required();
  classify->add_option("q", q_text)->required();

  auto* cset = app.add_subcommand("condition-set", "Conditions holding at leading slice chi");
  cset->add_option("chi", chi_text)->required();

  auto* cen = app.add_subcommand("census", "Nonempty condition sets for chi in [lo, hi]");
  cen->add_option("lo", lo_text)->required();
  cen->add_option("hi", hi_text)->required();
  cen->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* sim = app.add_subcommand("simulate", "Run the brick-breaking oracle");
  sim->add_option("p", p_text)->required();
  sim->add_option("q", q_text)->required();
  sim->add_option("--y0", y0_text, "Launch ordinate a/b in (0, 1)");
  sim->add_option("--events", events, "Bricks to destroy")->check(CLI::PositiveNumber);
  sim->add_option("--json", json_path, "Write events as JSON lines");
  sim->add_option("--svg", svg_path, "Write one relative period as SVG");

  auto* ver = app.add_subcommand("verify", "Check the predicted elementary sequence against the oracle");
  ver->add_option("p", p_text)->required();
  ver->add_option("q", q_text)->required();
  ver->add_option("--periods", periods, "Periods to check")->check(CLI::PositiveNumber);

  auto* pell = app.add_subcommand("pell", "Qualifying solutions of x^2 - 3y^2 = 1");
  pell->add_option("--count", count, "Number of solutions")->required()->check(CLI::PositiveNumber);

  auto* seq = app.add_subcommand("sequence", "Slicing sequence of p/q");
  seq->add_option("p", p_text)->required();
  seq->add_option("q", q_text)->required();
  seq->add_option("--y0", y0_text, "Start ordinate a/b in (0, p/q)");
  seq->add_option("--len", length, "Terms")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify) {
      const Slope slope = make_slope(arg_int(p_text, "p"), arg_int(q_text, "q"));
      out << to_json(classify_slope(slope)).dump(2) << '\n';
    } else if (*cset) {
      const BigInt chi = arg_int(chi_text, "chi");
      out << to_json(ConditionSetReport{chi, condition_set(chi)}).dump(2) << '\n';
    } else if (*cen) {
      out << to_json(census(arg_int(lo_text, "lo"), arg_int(hi_text, "hi"), jobs)).dump(2) << '\n';
    } else if (*sim) {
      const Slope slope = make_slope(arg_int(p_text, "p"), arg_int(q_text, "q"));
      const Rational y0 = y0_text.empty() ? pick_ordinate(slope, classify_slope(slope)) : arg_rational(y0_text, "y0");
      const auto run = simulate(slope, y0, events);
      const auto report = detect_relative_periodicity(run, kConfirmPeriods);
      if (!json_path.empty()) write_file(json_path, events_to_json_lines(run));
      if (!svg_path.empty()) {
        if (!report) throw DomainError("no relative period among " + std::to_string(events) + " events; raise --events");
        FigureSpec fig;
        const std::size_t keep = std::min(run.size(), report->preperiod + report->period + 1);
        fig.events.assign(run.begin(), run.begin() + static_cast<std::ptrdiff_t>(keep));
        fig.preperiod = report->preperiod;
        fig.period = report->period;
        fig.start = Point{Rational(0), y0};
        write_file(svg_path, render_svg(fig));
      }
      Json summary{{"slope", slope.to_string()},
                   {"y0", to_json(y0)},
                   {"events", run.size()},
                   {"symbolic", symbolic_orbit(run)},
                   {"periodicity", report ? to_json(*report) : Json(nullptr)}};
      out << summary.dump(2) << '\n';
    } else if (*ver) {
      const Slope slope = make_slope(arg_int(p_text, "p"), arg_int(q_text, "q"));
      const SlopeVerdict verdict = classify_slope(slope);
      if (!verdict.elementary) {
        out << to_json(verdict).dump(2) << '\n';
        err << "error: " << slope.to_string() << " is not elementary (" << reason_name(verdict.reason) << ")\n";
        return 1;
      }
      const ElementaryPeriod& claim = verdict.periods.front();
      const Rational y0 = default_ordinate(slope, claim.window);
      VerificationSummary summary{slope, y0, claim.period, periods,
                                  verify_elementary_sequence_report(slope, y0, claim.period, periods)};
      out << to_json(summary).dump(2) << '\n';
      return summary.result.passed ? 0 : 1;
    } else if (*pell) {
      Json list = Json::array();
      for (const PellSolution& s : qualifying_solutions(count)) list.push_back(to_json(s));
      out << list.dump(2) << '\n';
    } else if (*seq) {
      const Slope slope = make_slope(arg_int(p_text, "p"), arg_int(q_text, "q"));
      const Rational y0 =
          y0_text.empty() ? default_ordinate(slope, phase_interval(slope)) : arg_rational(y0_text, "y0");
      Json terms = Json::array();
      for (const BigInt& t : slicing_sequence(slope, y0, length)) terms.push_back(t.str());
      Json doc{{"slope", slope.to_string()},
               {"y0", to_json(y0)},
               {"profile", to_json(slicing_profile(slope))},
               {"sequence", terms}};
      out << doc.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace breakout
