#include "breakout/classifier.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "breakout/stacking.hpp"

namespace breakout {

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::TwoMinus: return "2-";
    case Condition::OneMinus: return "1-";
    case Condition::ZeroMinus: return "0-";
    case Condition::EZeroMinus: return "E0-";
    case Condition::E: return "E";
    case Condition::EZeroPlus: return "E0+";
    case Condition::ZeroPlus: return "0+";
    case Condition::OnePlus: return "1+";
    case Condition::TwoPlus: return "2+";
  }
  return "?";
}

std::optional<Condition> parse_condition(std::string_view name) {
  for (Condition c : kAllConditions)
    if (condition_name(c) == name) return c;
  return std::nullopt;
}

std::size_t ConditionSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Condition> ConditionSet::members() const {
  std::vector<Condition> out;
  for (Condition c : kAllConditions)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string to_string(const ConditionSet& set) {
  std::string out = "{";
  bool first = true;
  for (Condition c : set.members()) {
    if (!first) out += ", ";
    out += condition_name(c);
    first = false;
  }
  return out + "}";
}

namespace {

struct Candidate {
  TernaryBlock block;
  bool elementary;
};

Candidate candidate(BlockKind kind, const BigInt& chi) {
  TernaryBlock b = family_block({kind, chi});
  const bool e = is_elementary(b);
  return {std::move(b), e};
}

bool stacks(const Candidate& upper, const Candidate& lower) {
  return upper.elementary && lower.elementary && stacks_on(upper.block, lower.block).stackable;
}

}  // namespace

ConditionSet condition_set(const BigInt& chi) {
  if (chi < 2) throw DomainError("condition sets need chi >= 2, got " + chi.str());
  using K = BlockKind;
  const Candidate lambda = candidate(K::Lambda, chi);

  ConditionSet out;
  if (stacks(lambda, lambda)) out.insert(Condition::E);

  constexpr std::pair<K, Condition> kSelf[] = {
      {K::Lambda0Minus, Condition::ZeroMinus}, {K::Lambda0Plus, Condition::ZeroPlus},
      {K::Lambda1Minus, Condition::OneMinus},  {K::Lambda1Plus, Condition::OnePlus},
      {K::Lambda2Minus, Condition::TwoMinus},  {K::Lambda2Plus, Condition::TwoPlus},
  };
  for (const auto& [kind, cond] : kSelf) {
    const Candidate c = candidate(kind, chi);
    if (stacks(c, c)) out.insert(cond);
    if (kind == K::Lambda0Minus && stacks(c, lambda) && stacks(lambda, c)) out.insert(Condition::EZeroMinus);
    if (kind == K::Lambda0Plus && stacks(c, lambda) && stacks(lambda, c)) out.insert(Condition::EZeroPlus);
  }
  return out;
}

bool necessary_filter(const Slope& slope) {
  const BigInt& p = slope.p();
  if (p == 1) return true;
  if (p % 3 != 0) return false;
  const BigInt r = slope.q() % p;
  return r == 1 || r == p - 1;
}

std::string Period::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks.size();) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    if (i > 0) out += ' ';
    out += kind_name(blocks[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")^inf";
}

Period Period::parse(std::string_view text) {
  const auto fail = [&] { return std::invalid_argument("malformed period '" + std::string(text) + "'"); };
  if (text.size() < 6 || text.front() != '(' || !text.ends_with(")^inf")) throw fail();
  std::istringstream in(std::string(text.substr(1, text.size() - 6)));
  Period out;
  std::string token;
  while (in >> token) {
    std::size_t repeat = 1;
    const auto caret = token.find('^');
    if (caret != std::string::npos) {
      const std::string count = token.substr(caret + 1);
      if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) throw fail();
      repeat = std::stoul(count);
      token.resize(caret);
    }
    const auto kind = parse_kind(token);
    if (!kind || repeat == 0) throw fail();
    out.blocks.insert(out.blocks.end(), repeat, *kind);
  }
  if (out.blocks.empty()) throw fail();
  return out;
}

std::string_view reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::FailsNecessary: return "FailsNecessary";
    case VerdictReason::NoConditionHolds: return "NoConditionHolds";
    case VerdictReason::Elementary: return "Elementary";
  }
  return "?";
}

std::optional<VerdictReason> parse_reason(std::string_view name) {
  for (auto r : {VerdictReason::FailsNecessary, VerdictReason::NoConditionHolds, VerdictReason::Elementary})
    if (reason_name(r) == name) return r;
  return std::nullopt;
}

SlopeVerdict classify_slope(const Slope& slope) {
  SlopeVerdict v{slope, false, VerdictReason::FailsNecessary, {}};
  if (!necessary_filter(slope)) return v;
  v.reason = VerdictReason::NoConditionHolds;

  const BigInt& p = slope.p();
  const BigInt& q = slope.q();
  const auto at = [&](const BigInt& k) { return Rational(k, q); };
  using K = BlockKind;

  if (p == 1) {
    if (condition_set(q).contains(Condition::E))
      v.periods.push_back({Period{{K::Lambda}}, {at(0), at(1)}, q, Condition::E});
  } else {
    const BigInt j = p / 3;
    const int sign = q % p == 1 ? 1 : -1;
    const BigInt chi = (q - sign) / p;
    if (chi < 2) return v;
    const ConditionSet set = condition_set(chi);

    if (j == 1) {
      // Windows (k/q, (k+1)/q) in the order the three adjusted blocks become primary.
      struct Slot {
        Condition cond;
        K kind;
        int k;
      };
      const Slot minus[] = {{Condition::TwoMinus, K::Lambda2Minus, 0},
                            {Condition::OneMinus, K::Lambda1Minus, 1},
                            {Condition::ZeroMinus, K::Lambda0Minus, 2}};
      const Slot plus[] = {{Condition::ZeroPlus, K::Lambda0Plus, 0},
                           {Condition::OnePlus, K::Lambda1Plus, 1},
                           {Condition::TwoPlus, K::Lambda2Plus, 2}};
      for (const Slot& s : sign < 0 ? minus : plus)
        if (set.contains(s.cond)) v.periods.push_back({Period{{s.kind}}, {at(s.k), at(s.k + 1)}, chi, s.cond});
    } else {
      const Condition mixed = sign < 0 ? Condition::EZeroMinus : Condition::EZeroPlus;
      // Beyond J = 2 the period also stacks Lambda on itself.
      const bool lambda_chain_ok = j == 2 || set.contains(Condition::E);
      if (set.contains(mixed) && lambda_chain_ok) {
        Period period;
        period.blocks.assign(static_cast<std::size_t>(j - 1), K::Lambda);
        period.blocks.push_back(sign < 0 ? K::Lambda0Minus : K::Lambda0Plus);
        const OpenInterval window = sign < 0 ? OpenInterval{at(2), at(3)} : OpenInterval{at(3 * j - 3), at(3 * j - 2)};
        v.periods.push_back({std::move(period), window, chi, mixed});
      }
    }
  }
  if (!v.periods.empty()) {
    v.elementary = true;
    v.reason = VerdictReason::Elementary;
  }
  return v;
}

std::vector<SlopeVerdict> elementary_slopes(const BigInt& chi, const BigInt& q_max) {
  std::vector<SlopeVerdict> out;
  const ConditionSet set = condition_set(chi);
  const auto add = [&](const BigInt& p, const BigInt& q) {
    if (q > q_max) return;
    SlopeVerdict v = classify_slope(make_slope(p, q));
    if (v.elementary) out.push_back(std::move(v));
  };
  if (set.contains(Condition::E)) add(1, chi);
  if (set.contains(Condition::TwoMinus) || set.contains(Condition::OneMinus) || set.contains(Condition::ZeroMinus))
    add(3, 3 * chi - 1);
  if (set.contains(Condition::TwoPlus) || set.contains(Condition::OnePlus) || set.contains(Condition::ZeroPlus))
    add(3, 3 * chi + 1);
  for (int sign : {-1, 1}) {
    if (!set.contains(sign < 0 ? Condition::EZeroMinus : Condition::EZeroPlus)) continue;
    for (BigInt j = 2;; ++j) {
      const BigInt q = 3 * j * chi + sign;
      if (q > q_max) break;
      add(3 * j, q);
    }
  }
  return out;
}

Census census(const BigInt& lo, const BigInt& hi, unsigned jobs) {
  if (lo < 2 || hi < lo) throw DomainError("census needs 2 <= lo <= hi");
  jobs = std::max(1u, jobs);
  const BigInt span = hi - lo + 1;
  if (span < jobs) jobs = static_cast<unsigned>(span);

  std::vector<Census> parts(jobs);
  const auto run = [&](unsigned part) {
    const BigInt begin = lo + span * part / jobs;
    const BigInt end = lo + span * (part + 1) / jobs;
    for (BigInt chi = begin; chi < end; ++chi) {
      ConditionSet s = condition_set(chi);
      if (!s.empty()) parts[part].emplace(chi, s);
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned part = 0; part < jobs; ++part) workers.emplace_back(run, part);
  }
  Census out;
  for (auto& part : parts) out.merge(part);
  return out;
}

}  // namespace breakout
