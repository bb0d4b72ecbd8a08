#include "epimine/metrics.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace epimine {

Classification classify(const Rule& rule, const DataItem& d) {
  Classification c;
  c.fired = true;
  for (const Atom& cond : rule.conditions)
    if (!atom_holds(cond, d.at(cond.arg))) {
      c.fired = false;
      break;
    }
  c.agrees = atom_holds(rule.head, d.at(rule.head.arg));
  c.correct = c.fired && c.agrees;
  return c;
}

RuleStats stats(const Rule& rule, const Dataset& D, ConfidenceMode mode) {
  if (D.items.empty()) raise(ErrorCode::EmptyDataset, "no rows to score the rule on");
  RuleStats s;
  s.dataset_size = static_cast<std::int64_t>(D.size());
  for (const DataItem& d : D.items) {
    const Classification c = classify(rule, d);
    s.fired += c.fired;
    s.agrees += c.agrees;
    s.correct += c.correct;
  }
  s.support = Rational::of(s.fired, s.dataset_size);
  if (mode == ConfidenceMode::Dataset)
    s.confidence = Rational::of(s.correct, s.dataset_size);
  else if (s.fired > 0)
    s.confidence = Rational::of(s.correct, s.fired);
  if (s.fired > 0 && s.agrees > 0)
    s.lift = Rational::of(s.correct * s.dataset_size, s.fired * s.agrees);
  return s;
}

std::vector<Rule> best(const std::vector<Rule>& rules, const Dataset& D,
                       const Rational& tau_support, const Rational& tau_confidence,
                       ConfidenceMode mode) {
  const Rational one = Rational::integer(1);
  std::vector<Rule> out;
  for (const Rule& r : rules) {
    const RuleStats s = stats(r, D, mode);
    if (s.support > tau_support && s.confidence && *s.confidence > tau_confidence && s.lift &&
        *s.lift > one)
      out.push_back(r);
  }
  return out;
}

namespace {

// Key for a (head, condition subset) pair; conditions stay sorted, so the
// concatenation is canonical.
std::string subset_key(const Rule& r, unsigned mask) {
  std::string key = r.head.to_string();
  for (std::size_t i = 0; i < r.conditions.size(); ++i)
    if (mask & (1u << i)) key += "|" + r.conditions[i].to_string();
  return key;
}

}  // namespace

std::vector<Rule> simplest(const std::vector<Rule>& rules) {
  std::unordered_set<std::string> present;
  for (const Rule& r : rules) {
    const unsigned full = (1u << r.conditions.size()) - 1u;
    present.insert(subset_key(r, full));
  }
  std::vector<Rule> out;
  for (const Rule& r : rules) {
    const unsigned full = (1u << r.conditions.size()) - 1u;
    bool dominated = false;
    for (unsigned mask = 1; mask < full && !dominated; ++mask)
      dominated = present.count(subset_key(r, mask)) > 0;
    if (!dominated) out.push_back(r);
  }
  return out;
}

}  // namespace epimine
