#include "epimine/generalize.hpp"

namespace epimine {

ExactRule pre_gen(const DataItem& d, const InfluenceTuple& I) {
  ExactRule r;
  for (const std::string& arg : I.influencers)
    r.conditions.push_back(Atom{arg, Comparator::Eq, d.at(arg)});
  r.head = Atom{I.target, Comparator::Eq, d.at(I.target)};
  return r;
}

namespace {

Atom two_way_atom(const std::string& arg, Value v) {
  if (v > Value::half()) return Atom{arg, Comparator::Gt, Value::half()};
  return Atom{arg, Comparator::Leq, Value::half()};
}

}  // namespace

Rule two_way_gen(const DataItem& d, const InfluenceTuple& I) {
  std::vector<Atom> conditions;
  for (const std::string& arg : I.influencers) conditions.push_back(two_way_atom(arg, d.at(arg)));
  return Rule::make(std::move(conditions), two_way_atom(I.target, d.at(I.target)));
}

Atom widen_atom(const Atom& exact, const RestrictedValueSet& pi) {
  const Value v = exact.val;
  const Value n = pi.nearest(v);
  Comparator op;
  if (v > n) op = Comparator::Gt;
  else if (v < n) op = Comparator::Lt;
  else if (v > Value::half()) op = Comparator::Geq;
  else op = Comparator::Leq;  // covers v = n < 0.5 and the v = n = 0.5 boundary
  return Atom{exact.arg, op, n};
}

Rule multi_way_gen(const ExactRule& r, const RestrictedValueSet& pi) {
  std::vector<Atom> conditions;
  for (const Atom& c : r.conditions) conditions.push_back(widen_atom(c, pi));
  return Rule::make(std::move(conditions), widen_atom(r.head, pi));
}

std::vector<Rule> expand_subrules(const Rule& r, int max_conditions) {
  if (max_conditions < 1)
    raise(ErrorCode::InvalidConfig, "condition cap must be at least 1");
  const std::size_t n = r.conditions.size();
  const std::size_t cap = std::min<std::size_t>(n, static_cast<std::size_t>(max_conditions));

  std::vector<Rule> out;
  std::vector<std::size_t> pick;
  auto descend = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      std::vector<Atom> conditions;
      for (std::size_t i : pick) conditions.push_back(r.conditions[i]);
      out.push_back(Rule::make(std::move(conditions), r.head));
    }
    if (pick.size() == cap) return;
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  descend(descend, 0);
  return out;
}

}  // namespace epimine
