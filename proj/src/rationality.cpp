#include "epimine/rationality.hpp"

namespace epimine {

const char* to_string(PrincipleId id) {
  switch (id) {
    case PrincipleId::C1: return "C1";
    case PrincipleId::C2: return "C2";
    case PrincipleId::C3: return "C3";
    case PrincipleId::C4: return "C4";
    case PrincipleId::C5: return "C5";
    case PrincipleId::C6: return "C6";
  }
  return "?";
}

namespace {

std::optional<Stance> stance_at(const StanceMap& stances, const std::string& arg) {
  auto it = stances.find(arg);
  if (it == stances.end()) return std::nullopt;
  return it->second;
}

bool some_believed(const StanceMap& stances, const std::set<std::string>& args) {
  for (const std::string& a : args)
    if (stance_at(stances, a) == Stance::Believed) return true;
  return false;
}

bool all_disbelieved(const StanceMap& stances, const std::set<std::string>& args) {
  for (const std::string& a : args)
    if (stance_at(stances, a) != Stance::Disbelieved) return false;
  return true;
}

}  // namespace

std::optional<PrincipleId> check_principles(const StanceMap& stances,
                                            const std::set<std::string>& att,
                                            const std::set<std::string>& sup,
                                            const std::string& target) {
  if (att.empty() && sup.empty())
    raise(ErrorCode::EmptyRelationSet, "no influencers to judge " + target + " against");
  const std::optional<Stance> ts = stance_at(stances, target);

  if (sup.empty()) {
    if (ts == Stance::Believed && some_believed(stances, att)) return PrincipleId::C1;
    if (ts == Stance::Disbelieved && all_disbelieved(stances, att)) return PrincipleId::C2;
    return std::nullopt;
  }
  if (att.empty()) {
    if (ts == Stance::Disbelieved && some_believed(stances, sup)) return PrincipleId::C3;
    if (ts == Stance::Believed && all_disbelieved(stances, sup)) return PrincipleId::C4;
    return std::nullopt;
  }
  if (ts == Stance::Disbelieved && all_disbelieved(stances, att) && some_believed(stances, sup))
    return PrincipleId::C5;
  if (ts == Stance::Believed && all_disbelieved(stances, sup) && some_believed(stances, att))
    return PrincipleId::C6;
  return std::nullopt;
}

std::vector<ExactRule> rational_filter(const std::vector<ExactRule>& rules,
                                       const InfluenceTuple& I, const RelationSet& rel,
                                       std::vector<std::pair<ExactRule, PrincipleId>>* removed) {
  const std::set<std::string> att = attackers(I, rel);
  const std::set<std::string> sup = supporters(I, rel);
  std::vector<ExactRule> kept;
  for (const ExactRule& r : rules) {
    StanceMap stances;
    for (const Atom& c : r.conditions) stances[c.arg] = stance_of(c.val);
    stances[r.head.arg] = stance_of(r.head.val);
    const auto hit = check_principles(stances, att, sup, I.target);
    if (!hit) kept.push_back(r);
    else if (removed) removed->emplace_back(r, *hit);
  }
  return kept;
}

AuditResult audit_irrational(const std::vector<Rule>& rules, const InfluenceTuple& I,
                             const RelationSet& rel) {
  const std::set<std::string> att = attackers(I, rel);
  const std::set<std::string> sup = supporters(I, rel);
  AuditResult result;
  for (const Rule& r : rules) {
    if (r.head.arg != I.target) continue;
    StanceMap stances;
    for (const Atom& c : r.conditions) stances[c.arg] = stance_of_atom(c);
    stances[r.head.arg] = stance_of_atom(r.head);
    const auto hit = check_principles(stances, att, sup, I.target);
    if (hit) {
      ++result.irrational;
      ++result.by_principle[*hit];
    }
  }
  return result;
}

}  // namespace epimine
