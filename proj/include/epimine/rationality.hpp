#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epimine/generalize.hpp"
#include "epimine/language.hpp"
#include "epimine/model.hpp"

namespace epimine {

/// The six irrationality patterns over one influence tuple. The first pair
/// covers attack-only tuples, the second support-only, the third mixed.
enum class PrincipleId { C1, C2, C3, C4, C5, C6 };

const char* to_string(PrincipleId id);

/// Stances per argument; nullopt marks an argument whose position the rule
/// leaves open, which breaks universal premises and never triggers
/// existential ones. Arguments absent from the map count the same way.
using StanceMap = std::map<std::string, std::optional<Stance>>;

/// The principle the stance assignment violates, if any.
///   attack-only:  C1 when some attacker and the target are Believed;
///                 C2 when every attacker and the target are Disbelieved.
///   support-only: C3 when some supporter is Believed yet the target
///                 Disbelieved; C4 when every supporter is Disbelieved yet
///                 the target Believed.
///   mixed:        C5 when every attacker is Disbelieved, some supporter
///                 Believed, and the target Disbelieved; C6 when every
///                 supporter is Disbelieved, some attacker Believed, and
///                 the target Believed.
/// At most one principle fits per tuple, so the return is single-valued.
std::optional<PrincipleId> check_principles(const StanceMap& stances,
                                            const std::set<std::string>& att,
                                            const std::set<std::string>& sup,
                                            const std::string& target);

/// Keeps the exact rules whose raw values violate no principle; the dropped
/// ones pair with their principle in `removed` when requested.
std::vector<ExactRule> rational_filter(const std::vector<ExactRule>& rules,
                                       const InfluenceTuple& I, const RelationSet& rel,
                                       std::vector<std::pair<ExactRule, PrincipleId>>* removed = nullptr);

struct AuditResult {
  int irrational = 0;
  std::map<PrincipleId, int> by_principle;
};

/// Counts generalized rules whose atom stances entail a principle. A rule
/// pins an argument only when its atom confines the degree to one side of
/// 0.5; unconstrained influencers leave universal premises unevaluable.
/// Rules whose head is not the tuple's target are not about this tuple and
/// are skipped.
AuditResult audit_irrational(const std::vector<Rule>& rules, const InfluenceTuple& I,
                             const RelationSet& rel);

}  // namespace epimine
