#pragma once

#include <vector>

#include "epimine/dataset.hpp"
#include "epimine/language.hpp"
#include "epimine/model.hpp"

namespace epimine {

/// A data row restated as an equality rule: one condition per influencer in
/// tuple order, the target as head, all comparators "=", all values raw.
/// Kept distinct from Rule so the influencer order survives until the
/// rationality check.
struct ExactRule {
  std::vector<Atom> conditions;
  Atom head;

  Rule to_rule() const { return Rule::make(conditions, head); }
};

/// Equality snapshot of the row restricted to the tuple. MissingValue when
/// the row lacks an influencer or the target.
ExactRule pre_gen(const DataItem& d, const InfluenceTuple& I);

/// One-step generalization against the belief threshold: each value v
/// becomes "> 0.5" when v > 0.5 and "<= 0.5" otherwise.
Rule two_way_gen(const DataItem& d, const InfluenceTuple& I);

/// Widens each equality atom of an exact rule against the grid: with
/// n = nearest(v), the atom becomes
///   > n   when v > n          < n   when v < n
///   >= n  when v = n > 0.5    <= n  when v = n < 0.5
///   <= n  when v = n = 0.5
/// The result admits every degree between v and 0.5-side grid point n while
/// never crossing 0.5. Raises HalfNotInSet when 0.5 is not in pi.
Rule multi_way_gen(const ExactRule& r, const RestrictedValueSet& pi);

/// Same widening for a single equality atom.
Atom widen_atom(const Atom& exact, const RestrictedValueSet& pi);

/// All rules with r's head and a nonempty subset of r's conditions of at
/// most max_conditions atoms (r itself included when it fits the cap).
std::vector<Rule> expand_subrules(const Rule& r, int max_conditions);

}  // namespace epimine
