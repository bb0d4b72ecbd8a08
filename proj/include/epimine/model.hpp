#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epimine/error.hpp"

namespace epimine {

/// One hand-built modelling unit: a list of influencing arguments and the
/// argument they bear on. Influencer order matters because relation tags
/// align with it positionally.
struct InfluenceTuple {
  std::vector<std::string> influencers;
  std::string target;

  /// Validates: nonempty influencer list, no duplicates, target not an
  /// influencer. Raises InvalidConfig.
  static InfluenceTuple make(std::vector<std::string> influencers, std::string target);
};

/// Per-influencer edge tags: 0 marks an attack, 1 a support.
struct RelationSet {
  std::vector<int> tags;

  /// Validates: nonempty (EmptyRelationSet), tags all 0 or 1 (InvalidConfig).
  static RelationSet make(std::vector<int> tags);
};

/// Influencers tagged 0. Raises LengthMismatch when rel is not aligned.
std::set<std::string> attackers(const InfluenceTuple& I, const RelationSet& rel);

/// Influencers tagged 1.
std::set<std::string> supporters(const InfluenceTuple& I, const RelationSet& rel);

/// A bipolar argument graph: named nodes with disjoint attack and support
/// edge sets.
struct BipolarGraph {
  std::set<std::string> arguments;
  std::set<std::pair<std::string, std::string>> attacks;
  std::set<std::pair<std::string, std::string>> supports;
};

/// Union of the tuples' tagged edges. Raises ConflictingRelation when an
/// edge carries both tags across tuples, LengthMismatch on misaligned pairs.
BipolarGraph to_graph(const std::vector<std::pair<InfluenceTuple, RelationSet>>& tuples);

}  // namespace epimine
