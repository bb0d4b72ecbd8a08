#include "epimine/model.hpp"

#include <algorithm>

namespace epimine {

InfluenceTuple InfluenceTuple::make(std::vector<std::string> influencers, std::string target) {
  if (influencers.empty())
    raise(ErrorCode::InvalidConfig, "influence tuple for " + target + " has no influencers");
  std::set<std::string> seen;
  for (const std::string& a : influencers) {
    if (!seen.insert(a).second)
      raise(ErrorCode::InvalidConfig, "duplicate influencer " + a);
    if (a == target)
      raise(ErrorCode::InvalidConfig, "target " + target + " cannot influence itself");
  }
  return InfluenceTuple{std::move(influencers), std::move(target)};
}

RelationSet RelationSet::make(std::vector<int> tags) {
  if (tags.empty()) raise(ErrorCode::EmptyRelationSet, "relation set is empty");
  for (int t : tags)
    if (t != 0 && t != 1)
      raise(ErrorCode::InvalidConfig, "relation tag " + std::to_string(t) + " is not 0 or 1");
  return RelationSet{std::move(tags)};
}

namespace {

void check_aligned(const InfluenceTuple& I, const RelationSet& rel) {
  if (I.influencers.size() != rel.tags.size())
    raise(ErrorCode::LengthMismatch,
          std::to_string(rel.tags.size()) + " relation tags for " +
              std::to_string(I.influencers.size()) + " influencers of " + I.target);
}

std::set<std::string> tagged(const InfluenceTuple& I, const RelationSet& rel, int tag) {
  check_aligned(I, rel);
  std::set<std::string> out;
  for (std::size_t i = 0; i < rel.tags.size(); ++i)
    if (rel.tags[i] == tag) out.insert(I.influencers[i]);
  return out;
}

}  // namespace

std::set<std::string> attackers(const InfluenceTuple& I, const RelationSet& rel) {
  return tagged(I, rel, 0);
}

std::set<std::string> supporters(const InfluenceTuple& I, const RelationSet& rel) {
  return tagged(I, rel, 1);
}

BipolarGraph to_graph(const std::vector<std::pair<InfluenceTuple, RelationSet>>& tuples) {
  BipolarGraph g;
  for (const auto& [I, rel] : tuples) {
    check_aligned(I, rel);
    g.arguments.insert(I.target);
    for (std::size_t i = 0; i < I.influencers.size(); ++i) {
      g.arguments.insert(I.influencers[i]);
      auto edge = std::make_pair(I.influencers[i], I.target);
      auto& mine = rel.tags[i] == 0 ? g.attacks : g.supports;
      const auto& other = rel.tags[i] == 0 ? g.supports : g.attacks;
      if (other.count(edge))
        raise(ErrorCode::ConflictingRelation,
              "edge " + edge.first + " -> " + edge.second + " tagged both attack and support");
      mine.insert(edge);
    }
  }
  return g;
}

}  // namespace epimine
