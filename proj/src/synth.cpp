#include "epimine/synth.hpp"

#include "epimine/rationality.hpp"
#include "epimine/rng.hpp"

namespace epimine {

namespace {

// The ten sharp grid degrees, 0.5 excluded.
Value sharp_degree(std::uint64_t pick) {
  const int tenths = static_cast<int>(pick);
  return Value::of_tenths(tenths < 5 ? tenths : tenths + 1);
}

Value degree_for(Stance stance, Rng& rng) {
  const int tenths = static_cast<int>(rng.below(5));
  return Value::of_tenths(stance == Stance::Believed ? tenths + 6 : tenths);
}

}  // namespace

SyntheticData gen_synthetic(int n_rows, int n_influencers, const std::vector<int>& rel_profile,
                            const Rational& noise, std::uint64_t seed) {
  if (n_rows < 1 || n_influencers < 1)
    raise(ErrorCode::InvalidConfig, "row and influencer counts must be positive");
  if (rel_profile.empty()) raise(ErrorCode::EmptyRelationSet, "relation profile is empty");
  if (noise < Rational::integer(0) || noise > Rational::integer(1))
    raise(ErrorCode::InvalidConfig, "noise must lie in [0,1]");

  std::vector<std::string> influencers;
  std::vector<int> tags;
  for (int i = 0; i < n_influencers; ++i) {
    influencers.push_back("A" + std::to_string(i + 1));
    tags.push_back(rel_profile[static_cast<std::size_t>(i) % rel_profile.size()]);
  }
  InfluenceTuple tuple = InfluenceTuple::make(influencers, "T");
  RelationSet rel = RelationSet::make(tags);
  const std::set<std::string> att = attackers(tuple, rel);
  const std::set<std::string> sup = supporters(tuple, rel);

  int id_width = 1;
  for (int w = n_rows; w >= 10; w /= 10) ++id_width;

  Rng rng(seed);
  Dataset data;
  data.schema = tuple.influencers;
  data.schema.push_back(tuple.target);
  for (int row = 0; row < n_rows; ++row) {
    DataItem item;
    std::string id = std::to_string(row + 1);
    item.id = std::string(static_cast<std::size_t>(id_width) - id.size(), '0') + id;

    StanceMap stances;
    for (const std::string& arg : tuple.influencers) {
      const Value v = sharp_degree(rng.below(10));
      item.values[arg] = v;
      stances[arg] = stance_of(v);
    }

    // Partition the two sharp target stances by whether a principle objects.
    std::vector<Stance> clean, objectionable;
    for (Stance ts : {Stance::Believed, Stance::Disbelieved}) {
      stances[tuple.target] = ts;
      auto& bucket = check_principles(stances, att, sup, tuple.target) ? objectionable : clean;
      bucket.push_back(ts);
    }

    const bool want_noise = rng.below(static_cast<std::uint64_t>(noise.den())) <
                            static_cast<std::uint64_t>(noise.num());
    const std::vector<Stance>& pool =
        want_noise && !objectionable.empty() ? objectionable : clean;
    const Stance target_stance = pool[rng.below(pool.size())];
    item.values[tuple.target] = degree_for(target_stance, rng);
    data.items.push_back(std::move(item));
  }
  return SyntheticData{std::move(data), std::move(tuple), std::move(rel)};
}

}  // namespace epimine
