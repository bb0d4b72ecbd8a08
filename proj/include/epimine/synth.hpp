#pragma once

#include <cstdint>
#include <vector>

#include "epimine/dataset.hpp"
#include "epimine/model.hpp"
#include "epimine/rational.hpp"

namespace epimine {

/// A generated survey with the influence tuple that produced it.
struct SyntheticData {
  Dataset data;
  InfluenceTuple tuple;
  RelationSet rel;
};

/// Deterministic stand-in for a real survey: influencers A1..Am (tagged by
/// rel_profile, cycled to length m) plus target T. Influencer degrees are
/// drawn uniformly from the tenths grid minus 0.5, so every stance is
/// sharp. The target is then drawn Believed or Disbelieved: with
/// probability 1-noise from the stances no principle objects to, with
/// probability noise from the objectionable ones (falling back when that
/// set is empty, e.g. at noise=0 every row is clean by construction).
SyntheticData gen_synthetic(int n_rows, int n_influencers, const std::vector<int>& rel_profile,
                            const Rational& noise, std::uint64_t seed);

}  // namespace epimine
