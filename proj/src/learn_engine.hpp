#pragma once

// Internal split of learn(): a bit-packed fast path for the workloads the
// benchmarks run, and a straightforward composition of the public stages
// for everything else. Both produce identical rule sets.

#include <cstdint>

#include "epimine/pipeline.hpp"

namespace epimine::detail {

// The fast path packs a whole rule into one 64-bit key: up to four 12-bit
// condition atom codes plus a head code. That bounds its applicability.
bool engine_eligible(const InfluenceTuple& I, const ExperimentConfig& cfg);

std::vector<Rule> learn_engine(const Dataset& train, const InfluenceTuple& I,
                               const RelationSet& rel, const ExperimentConfig& cfg,
                               std::int64_t* candidates);

std::vector<Rule> learn_generic(const Dataset& train, const InfluenceTuple& I,
                                const RelationSet& rel, const ExperimentConfig& cfg,
                                std::int64_t* candidates);

}  // namespace epimine::detail
