#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epimine/dataset.hpp"
#include "epimine/metrics.hpp"
#include "epimine/model.hpp"
#include "epimine/rationality.hpp"
#include "epimine/value.hpp"

namespace epimine {

enum class PipelineKind { TwoWay, MultiWay };

const char* to_string(PipelineKind kind);

struct ExperimentConfig {
  RestrictedValueSet value_set = tenths_grid();
  std::vector<std::pair<InfluenceTuple, RelationSet>> tuples;
  Rational tau_support = Rational::of(2, 5);
  Rational tau_confidence = Rational::of(4, 5);
  int max_conditions = 4;
  Rational split_ratio = Rational::of(4, 5);
  int repetitions = 10;
  std::uint64_t seed = 1;
  ConfidenceMode confidence_mode = ConfidenceMode::Fired;
  PipelineKind pipeline = PipelineKind::MultiWay;

  /// Raises InvalidConfig on out-of-range fields or misaligned tuples.
  void validate() const;
};

/// Learns the rule set for one influence tuple from the training rows.
///
/// Multi-way: restate each row as an equality rule, drop the rows whose raw
/// stances violate a rationality principle, widen the survivors against the
/// value grid, expand condition subsets up to the cap, dedupe, then keep
/// the rules beating the metric bars (on the training rows) and prune the
/// ones a same-head sub-rule makes redundant.
///
/// Two-way: the same tail, but candidates come from the one-step 0.5
/// generalization of every row, with no rationality filtering.
std::vector<Rule> learn(const Dataset& train, const InfluenceTuple& I, const RelationSet& rel,
                        const ExperimentConfig& cfg);

/// Candidate rule keys actually instantiated by learn() before deduping;
/// exposed for benchmark reporting.
std::int64_t last_learn_candidates();

/// Size of the unrestricted candidate space a generate-and-test miner over
/// the same language faces: every rule with 1..cap conditions over n
/// influencers, each atom one of the four inequalities against an interior
/// grid value, head likewise. Grows with the grid while learn()'s
/// data-driven candidates do not.
std::int64_t naive_candidate_space(int n_influencers, int cap, std::size_t grid_size);

/// One tuple's evaluation on held-out rows. Count fields are exact
/// rationals so the per-tuple averaged row (repetition 0) can carry
/// fractional means; per-repetition rows hold integer values in them.
struct TupleReport {
  std::string target;
  int repetition = 0;  // 1-based; 0 marks the averaged row
  Rational rule_count;
  Rational avg_conditions;
  Rational mean_support;
  std::optional<Rational> mean_confidence;
  std::optional<Rational> mean_lift;
  Rational irrational;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  double learn_seconds = 0;
  double evaluate_seconds = 0;
};

/// Scores a learnt rule set on test rows: per-rule stats aggregated to
/// means (undefined confidence/lift values are left out of their means)
/// plus the irrationality audit.
TupleReport evaluate(const std::vector<Rule>& rules, const Dataset& test,
                     const InfluenceTuple& I, const RelationSet& rel, ConfidenceMode mode);

struct ExperimentResult {
  /// Per (tuple, repetition), then one averaged row per tuple.
  std::vector<TupleReport> reports;
  /// Rules learnt in the first repetition, per tuple, with train stats.
  struct TupleRules {
    std::string target;
    std::vector<Rule> rules;
    std::vector<RuleStats> train_stats;
    std::vector<RuleStats> test_stats;
  };
  std::vector<TupleRules> rules;
};

/// Runs the full protocol: repetition r splits with seed+r, learns per
/// tuple on the training side, evaluates on the held-out side. Output is
/// deterministic for a fixed (config, dataset); only the timing fields
/// vary.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const Dataset& data);

struct BenchRow {
  PipelineKind pipeline = PipelineKind::MultiWay;
  std::size_t value_set_size = 0;
  std::string target;
  double learn_seconds = 0;
  std::int64_t candidates = 0;        // instantiated by learn()
  std::int64_t naive_candidates = 0;  // unrestricted space for the same grid
};

/// Times learn() across a grid of (pipeline, value set) variants on one
/// dataset split.
std::vector<BenchRow> benchmark(const ExperimentConfig& base,
                                const std::vector<PipelineKind>& pipelines,
                                const std::vector<RestrictedValueSet>& grids,
                                const Dataset& data);

}  // namespace epimine
