#pragma once

#include <string>
#include <vector>

#include "epimine/pipeline.hpp"

namespace epimine {

/// Parses the experiment config JSON:
///   {"value_set": ["0","0.25","0.5","0.75","1"],
///    "tuples": [{"target":"Dw6","influencers":["Dw2","Dw3","Dw5"],
///                "relations":[1,1,0]}],
///    "tau_support":"0.4", "tau_confidence":"0.8", "max_conditions":4,
///    "repetitions":10, "split_ratio":"0.8", "seed":1,
///    "confidence_mode":"fired", "pipeline":"multi_way"}
/// Numbers are accepted as exact decimal strings (preferred), fractions
/// like "1/3", or JSON numbers. "relations" may also be a name-to-tag map,
/// normalized against the influencer order. Missing fields keep their
/// defaults; unknown fields raise InvalidConfig.
ExperimentConfig parse_config(const std::string& json_text);

/// Rules with their train/test stats, grouped per tuple.
std::string rules_to_json(const ExperimentResult& result);

/// Flattens the rule groups of a rules.json document (or a bare array of
/// rule objects / rule strings).
std::vector<Rule> rules_from_json(const std::string& json_text);

/// Per-rule stats rows: target,split,rule,support,confidence,lift,fired,agrees,correct.
std::string stats_to_csv(const ExperimentResult& result);

/// Per-repetition and averaged evaluation rows, no timing columns, so two
/// runs with one seed compare byte-for-byte.
std::string report_to_csv(const ExperimentResult& result);

/// Wall-clock seconds per (target, repetition) and stage.
std::string timings_to_csv(const ExperimentResult& result);

std::string bench_to_csv(const std::vector<BenchRow>& rows);

/// {"irrational": n, "by_principle": {"C1": n1, ...}}
std::string audit_to_json(const AuditResult& audit);

/// Benchmark grid: {"pipelines":["two_way","multi_way"],
///                  "value_sets":[["0","0.5","1"], ...]}
struct BenchGrid {
  std::vector<PipelineKind> pipelines;
  std::vector<RestrictedValueSet> grids;
};
BenchGrid parse_bench_grid(const std::string& json_text);

}  // namespace epimine
