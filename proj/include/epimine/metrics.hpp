#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epimine/dataset.hpp"
#include "epimine/language.hpp"
#include "epimine/rational.hpp"

namespace epimine {

/// Which denominator Confidence uses: the rows that fire the rule (the
/// regime the reported thresholds assume) or the whole dataset.
enum class ConfidenceMode { Fired, Dataset };

struct Classification {
  bool fired = false;    // every condition holds on the row
  bool agrees = false;   // the head holds on the row
  bool correct = false;  // both
};

/// Numeric evaluation of the rule on one row; MissingValue when the row
/// lacks an argument the rule mentions.
Classification classify(const Rule& rule, const DataItem& d);

struct RuleStats {
  std::int64_t fired = 0;
  std::int64_t agrees = 0;
  std::int64_t correct = 0;
  std::int64_t dataset_size = 0;
  Rational support;                  // fired / |D|
  std::optional<Rational> confidence;  // correct/fired or correct/|D|; unset when 0/0
  std::optional<Rational> lift;        // correct*|D| / (fired*agrees); unset on zero denominator
};

/// Counts over the whole dataset. EmptyDataset when there are no rows.
RuleStats stats(const Rule& rule, const Dataset& D, ConfidenceMode mode);

/// Rules beating all three bars strictly: support > tau_support,
/// confidence > tau_confidence, lift > 1. Undefined confidence or lift
/// fails its bar.
std::vector<Rule> best(const std::vector<Rule>& rules, const Dataset& D,
                       const Rational& tau_support, const Rational& tau_confidence,
                       ConfidenceMode mode);

/// Keeps a rule unless some other rule with the same head uses a strict
/// subset of its conditions.
std::vector<Rule> simplest(const std::vector<Rule>& rules);

}  // namespace epimine
