#include "epimine/pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "learn_engine.hpp"

namespace epimine {

const char* to_string(PipelineKind kind) {
  return kind == PipelineKind::TwoWay ? "two_way" : "multi_way";
}

void ExperimentConfig::validate() const {
  if (tuples.empty()) raise(ErrorCode::InvalidConfig, "no influence tuples configured");
  for (const auto& [I, rel] : tuples)
    if (I.influencers.size() != rel.tags.size())
      raise(ErrorCode::LengthMismatch, "relation tags misaligned for " + I.target);
  const Rational zero = Rational::integer(0);
  const Rational one = Rational::integer(1);
  if (tau_support < zero || tau_support > one)
    raise(ErrorCode::InvalidConfig, "tau_support outside [0,1]");
  if (tau_confidence < zero || tau_confidence > one)
    raise(ErrorCode::InvalidConfig, "tau_confidence outside [0,1]");
  if (split_ratio <= zero || split_ratio >= one)
    raise(ErrorCode::InvalidConfig, "split_ratio must lie strictly between 0 and 1");
  if (max_conditions < 1) raise(ErrorCode::InvalidConfig, "max_conditions must be at least 1");
  if (repetitions < 1) raise(ErrorCode::InvalidConfig, "repetitions must be at least 1");
}

namespace {

thread_local std::int64_t g_last_candidates = 0;

// Exact rational accumulator on 128-bit intermediates, for means whose
// summands have mixed denominators. Overflow raises instead of rounding.
class RationalSum {
 public:
  void add(const Rational& r) {
    __int128 n = num_ * r.den() + static_cast<__int128>(r.num()) * den_;
    __int128 d = den_ * r.den();
    const __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (d > INT64_MAX || n > INT64_MAX || n < INT64_MIN)
      raise(ErrorCode::OutOfRange, "mean does not fit 64-bit exact arithmetic");
    num_ = n;
    den_ = d;
  }
  Rational over(std::int64_t count) const {
    return Rational::of(static_cast<std::int64_t>(num_), static_cast<std::int64_t>(den_)) /
           Rational::integer(count);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  __int128 num_ = 0;
  __int128 den_ = 1;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<Rule> learn(const Dataset& train, const InfluenceTuple& I, const RelationSet& rel,
                        const ExperimentConfig& cfg) {
  if (train.items.empty()) raise(ErrorCode::EmptyDataset, "no training rows");
  if (cfg.max_conditions < 1) raise(ErrorCode::InvalidConfig, "max_conditions must be at least 1");
  return detail::engine_eligible(I, cfg)
             ? detail::learn_engine(train, I, rel, cfg, &g_last_candidates)
             : detail::learn_generic(train, I, rel, cfg, &g_last_candidates);
}

std::int64_t last_learn_candidates() { return g_last_candidates; }

std::int64_t naive_candidate_space(int n_influencers, int cap, std::size_t grid_size) {
  // Atoms per argument: the four inequality comparators against each
  // interior grid value (atoms at the endpoints are one-sided or empty).
  const __int128 per_arg = grid_size < 2 ? 0 : 4 * (static_cast<__int128>(grid_size) - 2);
  __int128 total = 0;
  __int128 choose = 1;  // C(n, k) built incrementally
  __int128 atoms_pow = 1;
  for (int k = 1; k <= std::min(cap, n_influencers); ++k) {
    choose = choose * (n_influencers - k + 1) / k;
    atoms_pow *= per_arg;
    total += choose * atoms_pow * per_arg;  // trailing factor: the head atom
    if (total > INT64_MAX) return INT64_MAX;
  }
  return static_cast<std::int64_t>(total);
}

TupleReport evaluate(const std::vector<Rule>& rules, const Dataset& test,
                     const InfluenceTuple& I, const RelationSet& rel, ConfidenceMode mode) {
  if (test.items.empty()) raise(ErrorCode::EmptyDataset, "no test rows");
  TupleReport rep;
  rep.target = I.target;
  rep.test_size = test.size();
  rep.rule_count = Rational::integer(static_cast<std::int64_t>(rules.size()));
  rep.irrational = Rational::integer(audit_irrational(rules, I, rel).irrational);
  rep.avg_conditions = Rational::integer(0);
  rep.mean_support = Rational::integer(0);
  if (rules.empty()) return rep;

  std::int64_t conditions = 0;
  RationalSum support_sum, confidence_sum, lift_sum;
  std::int64_t confidence_n = 0, lift_n = 0;
  for (const Rule& r : rules) {
    conditions += static_cast<std::int64_t>(r.conditions.size());
    const RuleStats s = stats(r, test, mode);
    support_sum.add(s.support);
    if (s.confidence) {
      confidence_sum.add(*s.confidence);
      ++confidence_n;
    }
    if (s.lift) {
      lift_sum.add(*s.lift);
      ++lift_n;
    }
  }
  const std::int64_t count = static_cast<std::int64_t>(rules.size());
  rep.avg_conditions = Rational::of(conditions, count);
  rep.mean_support = support_sum.over(count);
  if (confidence_n) rep.mean_confidence = confidence_sum.over(confidence_n);
  if (lift_n) rep.mean_lift = lift_sum.over(lift_n);
  return rep;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, const Dataset& data) {
  cfg.validate();
  for (const auto& [I, rel] : cfg.tuples) {
    for (const std::string& arg : I.influencers)
      if (!std::count(data.schema.begin(), data.schema.end(), arg))
        raise(ErrorCode::SchemaError, "dataset has no column " + arg);
    if (!std::count(data.schema.begin(), data.schema.end(), I.target))
      raise(ErrorCode::SchemaError, "dataset has no column " + I.target);
  }

  ExperimentResult result;
  for (int rep = 1; rep <= cfg.repetitions; ++rep) {
    const auto [train, test] = split(data, cfg.split_ratio, cfg.seed + static_cast<std::uint64_t>(rep));
    for (std::size_t t = 0; t < cfg.tuples.size(); ++t) {
      const auto& [I, rel] = cfg.tuples[t];
      const auto learn_start = std::chrono::steady_clock::now();
      std::vector<Rule> rules = learn(train, I, rel, cfg);
      const double learn_s = seconds_since(learn_start);

      const auto eval_start = std::chrono::steady_clock::now();
      TupleReport row = evaluate(rules, test, I, rel, cfg.confidence_mode);
      row.repetition = rep;
      row.train_size = train.size();
      row.learn_seconds = learn_s;
      row.evaluate_seconds = seconds_since(eval_start);
      result.reports.push_back(std::move(row));

      if (rep == 1) {
        ExperimentResult::TupleRules tr;
        tr.target = I.target;
        for (const Rule& r : rules) {
          tr.train_stats.push_back(stats(r, train, cfg.confidence_mode));
          tr.test_stats.push_back(stats(r, test, cfg.confidence_mode));
        }
        tr.rules = std::move(rules);
        result.rules.push_back(std::move(tr));
      }
    }
  }

  // Averaged row per tuple, in tuple order.
  for (std::size_t t = 0; t < cfg.tuples.size(); ++t) {
    TupleReport avg;
    avg.target = cfg.tuples[t].first.target;
    avg.repetition = 0;
    RationalSum rules_sum, conds_sum, support_sum, conf_sum, lift_sum, irr_sum;
    std::int64_t conf_n = 0, lift_n = 0, reps = 0;
    for (const TupleReport& row : result.reports) {
      if (row.target != avg.target) continue;
      ++reps;
      rules_sum.add(row.rule_count);
      conds_sum.add(row.avg_conditions);
      support_sum.add(row.mean_support);
      irr_sum.add(row.irrational);
      if (row.mean_confidence) {
        conf_sum.add(*row.mean_confidence);
        ++conf_n;
      }
      if (row.mean_lift) {
        lift_sum.add(*row.mean_lift);
        ++lift_n;
      }
      avg.train_size = row.train_size;
      avg.test_size = row.test_size;
      avg.learn_seconds += row.learn_seconds;
      avg.evaluate_seconds += row.evaluate_seconds;
    }
    avg.rule_count = rules_sum.over(reps);
    avg.avg_conditions = conds_sum.over(reps);
    avg.mean_support = support_sum.over(reps);
    avg.irrational = irr_sum.over(reps);
    if (conf_n) avg.mean_confidence = conf_sum.over(conf_n);
    if (lift_n) avg.mean_lift = lift_sum.over(lift_n);
    avg.learn_seconds /= static_cast<double>(reps);
    avg.evaluate_seconds /= static_cast<double>(reps);
    result.reports.push_back(std::move(avg));
  }
  return result;
}

std::vector<BenchRow> benchmark(const ExperimentConfig& base,
                                const std::vector<PipelineKind>& pipelines,
                                const std::vector<RestrictedValueSet>& grids,
                                const Dataset& data) {
  const auto [train, test] = split(data, base.split_ratio, base.seed + 1);
  std::vector<BenchRow> rows;
  for (const PipelineKind kind : pipelines) {
    for (const RestrictedValueSet& grid : grids) {
      ExperimentConfig cfg = base;
      cfg.pipeline = kind;
      cfg.value_set = grid;
      for (const auto& [I, rel] : cfg.tuples) {
        BenchRow row;
        row.pipeline = kind;
        row.value_set_size = grid.size();
        row.target = I.target;
        const auto start = std::chrono::steady_clock::now();
        learn(train, I, rel, cfg);
        row.learn_seconds = seconds_since(start);
        row.candidates = last_learn_candidates();
        row.naive_candidates = naive_candidate_space(static_cast<int>(I.influencers.size()),
                                                     cfg.max_conditions, grid.size());
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace epimine
