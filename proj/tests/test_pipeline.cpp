#include <doctest.h>

#include <algorithm>
#include <limits>
#include <set>

#include "epimine/pipeline.hpp"
#include "epimine/rng.hpp"
#include "epimine/synth.hpp"
#include "learn_engine.hpp"
#include "support.hpp"

using namespace epimine;
using testsup::val;

namespace {

ExperimentConfig make_cfg(RestrictedValueSet grid, Rational ts, Rational tc, int cap,
                          PipelineKind kind) {
  ExperimentConfig cfg;
  cfg.value_set = std::move(grid);
  cfg.tau_support = ts;
  cfg.tau_confidence = tc;
  cfg.max_conditions = cap;
  cfg.pipeline = kind;
  return cfg;
}

std::vector<std::string> texts(const std::vector<Rule>& rules) {
  std::vector<std::string> out;
  for (const Rule& r : rules) out.push_back(r.to_string());
  return out;
}

}  // namespace

TEST_CASE("grid widening distills the table to three one-condition rules") {
  const Dataset t1 = testsup::table1();
  const InfluenceTuple I = InfluenceTuple::make({"Dw2", "Dw3", "Dw5"}, "Dw6");
  const RelationSet rel = RelationSet::make({1, 1, 0});
  const ExperimentConfig cfg = make_cfg(testsup::grid5(), Rational::integer(0),
                                        Rational::integer(0), 4, PipelineKind::MultiWay);

  // rows 026 and 111 fall to the rationality filter; row 004 widens to a
  // 3-condition rule whose one-condition sub-rules dominate everything else
  const std::vector<Rule> rules = learn(t1, I, rel, cfg);
  CHECK(texts(rules) == std::vector<std::string>{
                            "p(Dw2) < 0.5 -> p(Dw6) < 0.25",
                            "p(Dw3) < 0.5 -> p(Dw6) < 0.25",
                            "p(Dw5) < 0.5 -> p(Dw6) < 0.25",
                        });
  CHECK(last_learn_candidates() == 7);  // one surviving row, subsets of 3 conditions

  std::int64_t generic_candidates = 0;
  const std::vector<Rule> generic = detail::learn_generic(t1, I, rel, cfg, &generic_candidates);
  CHECK(generic == rules);
  CHECK(generic_candidates == 7);
}

TEST_CASE("threshold generalization keeps both belief directions") {
  const Dataset t1 = testsup::table1();
  const InfluenceTuple I = InfluenceTuple::make({"Dw2", "Dw3", "Dw5"}, "Dw6");
  const RelationSet rel = RelationSet::make({1, 1, 0});
  const ExperimentConfig cfg = make_cfg(testsup::grid5(), Rational::integer(0),
                                        Rational::integer(0), 4, PipelineKind::TwoWay);

  const std::vector<Rule> rules = learn(t1, I, rel, cfg);
  auto sorted = texts(rules);
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::string>{
                      "p(Dw2) <= 0.5 -> p(Dw6) > 0.5",
                      "p(Dw2) > 0.5 -> p(Dw6) <= 0.5",
                      "p(Dw3) <= 0.5 -> p(Dw6) > 0.5",
                      "p(Dw3) > 0.5 -> p(Dw6) <= 0.5",
                      "p(Dw5) <= 0.5 -> p(Dw6) <= 0.5",
                      "p(Dw5) > 0.5 -> p(Dw6) > 0.5",
                  });
  CHECK(last_learn_candidates() == 21);  // 3 rows, 7 subsets each, before dedupe

  std::int64_t generic_candidates = 0;
  CHECK(detail::learn_generic(t1, I, rel, cfg, &generic_candidates) == rules);
  CHECK(generic_candidates == 21);
}

TEST_CASE("learning rejects degenerate inputs and impossible bars") {
  const Dataset t1 = testsup::table1();
  const InfluenceTuple I = InfluenceTuple::make({"Dw2", "Dw3", "Dw5"}, "Dw6");
  const RelationSet rel = RelationSet::make({1, 1, 0});

  // support and confidence never strictly exceed 1
  CHECK(learn(t1, I, rel,
              make_cfg(testsup::grid5(), Rational::integer(1), Rational::integer(0), 4,
                       PipelineKind::MultiWay))
            .empty());
  CHECK(learn(t1, I, rel,
              make_cfg(testsup::grid5(), Rational::integer(0), Rational::integer(1), 4,
                       PipelineKind::TwoWay))
            .empty());

  const ExperimentConfig cfg = make_cfg(testsup::grid5(), Rational::of(1, 10),
                                        Rational::of(1, 2), 4, PipelineKind::MultiWay);
  CHECK_THROWS_WITH_AS(learn(Dataset{t1.schema, {}}, I, rel, cfg),
                       doctest::Contains("EmptyDataset"), Error);
  const InfluenceTuple foreign = InfluenceTuple::make({"Dw2", "Zz"}, "Dw6");
  CHECK_THROWS_WITH_AS(learn(t1, foreign, RelationSet::make({1, 0}), cfg),
                       doctest::Contains("MissingValue"), Error);
  ExperimentConfig bad = cfg;
  bad.max_conditions = 0;
  CHECK_THROWS_WITH_AS(learn(t1, I, rel, bad), doctest::Contains("InvalidConfig"), Error);
}

TEST_CASE("the packed and the straightforward miner agree everywhere") {
  Rng rng(123);
  const std::vector<RestrictedValueSet> grids = {testsup::grid3(), testsup::grid5(),
                                                 tenths_grid()};
  const std::vector<Rational> t_sup = {Rational::integer(0), Rational::of(1, 10),
                                       Rational::of(3, 10)};
  const std::vector<Rational> t_conf = {Rational::integer(0), Rational::of(1, 2),
                                        Rational::of(4, 5)};
  const auto data_grid = tenths_grid().values();

  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(3));
    std::vector<std::string> names;
    std::vector<int> tags;
    for (int i = 0; i < m; ++i) {
      names.push_back("A" + std::to_string(i));
      tags.push_back(static_cast<int>(rng.below(2)));
    }
    const InfluenceTuple I = InfluenceTuple::make(names, "T");
    const RelationSet rel = RelationSet::make(tags);

    Dataset train;
    train.schema = names;
    train.schema.push_back("T");
    const int rows = 6 + static_cast<int>(rng.below(12));
    for (int r = 0; r < rows; ++r) {
      DataItem item;
      item.id = std::to_string(r);
      for (const std::string& n : train.schema)
        item.values[n] = data_grid[rng.below(data_grid.size())];
      train.items.push_back(std::move(item));
    }

    ExperimentConfig cfg = make_cfg(grids[rng.below(grids.size())],
                                    t_sup[rng.below(t_sup.size())],
                                    t_conf[rng.below(t_conf.size())],
                                    1 + static_cast<int>(rng.below(4)),
                                    rng.below(2) ? PipelineKind::MultiWay : PipelineKind::TwoWay);
    cfg.confidence_mode = rng.below(2) ? ConfidenceMode::Fired : ConfidenceMode::Dataset;
    REQUIRE(detail::engine_eligible(I, cfg));

    std::int64_t fast_candidates = 0, plain_candidates = 0;
    const std::vector<Rule> fast = detail::learn_engine(train, I, rel, cfg, &fast_candidates);
    const std::vector<Rule> plain = detail::learn_generic(train, I, rel, cfg, &plain_candidates);
    CHECK(fast == plain);
    CHECK(fast_candidates == plain_candidates);
  }
}

TEST_CASE("evaluation of a single rule reports that rule's own stats") {
  const Dataset t1 = testsup::table1();
  const InfluenceTuple I = InfluenceTuple::make({"Dw2", "Dw3", "Dw5"}, "Dw6");
  const RelationSet rel = RelationSet::make({1, 1, 0});
  const Rule example = Rule::parse("p(Dw2) > 0.5 -> p(Dw6) < 0.5");

  const TupleReport rep = evaluate({example}, t1, I, rel, ConfidenceMode::Fired);
  CHECK(rep.target == "Dw6");
  CHECK(rep.test_size == 3);
  CHECK(rep.rule_count == Rational::integer(1));
  CHECK(rep.avg_conditions == Rational::integer(1));
  CHECK(rep.mean_support == Rational::of(1, 3));
  REQUIRE(rep.mean_confidence.has_value());
  CHECK(*rep.mean_confidence == Rational::integer(1));
  REQUIRE(rep.mean_lift.has_value());
  CHECK(*rep.mean_lift == Rational::of(3, 2));
  CHECK(rep.irrational == Rational::integer(0));

  // undefined metrics stay out of their means instead of zeroing them
  const Rule never = Rule::parse("p(Dw2) > 0.9 -> p(Dw6) < 0.5");
  const TupleReport mixed = evaluate({example, never}, t1, I, rel, ConfidenceMode::Fired);
  CHECK(mixed.rule_count == Rational::integer(2));
  CHECK(mixed.mean_support == Rational::of(1, 6));
  REQUIRE(mixed.mean_confidence.has_value());
  CHECK(*mixed.mean_confidence == Rational::integer(1));
  REQUIRE(mixed.mean_lift.has_value());
  CHECK(*mixed.mean_lift == Rational::of(3, 2));

  const TupleReport empty = evaluate({}, t1, I, rel, ConfidenceMode::Fired);
  CHECK(empty.rule_count == Rational::integer(0));
  CHECK(empty.mean_support == Rational::integer(0));
  CHECK_FALSE(empty.mean_confidence.has_value());
  CHECK_FALSE(empty.mean_lift.has_value());

  CHECK_THROWS_WITH_AS(evaluate({example}, Dataset{t1.schema, {}}, I, rel, ConfidenceMode::Fired),
                       doctest::Contains("EmptyDataset"), Error);

  // an irrational rule is counted by the audit while still being scored
  const Rule skewed =
      Rule::parse("p(Dw2) <= 0.4 & p(Dw3) < 0.5 & p(Dw5) >= 0.75 -> p(Dw6) > 0.5");
  CHECK(evaluate({skewed}, t1, I, rel, ConfidenceMode::Fired).irrational == Rational::integer(1));
}

TEST_CASE("the full protocol is deterministic and self-consistent") {
  const SyntheticData synth = gen_synthetic(40, 2, {1, 0}, Rational::of(1, 5), 9);
  REQUIRE(synth.data.size() == 40);

  ExperimentConfig cfg = make_cfg(testsup::grid5(), Rational::of(1, 10), Rational::of(1, 2), 4,
                                  PipelineKind::MultiWay);
  cfg.tuples.emplace_back(synth.tuple, synth.rel);
  cfg.repetitions = 3;
  cfg.seed = 5;

  const ExperimentResult a = run_experiment(cfg, synth.data);
  REQUIRE(a.reports.size() == 4);  // three repetitions plus the averaged row
  CHECK(a.reports[0].repetition == 1);
  CHECK(a.reports[1].repetition == 2);
  CHECK(a.reports[2].repetition == 3);
  CHECK(a.reports[3].repetition == 0);
  for (const TupleReport& rep : a.reports) {
    CHECK(rep.target == "T");
    CHECK(rep.train_size == 32);
    CHECK(rep.test_size == 8);
  }

  // the averaged row is the exact mean of the repetition rows
  Rational count_sum = Rational::integer(0);
  Rational support_sum = Rational::integer(0);
  for (int r = 0; r < 3; ++r) {
    count_sum = count_sum + a.reports[static_cast<std::size_t>(r)].rule_count;
    support_sum = support_sum + a.reports[static_cast<std::size_t>(r)].mean_support;
  }
  CHECK(a.reports[3].rule_count == count_sum / Rational::integer(3));
  CHECK(a.reports[3].mean_support == support_sum / Rational::integer(3));

  // the retained rules are the first repetition's, with aligned stats
  REQUIRE(a.rules.size() == 1);
  CHECK(a.rules[0].target == "T");
  CHECK(a.rules[0].train_stats.size() == a.rules[0].rules.size());
  CHECK(a.rules[0].test_stats.size() == a.rules[0].rules.size());
  const auto [train1, test1] = split(synth.data, cfg.split_ratio, cfg.seed + 1);
  CHECK(a.rules[0].rules == learn(train1, synth.tuple, synth.rel, cfg));

  const ExperimentResult b = run_experiment(cfg, synth.data);
  REQUIRE(b.reports.size() == a.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].rule_count == b.reports[i].rule_count);
    CHECK(a.reports[i].avg_conditions == b.reports[i].avg_conditions);
    CHECK(a.reports[i].mean_support == b.reports[i].mean_support);
    CHECK(a.reports[i].mean_confidence == b.reports[i].mean_confidence);
    CHECK(a.reports[i].mean_lift == b.reports[i].mean_lift);
    CHECK(a.reports[i].irrational == b.reports[i].irrational);
  }
  REQUIRE(b.rules.size() == 1);
  CHECK(b.rules[0].rules == a.rules[0].rules);

  ExperimentConfig missing = cfg;
  missing.tuples[0].first = InfluenceTuple::make({"A1", "Zz"}, "T");
  CHECK_THROWS_WITH_AS(run_experiment(missing, synth.data), doctest::Contains("SchemaError"),
                       Error);
  ExperimentConfig invalid = cfg;
  invalid.repetitions = 0;
  CHECK_THROWS_WITH_AS(run_experiment(invalid, synth.data), doctest::Contains("InvalidConfig"),
                       Error);
  ExperimentConfig untupled = cfg;
  untupled.tuples.clear();
  CHECK_THROWS_WITH_AS(run_experiment(untupled, synth.data), doctest::Contains("InvalidConfig"),
                       Error);
}

TEST_CASE("generated surveys respect their dials") {
  const SyntheticData s = gen_synthetic(12, 3, {1, 0}, Rational::integer(0), 2);
  CHECK(s.data.schema == std::vector<std::string>{"A1", "A2", "A3", "T"});
  CHECK(s.tuple.influencers == std::vector<std::string>{"A1", "A2", "A3"});
  CHECK(s.tuple.target == "T");
  CHECK(s.rel.tags == std::vector<int>{1, 0, 1});  // profile cycled to length
  REQUIRE(s.data.size() == 12);
  CHECK(s.data.items[0].id == "01");
  CHECK(s.data.items[11].id == "12");
  for (const DataItem& item : s.data.items)
    for (const auto& [arg, v] : item.values) {
      CHECK(v.on_tenths_grid());
      CHECK(v != Value::half());  // stances are sharp by construction
    }

  // zero noise: no row's raw stances violate a principle
  const std::set<std::string> att = attackers(s.tuple, s.rel);
  const std::set<std::string> sup = supporters(s.tuple, s.rel);
  for (const DataItem& item : s.data.items) {
    StanceMap sm;
    for (const auto& [arg, v] : item.values) sm[arg] = stance_of(v);
    CHECK_FALSE(check_principles(sm, att, sup, "T").has_value());
  }

  // full noise against a lone attacker: every row violates one
  const SyntheticData noisy = gen_synthetic(25, 1, {0}, Rational::integer(1), 3);
  const std::set<std::string> natt = attackers(noisy.tuple, noisy.rel);
  for (const DataItem& item : noisy.data.items) {
    StanceMap sm;
    for (const auto& [arg, v] : item.values) sm[arg] = stance_of(v);
    CHECK(check_principles(sm, natt, {}, "T").has_value());
  }
  // so the widening pipeline has nothing left to mine from
  const ExperimentConfig cfg = make_cfg(testsup::grid5(), Rational::integer(0),
                                        Rational::integer(0), 4, PipelineKind::MultiWay);
  CHECK(learn(noisy.data, noisy.tuple, noisy.rel, cfg).empty());

  // reruns with one seed agree byte for byte; a new seed changes the data
  CHECK(to_csv(gen_synthetic(12, 3, {1, 0}, Rational::integer(0), 2).data) == to_csv(s.data));
  CHECK(to_csv(gen_synthetic(12, 3, {1, 0}, Rational::integer(0), 4).data) != to_csv(s.data));

  CHECK_THROWS_WITH_AS(gen_synthetic(0, 3, {1}, Rational::integer(0), 1),
                       doctest::Contains("InvalidConfig"), Error);
  CHECK_THROWS_WITH_AS(gen_synthetic(5, 0, {1}, Rational::integer(0), 1),
                       doctest::Contains("InvalidConfig"), Error);
  CHECK_THROWS_WITH_AS(gen_synthetic(5, 3, {}, Rational::integer(0), 1),
                       doctest::Contains("EmptyRelationSet"), Error);
  CHECK_THROWS_WITH_AS(gen_synthetic(5, 3, {1}, Rational::of(3, 2), 1),
                       doctest::Contains("InvalidConfig"), Error);
}

TEST_CASE("the unrestricted candidate space grows with the grid") {
  // one influencer, one condition, 3-point grid: 4 atoms each side
  CHECK(naive_candidate_space(1, 1, 3) == 16);
  // two influencers, cap 2, 5-point grid: 2*12*12 + 1*144*12
  CHECK(naive_candidate_space(2, 2, 5) == 2016);
  // the cap clamps to the influencer count
  CHECK(naive_candidate_space(2, 4, 3) == naive_candidate_space(2, 2, 3));
  // endpoint-only grids admit no interior thresholds
  CHECK(naive_candidate_space(3, 2, 2) == 0);

  const std::int64_t n3 = naive_candidate_space(19, 4, 3);
  const std::int64_t n5 = naive_candidate_space(19, 4, 5);
  const std::int64_t n11 = naive_candidate_space(19, 4, 11);
  CHECK(3 * n5 > 5 * n3);    // superlinear: ratio beats 5/3
  CHECK(5 * n11 > 11 * n5);  // and 11/5
  CHECK(naive_candidate_space(30, 4, 1000) == std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("benchmarking sweeps pipelines and grids over one split") {
  const SyntheticData synth = gen_synthetic(40, 3, {1, 1, 0}, Rational::of(1, 10), 11);
  ExperimentConfig base = make_cfg(testsup::grid5(), Rational::of(1, 10), Rational::of(1, 2), 4,
                                   PipelineKind::MultiWay);
  base.tuples.emplace_back(synth.tuple, synth.rel);

  const std::vector<BenchRow> rows =
      benchmark(base, {PipelineKind::TwoWay, PipelineKind::MultiWay},
                {testsup::grid3(), testsup::grid5()}, synth.data);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].pipeline == PipelineKind::TwoWay);
  CHECK(rows[0].value_set_size == 3);
  CHECK(rows[1].value_set_size == 5);
  CHECK(rows[2].pipeline == PipelineKind::MultiWay);
  for (const BenchRow& row : rows) {
    CHECK(row.target == "T");
    CHECK(row.candidates > 0);
    CHECK(row.learn_seconds >= 0);
    CHECK(row.naive_candidates ==
          naive_candidate_space(3, base.max_conditions, row.value_set_size));
  }
  // threshold candidates are grid-independent; the naive space is not
  CHECK(rows[0].candidates == rows[1].candidates);
  CHECK(rows[1].naive_candidates > rows[0].naive_candidates);
}
