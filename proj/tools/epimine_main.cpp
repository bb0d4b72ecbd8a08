// epimine: learn belief rules from Likert-style survey data.
//
//   epimine synth --rows 200 --influencers 3 --relations 1,1,0 --out data.csv
//   epimine mine --dataset data.csv --config config.json --out results/
//   epimine bench --dataset data.csv --config config.json --grid grid.json --out results/
//   epimine check --rules results/rules.json --config config.json

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "epimine/dataset.hpp"
#include "epimine/json_io.hpp"
#include "epimine/pipeline.hpp"
#include "epimine/synth.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) epimine::raise(epimine::ErrorCode::SchemaError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) epimine::raise(epimine::ErrorCode::SchemaError, "cannot write " + path.string());
}

std::vector<int> parse_relations(const std::string& text) {
  std::vector<int> tags;
  std::string cell;
  std::istringstream in(text);
  while (std::getline(in, cell, ',')) {
    if (cell == "0") tags.push_back(0);
    else if (cell == "1") tags.push_back(1);
    else epimine::raise(epimine::ErrorCode::InvalidConfig, "relation tags must be 0 or 1");
  }
  return tags;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rule mining over degrees of belief in arguments"};
  app.require_subcommand(1);

  std::string dataset_path, config_path, grid_path, rules_path, out_dir = ".";
  std::string out_file = "synthetic.csv", pipeline_name, relations = "1";
  int scale = 0, rows = 100, influencers = 3;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::string noise = "0.1";

  CLI::App* mine = app.add_subcommand("mine", "learn rules and write the evaluation reports");
  mine->add_option("--dataset", dataset_path, "belief CSV")->required();
  mine->add_option("--scale", scale, "treat cells as 1..K scale answers");
  mine->add_option("--config", config_path, "experiment config JSON")->required();
  mine->add_option("--pipeline", pipeline_name, "two_way or multi_way")
      ->check(CLI::IsMember({"two_way", "multi_way"}));
  mine->add_option("--seed", seed, "override the config seed")->each([&](const std::string&) {
    seed_given = true;
  });
  mine->add_option("--out", out_dir, "output directory (default .)");

  CLI::App* bench = app.add_subcommand("bench", "time the learner across pipeline/grid variants");
  bench->add_option("--dataset", dataset_path, "belief CSV")->required();
  bench->add_option("--scale", scale, "treat cells as 1..K scale answers");
  bench->add_option("--config", config_path, "experiment config JSON")->required();
  bench->add_option("--grid", grid_path, "benchmark grid JSON")->required();
  bench->add_option("--out", out_dir, "output directory (default .)");

  CLI::App* synth = app.add_subcommand("synth", "generate a synthetic survey CSV");
  synth->add_option("--rows", rows, "row count");
  synth->add_option("--influencers", influencers, "influencer count");
  synth->add_option("--relations", relations, "comma-separated 0/1 tags, cycled over influencers");
  synth->add_option("--noise", noise, "share of rows breaking the rationality principles");
  synth->add_option("--seed", seed, "generator seed");
  synth->add_option("--out", out_file, "output CSV path");

  CLI::App* check = app.add_subcommand("check", "audit a rule file against the principles");
  check->add_option("--rules", rules_path, "rules JSON")->required();
  check->add_option("--config", config_path, "experiment config JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const std::optional<int> scale_points =
        scale > 0 ? std::optional<int>(scale) : std::nullopt;

    if (mine->parsed()) {
      epimine::ExperimentConfig cfg = epimine::parse_config(slurp(config_path));
      if (pipeline_name == "two_way") cfg.pipeline = epimine::PipelineKind::TwoWay;
      if (pipeline_name == "multi_way") cfg.pipeline = epimine::PipelineKind::MultiWay;
      if (seed_given) cfg.seed = seed;
      const epimine::Dataset data = epimine::ingest_csv(dataset_path, scale_points);
      const epimine::ExperimentResult result = epimine::run_experiment(cfg, data);

      std::filesystem::create_directories(out_dir);
      const std::filesystem::path out(out_dir);
      spill(out / "rules.json", epimine::rules_to_json(result));
      spill(out / "stats.csv", epimine::stats_to_csv(result));
      spill(out / "report.csv", epimine::report_to_csv(result));
      spill(out / "timings.csv", epimine::timings_to_csv(result));
      for (const auto& tr : result.rules)
        std::cout << tr.target << ": " << tr.rules.size() << " rules\n";
      std::cout << "wrote rules.json, stats.csv, report.csv, timings.csv to " << out_dir << "\n";
      return 0;
    }

    if (bench->parsed()) {
      const epimine::ExperimentConfig cfg = epimine::parse_config(slurp(config_path));
      const epimine::BenchGrid grid = epimine::parse_bench_grid(slurp(grid_path));
      const epimine::Dataset data = epimine::ingest_csv(dataset_path, scale_points);
      const auto rows_out = epimine::benchmark(cfg, grid.pipelines, grid.grids, data);
      std::filesystem::create_directories(out_dir);
      spill(std::filesystem::path(out_dir) / "timings.csv", epimine::bench_to_csv(rows_out));
      std::cout << "wrote timings.csv (" << rows_out.size() << " rows) to " << out_dir << "\n";
      return 0;
    }

    if (synth->parsed()) {
      const epimine::SyntheticData made = epimine::gen_synthetic(
          rows, influencers, parse_relations(relations), epimine::Rational::parse(noise), seed);
      spill(out_file, epimine::to_csv(made.data));
      std::cout << "wrote " << made.data.size() << " rows to " << out_file << "\n";
      return 0;
    }

    // check
    const epimine::ExperimentConfig cfg = epimine::parse_config(slurp(config_path));
    const std::vector<epimine::Rule> rules = epimine::rules_from_json(slurp(rules_path));
    epimine::AuditResult total;
    for (const auto& [I, rel] : cfg.tuples) {
      const epimine::AuditResult part = epimine::audit_irrational(rules, I, rel);
      total.irrational += part.irrational;
      for (const auto& [id, count] : part.by_principle) total.by_principle[id] += count;
    }
    std::cout << epimine::audit_to_json(total);
    return total.irrational > 0 ? 1 : 0;
  } catch (const epimine::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
