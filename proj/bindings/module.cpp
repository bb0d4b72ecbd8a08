// Python face of the toolkit. Deliberately thin: belief degrees travel as
// strings (or anything str() turns into an exact decimal), rules as their
// text form, datasets as CSV text. All heavy lifting stays in the C++ core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epimine/dataset.hpp"
#include "epimine/error.hpp"
#include "epimine/generalize.hpp"
#include "epimine/json_io.hpp"
#include "epimine/language.hpp"
#include "epimine/metrics.hpp"
#include "epimine/model.hpp"
#include "epimine/pipeline.hpp"
#include "epimine/rationality.hpp"
#include "epimine/synth.hpp"
#include "epimine/value.hpp"

namespace py = pybind11;

namespace {

using namespace epimine;

std::string text_of(const py::handle& obj) { return py::str(obj).cast<std::string>(); }

Value value_of(const py::handle& obj) { return Value::parse(text_of(obj)); }

RestrictedValueSet grid_of(const std::optional<std::vector<py::object>>& values) {
  if (!values) return tenths_grid();
  std::vector<Value> vs;
  for (const py::object& v : *values) vs.push_back(value_of(v));
  return RestrictedValueSet::validate(vs);
}

DataItem item_of(const std::map<std::string, py::object>& row) {
  DataItem d;
  d.id = "row";
  for (const auto& [arg, v] : row) d.values[arg] = value_of(v);
  return d;
}

ConfidenceMode mode_of(const std::string& name) {
  if (name == "fired") return ConfidenceMode::Fired;
  if (name == "dataset") return ConfidenceMode::Dataset;
  raise(ErrorCode::InvalidConfig, "mode must be 'fired' or 'dataset'");
}

PipelineKind pipeline_of(const std::string& name) {
  if (name == "two_way") return PipelineKind::TwoWay;
  if (name == "multi_way") return PipelineKind::MultiWay;
  raise(ErrorCode::InvalidConfig, "pipeline must be 'two_way' or 'multi_way'");
}

py::object opt_str(const std::optional<Rational>& r) {
  if (!r) return py::none();
  return py::str(r->to_string());
}

py::dict stats_dict(const RuleStats& s) {
  py::dict out;
  out["fired"] = s.fired;
  out["agrees"] = s.agrees;
  out["correct"] = s.correct;
  out["dataset_size"] = s.dataset_size;
  out["support"] = s.support.to_string();
  out["confidence"] = opt_str(s.confidence);
  out["lift"] = opt_str(s.lift);
  return out;
}

std::vector<Rule> parse_rules(const std::vector<std::string>& texts) {
  std::vector<Rule> rules;
  for (const std::string& t : texts) rules.push_back(Rule::parse(t));
  return rules;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rule mining over degrees of belief in arguments";

  py::register_exception<Error>(m, "EpimineError");

  m.def(
      "validate_value_set",
      [](const std::vector<py::object>& values) {
        const RestrictedValueSet grid = grid_of(std::vector<py::object>(values));
        std::vector<std::string> out;
        for (Value v : grid.values()) out.push_back(v.to_string());
        return out;
      },
      py::arg("values"),
      "Check the closure conditions on a candidate value set; returns the sorted members.");

  m.def(
      "nearest",
      [](const std::vector<py::object>& grid, const py::object& v) {
        return grid_of(std::vector<py::object>(grid)).nearest(value_of(v)).to_string();
      },
      py::arg("grid"), py::arg("value"),
      "Grid member an equality against `value` widens to.");

  m.def(
      "map_likert",
      [](int raw, int scale_points) { return map_likert(raw, scale_points).to_string(); },
      py::arg("raw"), py::arg("scale_points"),
      "Rescale a 1..k scale answer onto the tenths grid.");

  m.def(
      "normalize_rule",
      [](const std::string& text) { return Rule::parse(text).to_string(); },
      py::arg("text"), "Parse a rule and return its canonical text form.");

  m.def(
      "two_way",
      [](const std::map<std::string, py::object>& row, const std::vector<std::string>& influencers,
         const std::string& target) {
        return two_way_gen(item_of(row), InfluenceTuple::make(influencers, target)).to_string();
      },
      py::arg("row"), py::arg("influencers"), py::arg("target"),
      "One-step 0.5 generalization of a data row into a rule.");

  m.def(
      "multi_way",
      [](const std::map<std::string, py::object>& row, const std::vector<std::string>& influencers,
         const std::string& target, const std::optional<std::vector<py::object>>& grid) {
        return multi_way_gen(pre_gen(item_of(row), InfluenceTuple::make(influencers, target)),
                             grid_of(grid))
            .to_string();
      },
      py::arg("row"), py::arg("influencers"), py::arg("target"), py::arg("grid") = py::none(),
      "Grid widening of a data row into a rule (default grid: tenths).");

  m.def(
      "check_row",
      [](const std::map<std::string, py::object>& row, const std::vector<std::string>& influencers,
         const std::vector<int>& relations, const std::string& target) -> py::object {
        const auto I = InfluenceTuple::make(influencers, target);
        const auto rel = RelationSet::make(relations);
        StanceMap stances;
        for (const auto& [arg, v] : item_of(row).values) stances[arg] = stance_of(v);
        const auto hit = check_principles(stances, attackers(I, rel), supporters(I, rel), target);
        if (!hit) return py::none();
        return py::str(to_string(*hit));
      },
      py::arg("row"), py::arg("influencers"), py::arg("relations"), py::arg("target"),
      "Name of the rationality principle the row violates, or None.");

  m.def(
      "learn",
      [](const std::string& csv_text, const std::vector<std::string>& influencers,
         const std::vector<int>& relations, const std::string& target,
         const std::optional<std::vector<py::object>>& grid, const py::object& tau_support,
         const py::object& tau_confidence, int max_conditions, const std::string& mode,
         const std::string& pipeline) {
        ExperimentConfig cfg;
        cfg.value_set = grid_of(grid);
        cfg.tau_support = Rational::parse(text_of(tau_support));
        cfg.tau_confidence = Rational::parse(text_of(tau_confidence));
        cfg.max_conditions = max_conditions;
        cfg.confidence_mode = mode_of(mode);
        cfg.pipeline = pipeline_of(pipeline);
        const Dataset data = parse_csv(csv_text);
        std::vector<std::string> out;
        for (const Rule& r :
             learn(data, InfluenceTuple::make(influencers, target), RelationSet::make(relations), cfg))
          out.push_back(r.to_string());
        return out;
      },
      py::arg("csv_text"), py::arg("influencers"), py::arg("relations"), py::arg("target"),
      py::arg("grid") = py::none(), py::arg("tau_support") = "0.4",
      py::arg("tau_confidence") = "0.8", py::arg("max_conditions") = 4,
      py::arg("mode") = "fired", py::arg("pipeline") = "multi_way",
      "Mine the rule set for one influence tuple from CSV text.");

  m.def(
      "rule_stats",
      [](const std::string& rule_text, const std::string& csv_text, const std::string& mode) {
        return stats_dict(stats(Rule::parse(rule_text), parse_csv(csv_text), mode_of(mode)));
      },
      py::arg("rule"), py::arg("csv_text"), py::arg("mode") = "fired",
      "Support, confidence and lift of one rule over CSV text.");

  m.def(
      "audit",
      [](const std::vector<std::string>& rules, const std::vector<std::string>& influencers,
         const std::vector<int>& relations, const std::string& target) {
        const AuditResult a =
            audit_irrational(parse_rules(rules), InfluenceTuple::make(influencers, target),
                             RelationSet::make(relations));
        py::dict by;
        for (const auto& [id, count] : a.by_principle) by[to_string(id)] = count;
        py::dict out;
        out["irrational"] = a.irrational;
        out["by_principle"] = by;
        return out;
      },
      py::arg("rules"), py::arg("influencers"), py::arg("relations"), py::arg("target"),
      "Count mined rules whose pinned stances violate a principle.");

  m.def(
      "synth",
      [](int rows, int influencers, const std::vector<int>& profile, const py::object& noise,
         std::uint64_t seed) {
        return to_csv(
            gen_synthetic(rows, influencers, profile, Rational::parse(text_of(noise)), seed).data);
      },
      py::arg("rows"), py::arg("influencers"), py::arg("profile"), py::arg("noise") = "0.1",
      py::arg("seed") = 1,
      "Generate a synthetic survey as CSV text (columns A1..Am and T).");

  m.def(
      "mine",
      [](const std::string& csv_text, const std::string& config_json) {
        const ExperimentConfig cfg = parse_config(config_json);
        const ExperimentResult res = run_experiment(cfg, parse_csv(csv_text));
        py::dict out;
        out["rules_json"] = rules_to_json(res);
        out["stats_csv"] = stats_to_csv(res);
        out["report_csv"] = report_to_csv(res);
        out["timings_csv"] = timings_to_csv(res);
        return out;
      },
      py::arg("csv_text"), py::arg("config_json"),
      "Run the full split/learn/evaluate protocol; returns the report documents.");

  m.def("naive_candidate_space", &naive_candidate_space, py::arg("n_influencers"), py::arg("cap"),
        py::arg("grid_size"),
        "Size of the unrestricted candidate space a generate-and-test miner faces.");
}
