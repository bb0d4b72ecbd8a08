#include "epimine/json_io.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

namespace epimine {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorCode::InvalidConfig, what); }

Rational rational_field(const json& j, const std::string& name) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational::integer(j.get<std::int64_t>());
  if (j.is_number_float()) {
    // Tolerate JSON floats by snapping to the nearest millionth.
    const double x = j.get<double>();
    const double scaled = std::round(x * 1e6);
    if (std::abs(x * 1e6 - scaled) > 1e-3) bad(name + " is not an exact decimal");
    return Rational::of(static_cast<std::int64_t>(scaled), 1000000);
  }
  bad(name + " must be a decimal string or number");
}

Value value_field(const json& j, const std::string& name) {
  const Rational r = rational_field(j, name);
  if (r.num() < 0 || r.num() > r.den()) bad(name + " outside [0,1]");
  if ((100 * r.num()) % r.den() != 0)
    bad(name + " = " + r.to_string() + " is finer than the hundredths grid");
  return Value::of_hundredths(static_cast<std::int32_t>(100 * r.num() / r.den()));
}

Comparator comparator_field(const std::string& op) {
  if (op == "=") return Comparator::Eq;
  if (op == "!=") return Comparator::Neq;
  if (op == ">=") return Comparator::Geq;
  if (op == "<=") return Comparator::Leq;
  if (op == ">") return Comparator::Gt;
  if (op == "<") return Comparator::Lt;
  raise(ErrorCode::SyntaxError, "unknown comparator '" + op + "'");
}

json atom_to_json(const Atom& a) {
  return json{{"arg", a.arg}, {"op", to_string(a.op)}, {"val", a.val.to_string()}};
}

Atom atom_from_json(const json& j) {
  if (!j.is_object() || !j.contains("arg") || !j.contains("op") || !j.contains("val"))
    bad("an atom needs arg, op and val");
  return Atom{j.at("arg").get<std::string>(),
              comparator_field(j.at("op").get<std::string>()),
              value_field(j.at("val"), "val")};
}

Rule rule_from_json(const json& j) {
  if (j.is_string()) return Rule::parse(j.get<std::string>());
  if (j.is_object() && j.contains("conditions") && j.contains("head")) {
    std::vector<Atom> conditions;
    for (const json& c : j.at("conditions")) conditions.push_back(atom_from_json(c));
    return Rule::make(std::move(conditions), atom_from_json(j.at("head")));
  }
  if (j.is_object() && j.contains("text")) return Rule::parse(j.at("text").get<std::string>());
  bad("a rule must be a string or an object with conditions and head");
}

std::string opt_to_string(const std::optional<Rational>& r) {
  return r ? r->to_string() : "";
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(ErrorCode::SyntaxError, "malformed JSON");
  return j;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object()) bad("config must be a JSON object");
  static const std::set<std::string> known = {
      "value_set",  "tuples", "tau_support",     "tau_confidence", "max_conditions",
      "repetitions", "split_ratio", "seed", "confidence_mode", "pipeline"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) bad("unknown config field '" + key + "'");

  ExperimentConfig cfg;
  if (j.contains("value_set")) {
    std::vector<Value> values;
    for (const json& v : j.at("value_set")) values.push_back(value_field(v, "value_set entry"));
    cfg.value_set = RestrictedValueSet::validate(std::move(values));
  }
  if (!j.contains("tuples")) bad("config needs a tuples array");
  for (const json& t : j.at("tuples")) {
    if (!t.is_object() || !t.contains("target") || !t.contains("influencers") ||
        !t.contains("relations"))
      bad("each tuple needs target, influencers and relations");
    std::vector<std::string> influencers;
    for (const json& a : t.at("influencers")) influencers.push_back(a.get<std::string>());
    const json& rel = t.at("relations");
    std::vector<int> tags;
    if (rel.is_object()) {
      // named map, normalized to influencer order
      for (const std::string& arg : influencers) {
        if (!rel.contains(arg)) bad("relations map lacks influencer " + arg);
        tags.push_back(rel.at(arg).get<int>());
      }
      if (rel.size() != influencers.size()) bad("relations map names a non-influencer");
    } else {
      for (const json& r : rel) tags.push_back(r.get<int>());
    }
    cfg.tuples.emplace_back(InfluenceTuple::make(std::move(influencers),
                                                 t.at("target").get<std::string>()),
                            RelationSet::make(std::move(tags)));
  }
  if (j.contains("tau_support")) cfg.tau_support = rational_field(j.at("tau_support"), "tau_support");
  if (j.contains("tau_confidence"))
    cfg.tau_confidence = rational_field(j.at("tau_confidence"), "tau_confidence");
  if (j.contains("split_ratio")) cfg.split_ratio = rational_field(j.at("split_ratio"), "split_ratio");
  if (j.contains("max_conditions")) cfg.max_conditions = j.at("max_conditions").get<int>();
  if (j.contains("repetitions")) cfg.repetitions = j.at("repetitions").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("confidence_mode")) {
    const std::string mode = j.at("confidence_mode").get<std::string>();
    if (mode == "fired") cfg.confidence_mode = ConfidenceMode::Fired;
    else if (mode == "dataset") cfg.confidence_mode = ConfidenceMode::Dataset;
    else bad("confidence_mode must be 'fired' or 'dataset'");
  }
  if (j.contains("pipeline")) {
    const std::string kind = j.at("pipeline").get<std::string>();
    if (kind == "two_way") cfg.pipeline = PipelineKind::TwoWay;
    else if (kind == "multi_way") cfg.pipeline = PipelineKind::MultiWay;
    else bad("pipeline must be 'two_way' or 'multi_way'");
  }
  cfg.validate();
  return cfg;
}

std::string rules_to_json(const ExperimentResult& result) {
  json tuples = json::array();
  for (const auto& tr : result.rules) {
    json rules = json::array();
    for (std::size_t i = 0; i < tr.rules.size(); ++i) {
      const Rule& r = tr.rules[i];
      json conditions = json::array();
      for (const Atom& c : r.conditions) conditions.push_back(atom_to_json(c));
      json entry{{"text", r.to_string()},
                 {"conditions", std::move(conditions)},
                 {"head", atom_to_json(r.head)}};
      if (i < tr.train_stats.size()) {
        const RuleStats& s = tr.train_stats[i];
        entry["train"] = json{{"support", s.support.to_string()},
                              {"confidence", opt_to_string(s.confidence)},
                              {"lift", opt_to_string(s.lift)}};
      }
      rules.push_back(std::move(entry));
    }
    tuples.push_back(json{{"target", tr.target}, {"rules", std::move(rules)}});
  }
  return json{{"tuples", std::move(tuples)}}.dump(2) + "\n";
}

std::vector<Rule> rules_from_json(const std::string& json_text) {
  const json j = parse_text(json_text);
  std::vector<Rule> rules;
  if (j.is_array()) {
    for (const json& r : j) rules.push_back(rule_from_json(r));
    return rules;
  }
  if (j.is_object() && j.contains("tuples")) {
    for (const json& t : j.at("tuples"))
      for (const json& r : t.at("rules")) rules.push_back(rule_from_json(r));
    return rules;
  }
  if (j.is_object() && j.contains("rules")) {
    for (const json& r : j.at("rules")) rules.push_back(rule_from_json(r));
    return rules;
  }
  bad("rules file must be an array or an object with tuples/rules");
}

namespace {

void stats_rows(std::ostringstream& out, const std::string& target, const std::string& split,
                const std::vector<Rule>& rules, const std::vector<RuleStats>& stats) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const RuleStats& s = stats[i];
    out << target << ',' << split << ',' << rules[i].to_string() << ',' << s.support.to_string()
        << ',' << opt_to_string(s.confidence) << ',' << opt_to_string(s.lift) << ',' << s.fired
        << ',' << s.agrees << ',' << s.correct << '\n';
  }
}

}  // namespace

std::string stats_to_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "target,split,rule,support,confidence,lift,fired,agrees,correct\n";
  for (const auto& tr : result.rules) {
    stats_rows(out, tr.target, "train", tr.rules, tr.train_stats);
    stats_rows(out, tr.target, "test", tr.rules, tr.test_stats);
  }
  return out.str();
}

std::string report_to_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "target,repetition,rules,avg_conditions,mean_support,mean_confidence,mean_lift,"
         "irrational,train_size,test_size\n";
  for (const TupleReport& r : result.reports) {
    out << r.target << ',' << (r.repetition == 0 ? std::string("avg") : std::to_string(r.repetition))
        << ',' << r.rule_count.to_string() << ',' << r.avg_conditions.to_string() << ','
        << r.mean_support.to_string() << ',' << opt_to_string(r.mean_confidence) << ','
        << opt_to_string(r.mean_lift) << ',' << r.irrational.to_string() << ',' << r.train_size
        << ',' << r.test_size << '\n';
  }
  return out.str();
}

std::string timings_to_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "target,repetition,learn_s,evaluate_s\n";
  for (const TupleReport& r : result.reports) {
    out << r.target << ',' << (r.repetition == 0 ? std::string("avg") : std::to_string(r.repetition))
        << ',' << r.learn_seconds << ',' << r.evaluate_seconds << '\n';
  }
  return out.str();
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "pipeline,value_set_size,target,learn_s,candidates,naive_candidates\n";
  for (const BenchRow& r : rows) {
    out << to_string(r.pipeline) << ',' << r.value_set_size << ',' << r.target << ','
        << r.learn_seconds << ',' << r.candidates << ',' << r.naive_candidates << '\n';
  }
  return out.str();
}

std::string audit_to_json(const AuditResult& audit) {
  json by = json::object();
  for (const auto& [id, count] : audit.by_principle) by[to_string(id)] = count;
  return json{{"irrational", audit.irrational}, {"by_principle", std::move(by)}}.dump(2) + "\n";
}

BenchGrid parse_bench_grid(const std::string& json_text) {
  const json j = parse_text(json_text);
  if (!j.is_object() || !j.contains("pipelines") || !j.contains("value_sets"))
    bad("grid needs pipelines and value_sets arrays");
  BenchGrid grid;
  for (const json& p : j.at("pipelines")) {
    const std::string kind = p.get<std::string>();
    if (kind == "two_way") grid.pipelines.push_back(PipelineKind::TwoWay);
    else if (kind == "multi_way") grid.pipelines.push_back(PipelineKind::MultiWay);
    else bad("pipeline must be 'two_way' or 'multi_way'");
  }
  for (const json& vs : j.at("value_sets")) {
    std::vector<Value> values;
    for (const json& v : vs) values.push_back(value_field(v, "value_sets entry"));
    grid.grids.push_back(RestrictedValueSet::validate(std::move(values)));
  }
  if (grid.pipelines.empty() || grid.grids.empty()) bad("grid must name at least one variant");
  return grid;
}

}  // namespace epimine
