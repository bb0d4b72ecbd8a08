#pragma once

// Shared fixtures: the three hand-built survey excerpts the worked examples
// use, plus small helpers for building rules in tests.

#include <string>
#include <vector>

#include "epimine/dataset.hpp"
#include "epimine/language.hpp"
#include "epimine/model.hpp"
#include "epimine/value.hpp"

namespace testsup {

using namespace epimine;

inline Value val(const std::string& s) { return Value::parse(s); }

inline Atom atom(const std::string& arg, Comparator op, const std::string& v) {
  return Atom{arg, op, val(v)};
}

// Dw* beliefs of three respondents; the mixed-relation examples live here.
inline Dataset table1() {
  return parse_csv(
      "id,Dw6,Dw2,Dw5,Dw3\n"
      "004,0.2,0.3,0.3,0.3\n"
      "026,0.4,0.6,0.3,0.6\n"
      "111,0.6,0.1,0.6,0.2\n");
}

// Attack-only examples: Sys7 and Dw6 attack Sys4.
inline Dataset table2() {
  return parse_csv(
      "id,Sys4,Sys7,Dw6\n"
      "000,0.2,0.3,0.3\n"
      "001,0.6,0.3,0.6\n");
}

// Support-only examples: Im1 and Im2 support Qu1.
inline Dataset table3() {
  return parse_csv(
      "id,Qu1,Im1,Im2\n"
      "001,0.7,0.1,0.2\n"
      "002,0.3,0.3,0.7\n");
}

inline const DataItem& row(const Dataset& d, const std::string& id) {
  for (const DataItem& item : d.items)
    if (item.id == id) return item;
  throw std::runtime_error("no row " + id);
}

inline RestrictedValueSet grid3() {
  return RestrictedValueSet::validate({val("0"), val("0.5"), val("1")});
}

inline RestrictedValueSet grid5() {
  return RestrictedValueSet::validate({val("0"), val("0.25"), val("0.5"), val("0.75"), val("1")});
}

inline std::vector<std::string> rule_texts(const std::vector<Rule>& rules) {
  std::vector<std::string> out;
  for (const Rule& r : rules) out.push_back(r.to_string());
  return out;
}

}  // namespace testsup
