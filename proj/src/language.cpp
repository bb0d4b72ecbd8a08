#include "epimine/language.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace epimine {

const char* to_string(Comparator op) {
  switch (op) {
    case Comparator::Eq: return "=";
    case Comparator::Neq: return "!=";
    case Comparator::Geq: return ">=";
    case Comparator::Leq: return "<=";
    case Comparator::Gt: return ">";
    case Comparator::Lt: return "<";
  }
  return "?";
}

bool compare(Value x, Comparator op, Value v) {
  switch (op) {
    case Comparator::Eq: return x == v;
    case Comparator::Neq: return x != v;
    case Comparator::Geq: return x >= v;
    case Comparator::Leq: return x <= v;
    case Comparator::Gt: return x > v;
    case Comparator::Lt: return x < v;
  }
  return false;
}

bool atom_holds(const Atom& atom, Value v) { return compare(v, atom.op, atom.val); }

std::vector<Value> values_of(const Atom& atom, const RestrictedValueSet& pi) {
  std::vector<Value> out;
  for (Value x : pi.values())
    if (atom_holds(atom, x)) out.push_back(x);
  return out;
}

std::string Atom::to_string() const {
  return "p(" + arg + ") " + epimine::to_string(op) + " " + val.to_string();
}

bool operator<(const Atom& a, const Atom& b) {
  return std::tie(a.arg, a.op, a.val) <
         std::tie(b.arg, b.op, b.val);
}

Stance stance_of(Value v) {
  if (v > Value::half()) return Stance::Believed;
  if (v < Value::half()) return Stance::Disbelieved;
  return Stance::Neutral;
}

std::optional<Stance> stance_of_atom(const Atom& atom) {
  const Value half = Value::half();
  switch (atom.op) {
    case Comparator::Eq:
      return stance_of(atom.val);
    case Comparator::Neq:
      return std::nullopt;
    case Comparator::Gt:
      // satisfying degrees are (val, 1]; one-sided iff val >= 0.5 and some exist
      if (atom.val >= half && atom.val < Value::one()) return Stance::Believed;
      return std::nullopt;
    case Comparator::Geq:
      if (atom.val > half) return Stance::Believed;
      return std::nullopt;
    case Comparator::Lt:
      // satisfying degrees are [0, val); one-sided iff val <= 0.5 and some exist
      if (atom.val <= half && atom.val > Value::zero()) return Stance::Disbelieved;
      return std::nullopt;
    case Comparator::Leq:
      if (atom.val < half) return Stance::Disbelieved;
      // <= 0.5 admits 0.5 itself, but nothing above; counted as doubting.
      if (atom.val == half) return Stance::Disbelieved;
      return std::nullopt;
  }
  return std::nullopt;
}

Rule Rule::make(std::vector<Atom> conditions, Atom head) {
  if (conditions.empty())
    raise(ErrorCode::EmptyConditions, "a rule needs at least one condition");
  std::sort(conditions.begin(), conditions.end());
  for (std::size_t i = 0; i + 1 < conditions.size(); ++i) {
    if (conditions[i].arg == conditions[i + 1].arg)
      raise(ErrorCode::DuplicateConditionArgument,
            "argument " + conditions[i].arg + " constrained twice");
  }
  for (const Atom& c : conditions) {
    if (c.arg == head.arg)
      raise(ErrorCode::HeadInConditions,
            "head argument " + head.arg + " also appears in the conditions");
  }
  Rule r;
  r.conditions = std::move(conditions);
  r.head = std::move(head);
  return r;
}

std::string Rule::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    if (i) out += " & ";
    out += conditions[i].to_string();
  }
  out += " -> " + head.to_string();
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(const char* literal) {
    skip_ws();
    std::size_t n = 0;
    while (literal[n]) ++n;
    if (text.compare(pos, n, literal) == 0) {
      pos += n;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& expected) {
    raise(ErrorCode::SyntaxError,
          "expected " + expected + " at offset " + std::to_string(pos) + " in '" + text + "'");
  }
};

Atom parse_atom(Cursor& cur) {
  if (!cur.eat("p(")) cur.fail("'p('");
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() &&
         (std::isalnum(static_cast<unsigned char>(cur.text[cur.pos])) || cur.text[cur.pos] == '_'))
    ++cur.pos;
  if (cur.pos == start) cur.fail("an argument name");
  std::string arg = cur.text.substr(start, cur.pos - start);
  if (std::isdigit(static_cast<unsigned char>(arg[0]))) cur.fail("an argument name");
  if (!cur.eat(")")) cur.fail("')'");

  Comparator op;
  // Order matters: match two-char comparators before their one-char prefixes.
  if (cur.eat("!=")) op = Comparator::Neq;
  else if (cur.eat(">=")) op = Comparator::Geq;
  else if (cur.eat("<=")) op = Comparator::Leq;
  else if (cur.eat(">")) op = Comparator::Gt;
  else if (cur.eat("<")) op = Comparator::Lt;
  else if (cur.eat("=")) op = Comparator::Eq;
  else cur.fail("a comparator");

  cur.skip_ws();
  start = cur.pos;
  while (cur.pos < cur.text.size() &&
         (std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])) || cur.text[cur.pos] == '.'))
    ++cur.pos;
  if (cur.pos == start) cur.fail("a belief degree");
  Value val = Value::parse(cur.text.substr(start, cur.pos - start));
  return Atom{std::move(arg), op, val};
}

}  // namespace

Rule Rule::parse(const std::string& text) {
  Cursor cur{text};
  std::vector<Atom> conditions;
  conditions.push_back(parse_atom(cur));
  while (cur.eat("&")) conditions.push_back(parse_atom(cur));
  if (!cur.eat("->")) cur.fail("'&' or '->'");
  Atom head = parse_atom(cur);
  cur.skip_ws();
  if (cur.pos != text.size()) cur.fail("end of rule");
  return Rule::make(std::move(conditions), std::move(head));
}

bool operator<(const Rule& a, const Rule& b) {
  if (a.head != b.head) return a.head < b.head;
  return std::lexicographical_compare(a.conditions.begin(), a.conditions.end(),
                                      b.conditions.begin(), b.conditions.end());
}

}  // namespace epimine
