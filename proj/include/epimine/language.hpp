#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epimine/value.hpp"

namespace epimine {

enum class Comparator { Eq, Neq, Geq, Leq, Gt, Lt };

/// Text form used in rule files and reports: = != >= <= > <.
const char* to_string(Comparator op);

/// Does x OP v hold, exactly?
bool compare(Value x, Comparator op, Value v);

struct Atom;

/// Pointwise satisfaction: does the degree v satisfy the atom's constraint?
bool atom_holds(const Atom& atom, Value v);

/// The members of the value set satisfying the atom.
std::vector<Value> values_of(const Atom& atom, const RestrictedValueSet& pi);

/// An epistemic atom: a constraint "p(arg) OP val" on the degree of belief
/// in one argument.
struct Atom {
  std::string arg;
  Comparator op = Comparator::Eq;
  Value val;

  std::string to_string() const;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.arg == b.arg && a.op == b.op && a.val == b.val;
  }
  friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
  /// Orders by argument name, then comparator, then value; gives rules a
  /// canonical condition order.
  friend bool operator<(const Atom& a, const Atom& b);
};

/// The three coarse positions an atom can pin an argument to. Atoms that
/// admit degrees on both sides of 0.5 have no stance.
enum class Stance { Believed, Disbelieved, Neutral };

/// Stance of a single degree: > 0.5 believed, < 0.5 disbelieved, 0.5 neutral.
Stance stance_of(Value v);

/// Stance every degree satisfying the atom shares, if there is one.
/// Examples: p(a) >= 0.6 pins Believed; p(a) <= 0.5 pins Disbelieved or
/// Neutral but every satisfying degree is <= 0.5 so it reports Disbelieved
/// for degrees below and Neutral exactly at 0.5 -- the convention here is
/// interval-based: the atom must confine satisfying degrees to one side.
///   =v        -> stance of v
///   > v, v >= 0.5  -> Believed      (> 1 is unsatisfiable; no stance)
///   >= v, v > 0.5  -> Believed
///   < v, 0 < v <= 0.5 -> Disbelieved
///   <= v, v < 0.5  -> Disbelieved
///   <= 0.5         -> Disbelieved   (treats the boundary as the doubting side)
/// Everything else (!=, straddling ranges) -> nullopt.
std::optional<Stance> stance_of_atom(const Atom& atom);

/// A mined constraint: a conjunction of condition atoms entailing a head
/// atom. Conditions are kept sorted by argument name; construction rejects
/// duplicate condition arguments, a head argument reused in the body, and an
/// empty body.
struct Rule {
  std::vector<Atom> conditions;
  Atom head;

  static Rule make(std::vector<Atom> conditions, Atom head);

  /// "p(A) > 0.5 & p(B) <= 0.5 -> p(C) < 0.25"
  std::string to_string() const;

  /// Parses the to_string() form; raises SyntaxError with the offending text.
  static Rule parse(const std::string& text);

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head == b.head && a.conditions == b.conditions;
  }
  friend bool operator!=(const Rule& a, const Rule& b) { return !(a == b); }
  friend bool operator<(const Rule& a, const Rule& b);
};

}  // namespace epimine
