#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "epimine/language.hpp"
#include "epimine/model.hpp"

namespace epimine {

/// A possible world: the set of arguments an agent considers acceptable.
using World = std::set<std::string>;

/// A probability distribution over possible worlds, stored sparsely:
/// unlisted worlds carry probability 0. An argument's degree of belief is
/// the total weight of the worlds containing it.
class BeliefDistribution {
 public:
  /// Validates: every world a subset of the universe (UnknownArgument) and
  /// weights summing exactly to 1 (InvalidDistribution).
  static BeliefDistribution make(std::set<std::string> universe, std::map<World, Value> worlds);

  const std::set<std::string>& universe() const { return universe_; }
  const std::map<World, Value>& worlds() const { return worlds_; }

  /// Sum of the weights of the worlds containing arg; UnknownArgument when
  /// arg is not in the universe.
  Value marginal(const std::string& arg) const;

  friend bool operator<(const BeliefDistribution& a, const BeliefDistribution& b) {
    return a.worlds_ < b.worlds_;
  }
  friend bool operator==(const BeliefDistribution& a, const BeliefDistribution& b) {
    return a.worlds_ == b.worlds_;
  }

 private:
  std::set<std::string> universe_;
  std::map<World, Value> worlds_;
};

/// Boolean combinations of epistemic atoms. Implication is sugar for
/// not(lhs) or rhs.
class Formula {
 public:
  static Formula atom(Atom a);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula neg(Formula inner);
  static Formula implies(Formula lhs, Formula rhs);

  bool eval(const BeliefDistribution& P) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

/// Does P satisfy the formula? Atom case compares the marginal; connectives
/// evaluate classically.
bool satisfies(const BeliefDistribution& P, const Formula& phi);

struct EnumerationCaps {
  std::size_t max_arguments = 4;
  std::size_t max_values = 5;
};

/// Every distribution over subsets of `arguments` whose world weights all
/// lie in pi and sum to 1, each exactly once, in deterministic order. The
/// space is exponential, so both dimensions are capped (CapExceeded).
std::vector<BeliefDistribution> enumerate_restricted(const std::vector<std::string>& arguments,
                                                     const RestrictedValueSet& pi,
                                                     EnumerationCaps caps = {});

/// For every attack edge (a, b): P(a) <= 1 - P(b).
bool is_coherent(const BeliefDistribution& P, const BipolarGraph& G);

}  // namespace epimine
