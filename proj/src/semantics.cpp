#include "epimine/semantics.hpp"

#include <algorithm>

namespace epimine {

BeliefDistribution BeliefDistribution::make(std::set<std::string> universe,
                                            std::map<World, Value> worlds) {
  int total = 0;
  for (auto it = worlds.begin(); it != worlds.end();) {
    for (const std::string& arg : it->first)
      if (!universe.count(arg))
        raise(ErrorCode::UnknownArgument, "world member " + arg + " not in the universe");
    total += it->second.hundredths();
    // drop explicit zeros so equal distributions compare equal
    it = it->second == Value::zero() ? worlds.erase(it) : std::next(it);
  }
  if (total != Value::kDenominator)
    raise(ErrorCode::InvalidDistribution,
          "world weights sum to " + std::to_string(total) + "/100, not 1");
  BeliefDistribution P;
  P.universe_ = std::move(universe);
  P.worlds_ = std::move(worlds);
  return P;
}

Value BeliefDistribution::marginal(const std::string& arg) const {
  if (!universe_.count(arg))
    raise(ErrorCode::UnknownArgument, "no argument " + arg + " in the universe");
  int total = 0;
  for (const auto& [world, p] : worlds_)
    if (world.count(arg)) total += p.hundredths();
  return Value::of_hundredths(total);
}

struct Formula::Node {
  enum class Kind { Atom, And, Or, Not } kind;
  epimine::Atom atom;
  std::shared_ptr<const Node> lhs, rhs;

  bool eval(const BeliefDistribution& P) const {
    switch (kind) {
      case Kind::Atom: return atom_holds(atom, P.marginal(atom.arg));
      case Kind::And: return lhs->eval(P) && rhs->eval(P);
      case Kind::Or: return lhs->eval(P) || rhs->eval(P);
      case Kind::Not: return !lhs->eval(P);
    }
    return false;
  }
};

Formula Formula::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Atom;
  n->atom = std::move(a);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::And;
  n->lhs = std::move(lhs.root_);
  n->rhs = std::move(rhs.root_);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Or;
  n->lhs = std::move(lhs.root_);
  n->rhs = std::move(rhs.root_);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula inner) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Not;
  n->lhs = std::move(inner.root_);
  return Formula(std::move(n));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return disj(neg(std::move(lhs)), std::move(rhs));
}

bool Formula::eval(const BeliefDistribution& P) const { return root_->eval(P); }

bool satisfies(const BeliefDistribution& P, const Formula& phi) { return phi.eval(P); }

std::vector<BeliefDistribution> enumerate_restricted(const std::vector<std::string>& arguments,
                                                     const RestrictedValueSet& pi,
                                                     EnumerationCaps caps) {
  if (arguments.size() > caps.max_arguments)
    raise(ErrorCode::CapExceeded, std::to_string(arguments.size()) +
                                      " arguments exceed the enumeration cap of " +
                                      std::to_string(caps.max_arguments));
  if (pi.size() > caps.max_values)
    raise(ErrorCode::CapExceeded, std::to_string(pi.size()) +
                                      " grid values exceed the enumeration cap of " +
                                      std::to_string(caps.max_values));

  // Worlds in subset-mask order; weights assigned by depth-first search over
  // compositions of 1 into 2^n parts drawn from pi.
  const std::size_t n_worlds = std::size_t{1} << arguments.size();
  std::set<std::string> universe(arguments.begin(), arguments.end());
  std::vector<World> worlds(n_worlds);
  for (std::size_t mask = 0; mask < n_worlds; ++mask)
    for (std::size_t i = 0; i < arguments.size(); ++i)
      if (mask & (std::size_t{1} << i)) worlds[mask].insert(arguments[i]);

  std::vector<BeliefDistribution> out;
  std::vector<int> weights(n_worlds, 0);
  auto descend = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot == n_worlds) {
      if (remaining != 0) return;
      std::map<World, Value> assignment;
      for (std::size_t i = 0; i < n_worlds; ++i)
        if (weights[i] > 0) assignment[worlds[i]] = Value::of_hundredths(weights[i]);
      out.push_back(BeliefDistribution::make(universe, std::move(assignment)));
      return;
    }
    for (Value v : pi.values()) {
      if (v.hundredths() > remaining) break;
      weights[slot] = v.hundredths();
      self(self, slot + 1, remaining - v.hundredths());
    }
    weights[slot] = 0;
  };
  descend(descend, 0, Value::kDenominator);
  return out;
}

bool is_coherent(const BeliefDistribution& P, const BipolarGraph& G) {
  for (const auto& [a, b] : G.attacks) {
    const Value pa = P.marginal(a);
    const Value pb = P.marginal(b);
    // P(a) <= 1 - P(b), exactly: hundredths(a) + hundredths(b) <= 100
    if (pa.hundredths() + pb.hundredths() > Value::kDenominator) return false;
  }
  return true;
}

}  // namespace epimine
