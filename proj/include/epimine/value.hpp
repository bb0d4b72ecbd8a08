#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epimine/error.hpp"
#include "epimine/rational.hpp"

namespace epimine {

/// A degree of belief in [0,1], stored exactly as hundredths. The fixed
/// denominator keeps every comparison and every bounded add/subtract an
/// integer operation; nothing in the toolkit touches floating point when
/// it decides semantics.
class Value {
 public:
  static constexpr std::int32_t kDenominator = 100;

  constexpr Value() : num_(0) {}

  /// Builds kNum/kDenominator; raises OutOfRange outside [0,1].
  static Value of_hundredths(std::int32_t num);

  /// Convenience for tenths (the survey grid): of_tenths(3) == 0.3.
  static Value of_tenths(std::int32_t tenths);

  static Value zero() { return Value(); }
  static Value one() { return of_hundredths(kDenominator); }
  static Value half() { return of_hundredths(kDenominator / 2); }

  /// Parses "0", "1", "0.5", "0.25", ".7", "0.30". At most two fractional
  /// digits; anything else is a SyntaxError, values outside [0,1] OutOfRange.
  static Value parse(const std::string& text);

  std::int32_t hundredths() const { return num_; }

  bool on_tenths_grid() const { return num_ % 10 == 0; }

  /// Bounded addition: min(a + b, 1).
  friend Value operator+(Value a, Value b);
  /// Bounded subtraction: max(a - b, 0).
  friend Value operator-(Value a, Value b);

  friend bool operator==(Value a, Value b) { return a.num_ == b.num_; }
  friend bool operator!=(Value a, Value b) { return a.num_ != b.num_; }
  friend bool operator<(Value a, Value b) { return a.num_ < b.num_; }
  friend bool operator>(Value a, Value b) { return a.num_ > b.num_; }
  friend bool operator<=(Value a, Value b) { return a.num_ <= b.num_; }
  friend bool operator>=(Value a, Value b) { return a.num_ >= b.num_; }

  Rational to_rational() const { return Rational::of(num_, kDenominator); }

  /// Shortest exact decimal: "0", "1", "0.5", "0.25".
  std::string to_string() const;

 private:
  explicit constexpr Value(std::int32_t num) : num_(num) {}
  std::int32_t num_;
};

/// A restricted value set: the candidate belief degrees a mined rule may
/// mention. Valid sets contain 1, are closed under bounded addition and
/// subtraction (which forces 0 in), and live on the hundredths grid.
class RestrictedValueSet {
 public:
  /// Validates and sorts; raises MissingOne or ClosureViolation (the message
  /// names a witnessing pair and the absent element).
  static RestrictedValueSet validate(std::vector<Value> values);

  const std::vector<Value>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool contains(Value v) const;

  /// Nearest grid point used when widening an equality into an inequality:
  /// for v <= 0.5 the smallest member of [v, 0.5], for v > 0.5 the largest
  /// member of [0.5, v]. Requires 0.5 in the set (HalfNotInSet), which also
  /// guarantees the result exists.
  Value nearest(Value v) const;

 private:
  explicit RestrictedValueSet(std::vector<Value> values) : values_(std::move(values)) {}
  std::vector<Value> values_;
};

/// The 11-point tenths grid {0, 0.1, ..., 1} every dataset column lives on.
RestrictedValueSet tenths_grid();

/// Maps a 1..k Likert answer onto the tenths grid: rescale to [0,1] and round
/// half up to the nearest tenth. Raises LikertOutOfRange.
Value map_likert(std::int32_t raw, std::int32_t scale_points);

}  // namespace epimine
