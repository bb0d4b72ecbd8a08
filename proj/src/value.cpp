#include "epimine/value.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace epimine {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingOne: return "MissingOne";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::HalfNotInSet: return "HalfNotInSet";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateConditionArgument: return "DuplicateConditionArgument";
    case ErrorCode::HeadInConditions: return "HeadInConditions";
    case ErrorCode::EmptyConditions: return "EmptyConditions";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ConflictingRelation: return "ConflictingRelation";
    case ErrorCode::EmptyRelationSet: return "EmptyRelationSet";
    case ErrorCode::UnknownArgument: return "UnknownArgument";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::MissingValue: return "MissingValue";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ValueOffGrid: return "ValueOffGrid";
    case ErrorCode::LikertOutOfRange: return "LikertOutOfRange";
    case ErrorCode::DatasetTooSmall: return "DatasetTooSmall";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "UnknownError";
}

std::string Rational::to_string() const {
  // Try to present num_/den_ as an exact decimal: possible iff den_ = 2^a 5^b.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

  // Scale to denominator 10^max(twos, fives).
  const int digits = twos > fives ? twos : fives;
  std::int64_t scaled = num_;
  for (int i = fives; i < digits; ++i) scaled *= 5;
  for (int i = twos; i < digits; ++i) scaled *= 2;

  const bool neg = scaled < 0;
  std::uint64_t mag = neg ? static_cast<std::uint64_t>(-scaled) : static_cast<std::uint64_t>(scaled);
  std::string body = std::to_string(mag);
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

Rational Rational::parse(const std::string& text) {
  const auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!digits(num) || !digits(den) || num.size() > 18 || den.size() > 18)
      raise(ErrorCode::SyntaxError, "bad rational '" + text + "'");
    return of(std::stoll(num), std::stoll(den));
  }
  const std::size_t dot = text.find('.');
  const std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !digits(whole)) ||
      (!frac.empty() && !digits(frac)) || whole.size() + frac.size() > 17)
    raise(ErrorCode::SyntaxError, "bad rational '" + text + "'");
  std::int64_t num = whole.empty() ? 0 : std::stoll(whole);
  std::int64_t den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return of(num, den);
}

Value Value::of_hundredths(std::int32_t num) {
  if (num < 0 || num > kDenominator)
    raise(ErrorCode::OutOfRange, "belief degree " + std::to_string(num) + "/100 outside [0,1]");
  return Value(num);
}

Value Value::of_tenths(std::int32_t tenths) { return of_hundredths(tenths * 10); }

Value Value::parse(const std::string& text) {
  const std::size_t dot = text.find('.');
  const std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || frac.size() > 2)
    raise(ErrorCode::SyntaxError, "bad belief degree '" + text + "'");
  for (char c : whole)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise(ErrorCode::SyntaxError, "bad belief degree '" + text + "'");
  for (char c : frac)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise(ErrorCode::SyntaxError, "bad belief degree '" + text + "'");
  std::int64_t num = whole.empty() ? 0 : std::stoll(whole);
  num *= kDenominator;
  if (frac.size() == 1) num += 10 * (frac[0] - '0');
  if (frac.size() == 2) num += 10 * (frac[0] - '0') + (frac[1] - '0');
  if (num > kDenominator)
    raise(ErrorCode::OutOfRange, "belief degree '" + text + "' outside [0,1]");
  return Value(static_cast<std::int32_t>(num));
}

Value operator+(Value a, Value b) {
  const std::int32_t sum = a.num_ + b.num_;
  return Value(sum > Value::kDenominator ? Value::kDenominator : sum);
}

Value operator-(Value a, Value b) {
  const std::int32_t diff = a.num_ - b.num_;
  return Value(diff < 0 ? 0 : diff);
}

std::string Value::to_string() const {
  if (num_ == kDenominator) return "1";
  if (num_ == 0) return "0";
  if (num_ % 10 == 0) return std::string("0.") + static_cast<char>('0' + num_ / 10);
  std::string out = "0.";
  out += static_cast<char>('0' + num_ / 10);
  out += static_cast<char>('0' + num_ % 10);
  return out;
}

RestrictedValueSet RestrictedValueSet::validate(std::vector<Value> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty() || values.back() != Value::one())
    raise(ErrorCode::MissingOne, "a restricted value set must contain 1");
  // Closure under bounded add/subtract. With 1 present, 1 - 1 forces 0 in,
  // so any failure names a concrete witnessing pair.
  for (Value a : values) {
    for (Value b : values) {
      for (Value probe : {a + b, a - b}) {
        if (!std::binary_search(values.begin(), values.end(), probe)) {
          raise(ErrorCode::ClosureViolation,
                "set lacks " + probe.to_string() + " reachable from " + a.to_string() +
                    " and " + b.to_string());
        }
      }
    }
  }
  return RestrictedValueSet(std::move(values));
}

bool RestrictedValueSet::contains(Value v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

Value RestrictedValueSet::nearest(Value v) const {
  if (!contains(Value::half()))
    raise(ErrorCode::HalfNotInSet, "nearest-value lookup needs 0.5 in the value set");
  if (v <= Value::half()) {
    // Smallest member of [v, 0.5]; 0.5 itself is present, so this exists.
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    assert(it != values_.end() && *it <= Value::half());
    return *it;
  }
  // Largest member of [0.5, v].
  auto it = std::upper_bound(values_.begin(), values_.end(), v);
  assert(it != values_.begin());
  --it;
  assert(*it >= Value::half());
  return *it;
}

RestrictedValueSet tenths_grid() {
  std::vector<Value> values;
  for (int t = 0; t <= 10; ++t) values.push_back(Value::of_tenths(t));
  return RestrictedValueSet::validate(std::move(values));
}

Value map_likert(std::int32_t raw, std::int32_t scale_points) {
  if (scale_points < 2)
    raise(ErrorCode::LikertOutOfRange, "scale needs at least 2 points");
  if (raw < 1 || raw > scale_points)
    raise(ErrorCode::LikertOutOfRange,
          "answer " + std::to_string(raw) + " outside 1.." + std::to_string(scale_points));
  // (raw-1)/(k-1) rescaled to tenths, rounding half up.
  const std::int32_t span = scale_points - 1;
  const std::int32_t tenths = (20 * (raw - 1) + span) / (2 * span);
  return Value::of_tenths(tenths);
}

}  // namespace epimine
