#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epimine/rational.hpp"
#include "epimine/value.hpp"

namespace epimine {

/// One survey row: a respondent id and their degree of belief in each
/// argument, always on the 11-point tenths grid.
struct DataItem {
  std::string id;
  std::map<std::string, Value> values;

  /// Raises MissingValue naming the argument and row.
  Value at(const std::string& arg) const;
  std::optional<Value> find(const std::string& arg) const;
};

struct Dataset {
  std::vector<std::string> schema;
  std::vector<DataItem> items;

  std::size_t size() const { return items.size(); }
};

/// Loads a CSV of belief degrees. The header row names the arguments; a
/// leading id column is recognized by an empty or "id" header cell. Without
/// scale_points, cells must be decimals already on the tenths grid
/// (ValueOffGrid otherwise); with scale_points, cells are 1..k Likert
/// integers rescaled onto the grid. Any malformed cell fails the load with
/// a row-numbered SchemaError.
Dataset ingest_csv(const std::string& path, std::optional<int> scale_points = std::nullopt);

/// Same parser over in-memory text, for tests and generated data.
Dataset parse_csv(const std::string& text, std::optional<int> scale_points = std::nullopt);

std::string to_csv(const Dataset& data);

/// Seed-deterministic split into round(ratio * n) training rows and the
/// rest, both in original row order. Raises DatasetTooSmall when either
/// side would be empty.
std::pair<Dataset, Dataset> split(const Dataset& data, const Rational& ratio, std::uint64_t seed);

}  // namespace epimine
