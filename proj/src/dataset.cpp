#include "epimine/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "epimine/rng.hpp"

namespace epimine {

Value DataItem::at(const std::string& arg) const {
  auto it = values.find(arg);
  if (it == values.end())
    raise(ErrorCode::MissingValue, "row " + id + " has no value for " + arg);
  return it->second;
}

std::optional<Value> DataItem::find(const std::string& arg) const {
  auto it = values.find(arg);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  for (std::string& s : cells) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  }
  return cells;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

Value parse_cell(const std::string& cell, std::optional<int> scale_points, std::size_t line_no,
                 const std::string& column) {
  const std::string where = "line " + std::to_string(line_no) + ", column " + column;
  if (cell.empty()) raise(ErrorCode::SchemaError, "empty cell at " + where);
  if (scale_points) {
    if (cell.size() > 9)
      raise(ErrorCode::SchemaError, "expected a scale answer, got '" + cell + "' at " + where);
    for (char c : cell)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        raise(ErrorCode::SchemaError, "expected a scale answer, got '" + cell + "' at " + where);
    return map_likert(std::stoi(cell), *scale_points);
  }
  Value v = [&] {
    try {
      return Value::parse(cell);
    } catch (const Error&) {
      raise(ErrorCode::SchemaError, "expected a belief degree, got '" + cell + "' at " + where);
    }
  }();
  if (!v.on_tenths_grid())
    raise(ErrorCode::ValueOffGrid, "'" + cell + "' is not on the 0.1 grid at " + where);
  return v;
}

}  // namespace

Dataset parse_csv(const std::string& text, std::optional<int> scale_points) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) raise(ErrorCode::SchemaError, "no header row");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

  std::vector<std::string> header = split_line(line);
  const bool has_id = header[0].empty() || lower(header[0]) == "id";
  const std::size_t first_col = has_id ? 1 : 0;
  Dataset data;
  for (std::size_t i = first_col; i < header.size(); ++i) {
    if (!valid_name(header[i]))
      raise(ErrorCode::SchemaError, "bad argument name '" + header[i] + "' in the header");
    if (std::count(data.schema.begin(), data.schema.end(), header[i]))
      raise(ErrorCode::SchemaError, "argument " + header[i] + " appears twice in the header");
    data.schema.push_back(header[i]);
  }
  if (data.schema.empty()) raise(ErrorCode::SchemaError, "header names no arguments");

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size())
      raise(ErrorCode::SchemaError, "line " + std::to_string(line_no) + " has " +
                                        std::to_string(cells.size()) + " cells, expected " +
                                        std::to_string(header.size()));
    DataItem item;
    item.id = has_id ? cells[0] : std::to_string(line_no - 1);
    for (std::size_t i = 0; i < data.schema.size(); ++i)
      item.values[data.schema[i]] =
          parse_cell(cells[first_col + i], scale_points, line_no, data.schema[i]);
    data.items.push_back(std::move(item));
  }
  if (data.items.empty()) raise(ErrorCode::EmptyDataset, "no data rows");
  return data;
}

Dataset ingest_csv(const std::string& path, std::optional<int> scale_points) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::SchemaError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), scale_points);
}

std::string to_csv(const Dataset& data) {
  std::string out = "id";
  for (const std::string& arg : data.schema) out += "," + arg;
  out += "\n";
  for (const DataItem& item : data.items) {
    out += item.id;
    for (const std::string& arg : data.schema) out += "," + item.at(arg).to_string();
    out += "\n";
  }
  return out;
}

std::pair<Dataset, Dataset> split(const Dataset& data, const Rational& ratio, std::uint64_t seed) {
  const std::int64_t n = static_cast<std::int64_t>(data.size());
  if (n < 2) raise(ErrorCode::DatasetTooSmall, "need at least 2 rows to split");
  // round(ratio * n) half up, exactly
  const std::int64_t train_n = (2 * ratio.num() * n + ratio.den()) / (2 * ratio.den());
  if (train_n < 1 || train_n >= n)
    raise(ErrorCode::DatasetTooSmall, "ratio " + ratio.to_string() + " leaves a side empty for " +
                                          std::to_string(n) + " rows");

  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);

  std::vector<std::size_t> train_idx(order.begin(), order.begin() + train_n);
  std::vector<std::size_t> test_idx(order.begin() + train_n, order.end());
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  Dataset train{data.schema, {}};
  Dataset test{data.schema, {}};
  for (std::size_t i : train_idx) train.items.push_back(data.items[i]);
  for (std::size_t i : test_idx) test.items.push_back(data.items[i]);
  return {std::move(train), std::move(test)};
}

}  // namespace epimine
