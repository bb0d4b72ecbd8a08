#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>

#include "epimine/dataset.hpp"
#include "support.hpp"

using namespace epimine;
using testsup::val;

TEST_CASE("csv parsing accepts the common shapes") {
  const Dataset plain = testsup::table1();
  CHECK(plain.schema == std::vector<std::string>{"Dw6", "Dw2", "Dw5", "Dw3"});
  REQUIRE(plain.size() == 3);
  CHECK(plain.items[0].id == "004");
  CHECK(plain.items[0].at("Dw6") == val("0.2"));
  CHECK(plain.items[2].at("Dw3") == val("0.2"));

  // empty first header cell also marks an id column
  const Dataset anon = parse_csv(",A,B\nr1,0.1,1\nr2,0,0.5\n");
  CHECK(anon.schema == std::vector<std::string>{"A", "B"});
  CHECK(anon.items[1].id == "r2");
  CHECK(anon.items[0].at("B") == Value::one());

  // no id column: rows are numbered from 1
  const Dataset bare = parse_csv("A,B\n0.1,1\n0,0.5\n");
  REQUIRE(bare.size() == 2);
  CHECK(bare.items[0].id == "1");
  CHECK(bare.items[1].id == "2");
  CHECK(bare.items[1].at("A") == Value::zero());

  // CRLF endings, a UTF-8 BOM and a missing final newline all pass
  const Dataset crlf = parse_csv("\xEF\xBB\xBFid,A\r\nx,0.7\r\ny,0.3");
  REQUIRE(crlf.size() == 2);
  CHECK(crlf.schema == std::vector<std::string>{"A"});
  CHECK(crlf.items[0].at("A") == val("0.7"));

  CHECK(parse_csv("ID,A\nx,0.7\n").items[0].id == "x");
}

TEST_CASE("csv parsing rejects malformed input with located errors") {
  CHECK_THROWS_WITH_AS(parse_csv(""), doctest::Contains("SchemaError"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("id,A\n"), doctest::Contains("EmptyDataset"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("id,A,A\nx,0.1,0.2\n"), doctest::Contains("SchemaError"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("id,\nx,0.1\n"), doctest::Contains("SchemaError"), Error);
  // ragged row
  CHECK_THROWS_WITH_AS(parse_csv("id,A,B\nx,0.1\n"), doctest::Contains("SchemaError"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("id,A\nx,0.1,0.2\n"), doctest::Contains("SchemaError"), Error);
  // unparseable cell, reported with its position
  CHECK_THROWS_WITH_AS(parse_csv("id,A\nx,zero\n"), doctest::Contains("line 2"), Error);
  // off the tenths grid
  CHECK_THROWS_WITH_AS(parse_csv("id,A\nx,0.25\n"), doctest::Contains("ValueOffGrid"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("id,A\nx,1.1\n"), doctest::Contains("SchemaError"), Error);
}

TEST_CASE("likert columns rescale onto the tenths grid") {
  const Dataset five = parse_csv("id,A,B\nx,1,5\ny,3,4\n", 5);
  CHECK(five.items[0].at("A") == Value::zero());
  CHECK(five.items[0].at("B") == Value::one());
  CHECK(five.items[1].at("A") == Value::half());
  CHECK(five.items[1].at("B") == val("0.8"));

  const Dataset seven = parse_csv("id,A\nx,2\n", 7);
  CHECK(seven.items[0].at("A") == val("0.2"));

  const Dataset eleven = parse_csv("id,A\nx,4\n", 11);
  CHECK(eleven.items[0].at("A") == val("0.3"));

  CHECK_THROWS_WITH_AS(parse_csv("id,A\nx,6\n", 5), doctest::Contains("LikertOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("id,A\nx,0\n", 5), doctest::Contains("LikertOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("id,A\nx,2.5\n", 5), doctest::Contains("SchemaError"), Error);
  CHECK_THROWS_WITH_AS(parse_csv("id,A\nx,99999999999999999999\n", 5),
                       doctest::Contains("SchemaError"), Error);
}

TEST_CASE("datasets round-trip through csv text") {
  const Dataset t1 = testsup::table1();
  const Dataset back = parse_csv(to_csv(t1));
  CHECK(back.schema == t1.schema);
  REQUIRE(back.size() == t1.size());
  for (std::size_t i = 0; i < t1.size(); ++i) {
    CHECK(back.items[i].id == t1.items[i].id);
    CHECK(back.items[i].values == t1.items[i].values);
  }
}

TEST_CASE("file ingestion matches the in-memory parser") {
  const std::string path = "ingest_roundtrip.csv";
  {
    std::ofstream out(path);
    out << to_csv(testsup::table2());
  }
  const Dataset loaded = ingest_csv(path);
  CHECK(loaded.schema == testsup::table2().schema);
  CHECK(loaded.size() == 2);
  std::remove(path.c_str());
  CHECK_THROWS_WITH_AS(ingest_csv("no_such_file.csv"), doctest::Contains("SchemaError"), Error);
}

TEST_CASE("splitting rounds half up and keeps row order") {
  std::string text = "id,A\n";
  for (int i = 0; i < 10; ++i) text += "r" + std::to_string(i) + ",0.5\n";
  const Dataset ten = parse_csv(text);

  const auto [train, test] = split(ten, Rational::of(4, 5), 7);
  CHECK(train.size() == 8);
  CHECK(test.size() == 2);
  CHECK(train.schema == ten.schema);
  CHECK(test.schema == ten.schema);

  auto ordered = [&](const Dataset& part) {
    std::vector<std::size_t> pos;
    for (const DataItem& item : part.items)
      for (std::size_t i = 0; i < ten.size(); ++i)
        if (ten.items[i].id == item.id) pos.push_back(i);
    return std::is_sorted(pos.begin(), pos.end()) && pos.size() == part.size();
  };
  CHECK(ordered(train));
  CHECK(ordered(test));

  // the two sides partition the rows
  std::set<std::string> ids;
  for (const DataItem& item : train.items) ids.insert(item.id);
  for (const DataItem& item : test.items) ids.insert(item.id);
  CHECK(ids.size() == 10);

  // same seed, same split; different seed, different membership eventually
  const auto [train2, test2] = split(ten, Rational::of(4, 5), 7);
  REQUIRE(train2.size() == train.size());
  for (std::size_t i = 0; i < train.size(); ++i)
    CHECK(train2.items[i].id == train.items[i].id);
  bool differs = false;
  for (std::uint64_t seed = 8; seed < 40 && !differs; ++seed) {
    const auto [t, _] = split(ten, Rational::of(4, 5), seed);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t.items[i].id != train.items[i].id) differs = true;
  }
  CHECK(differs);

  // 0.5 * 5 rows rounds half up to 3
  std::string five_text = "id,A\n";
  for (int i = 0; i < 5; ++i) five_text += "r" + std::to_string(i) + ",0.5\n";
  const Dataset five = parse_csv(five_text);
  CHECK(split(five, Rational::of(1, 2), 1).first.size() == 3);

  CHECK_THROWS_WITH_AS(split(ten, Rational::of(1, 1), 1), doctest::Contains("DatasetTooSmall"),
                       Error);
  CHECK_THROWS_WITH_AS(split(ten, Rational::of(1, 100), 1), doctest::Contains("DatasetTooSmall"),
                       Error);
  const Dataset one = parse_csv("id,A\nx,0.5\n");
  CHECK_THROWS_WITH_AS(split(one, Rational::of(1, 2), 1), doctest::Contains("DatasetTooSmall"),
                       Error);
}
