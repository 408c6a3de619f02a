#include <doctest.h>

#include <string>

#include "satalg/commands.hpp"
#include "satalg/error.hpp"

using namespace satalg;

TEST_CASE("parse_ops") {
  const auto ops = parse_ops(" S+, T- ,S-,T+");
  REQUIRE(ops.size() == 4);
  CHECK(ops[0].which == Generator::S);
  CHECK(ops[0].direction == Direction::plus);
  CHECK(ops[1].which == Generator::T);
  CHECK(ops[1].direction == Direction::minus);
  CHECK_THROWS_AS(parse_ops("S*"), Error);
  CHECK_THROWS_AS(parse_ops(""), Error);
  CHECK_THROWS_AS(parse_ops("S+,,T-"), Error);
}

TEST_CASE("parse_state") {
  CHECK(parse_state("2") == QuantumNumbers{2, 0});
  CHECK(parse_state("2,1") == QuantumNumbers{2, 1});
  CHECK(parse_state("n=2,l=1") == QuantumNumbers{2, 1});
  CHECK_THROWS_AS(parse_state("two"), Error);
  CHECK_THROWS_AS(parse_state("2,"), Error);
}

TEST_CASE("format_number round-trips") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-3.125) == "-3.125");
  CHECK(std::stod(format_number(0.1)) == 0.1);
  CHECK(std::stod(format_number(2.196428571428569)) == 2.196428571428569);
}

TEST_CASE("spectrum table") {
  const ModelPtr rm = make_rosen_morse({3.0, 6.0, 1.0, 1.0, 1.0});
  CommandOptions opt;
  opt.oracle = true;
  bool ok = false;
  const Table t = spectrum_table(rm, opt, &ok);
  CHECK(ok);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.columns.front() == "n");
  CHECK(std::get<double>(t.rows[0][2]) == -5.0);

  const std::string csv = format_table(t, Format::csv);
  CHECK(csv.rfind("n,l,E_closed,E_fd,abs_diff,rel_diff\n", 0) == 0);
  const std::string json = format_table(t, Format::json);
  CHECK(json.find("\"command\"") != std::string::npos);

  opt.oracle = false;
  const Table plain = spectrum_table(rm, opt, &ok);
  CHECK(std::holds_alternative<std::monostate>(plain.rows[0][3]));
}

TEST_CASE("ladder table") {
  const ModelPtr k = make_kepler({6.25, 1.0});
  const Table t = ladder_table(k, {2, 1}, parse_ops("S+"), CommandOptions{});
  REQUIRE(t.rows.size() == 2);
  const std::string csv = format_table(t, Format::csv);
  CHECK(csv.find("start") != std::string::npos);
  CHECK(csv.find("8.25") != std::string::npos);
}

TEST_CASE("export table") {
  const ModelPtr rm = make_rosen_morse({3.0, 6.0, 1.0, 1.0, 1.0});
  CommandOptions opt;
  opt.grid = 101;
  const Table t = export_table(rm, {0, 0}, opt);
  CHECK(t.rows.size() == 101);
  CHECK(t.columns.size() == 3);
}
