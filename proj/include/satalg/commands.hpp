#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "satalg/models.hpp"
#include "satalg/transform.hpp"
#include "satalg/verify.hpp"

namespace satalg {

enum class Format { csv, json };

/// Table cell: null, integer, real, boolean or text.
using Cell = std::variant<std::monostate, long long, double, bool, std::string>;

struct Table {
  std::string command;
  std::string model;
  ParamList params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct CommandOptions {
  int grid = kDefaultGridCount;
  std::optional<Domain> domain;
  bool oracle = false;
  bool weighted = false;
  Tolerances tol;
};

struct LadderOp {
  Generator which = Generator::S;
  Direction direction = Direction::plus;
};

/// "S+,S-,T+,T-" in any order and length; whitespace around items is ignored.
std::vector<LadderOp> parse_ops(const std::string& text);

/// "2", "2,1" or "n=2,l=1". l defaults to 0.
QuantumNumbers parse_state(const std::string& text);

/// Rows (n, l, E_closed, E_fd, abs_diff, rel_diff). `oracle_ok` is false when
/// an oracle value misses the relative tolerance.
Table spectrum_table(const ModelPtr& model, const CommandOptions& options, bool* oracle_ok);

/// One row for the start state and one per operation, applied left to right.
Table ladder_table(const ModelPtr& model, const QuantumNumbers& start,
                   const std::vector<LadderOp>& ops, const CommandOptions& options);

/// (x, re_psi, d_psi) on the model's default grid. Kepler exports phi =
/// sinh(x) psi unless `weighted`, which gives psi itself.
Table export_table(const ModelPtr& model, const QuantumNumbers& state,
                   const CommandOptions& options);

std::string format_table(const Table& table, Format format);
std::string format_report(const RunReport& report, Format format);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double v);

}  // namespace satalg
