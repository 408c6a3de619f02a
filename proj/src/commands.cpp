#include "satalg/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <regex>

#include <json.hpp>

#include "satalg/error.hpp"
#include "satalg/numerics.hpp"
#include "coefficients.hpp"

namespace satalg {

namespace {

using ojson = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double param(const ParamList& params, const std::string& name) {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  return std::nan("");
}

// Columns a ladder row reports for each family.
std::vector<std::string> ladder_param_names(ModelKind kind) {
  switch (kind) {
    case ModelKind::gmp: return {"b", "k"};
    case ModelKind::rosen_morse: return {"B"};
    case ModelKind::kepler: return {"nu", "R"};
  }
  return {};
}

std::vector<Cell> ladder_params(ModelKind kind, const ParamList& params) {
  std::vector<Cell> out;
  if (params.empty()) {
    out.resize(ladder_param_names(kind).size());
    return out;
  }
  if (kind == ModelKind::gmp) {
    const double a = param(params, "a"), hbar = param(params, "hbar");
    out.emplace_back(param(params, "b"));
    out.emplace_back(2.0 * param(params, "mu") * param(params, "D") / (a * a * hbar * hbar));
  } else {
    for (const std::string& name : ladder_param_names(kind)) out.emplace_back(param(params, name));
  }
  return out;
}

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string q = "\"";
      for (char ch : v) {
        if (ch == '"') q += '"';
        q += ch;
      }
      return q + "\"";
    }
  };
  return std::visit(Visitor{}, c);
}

ojson json_cell(const Cell& c) {
  struct Visitor {
    ojson operator()(std::monostate) const { return nullptr; }
    ojson operator()(long long v) const { return v; }
    ojson operator()(double v) const { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }
    ojson operator()(bool v) const { return v; }
    ojson operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

ojson json_number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::vector<LadderOp> parse_ops(const std::string& text) {
  std::vector<LadderOp> ops;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = trim(text.substr(start, comma - start));
    LadderOp op;
    if (item.size() != 2 || (item[0] != 'S' && item[0] != 'T') ||
        (item[1] != '+' && item[1] != '-')) {
      throw Error(ErrorCode::parse,
                  "cannot parse ladder op '" + item + "' (expected S+, S-, T+ or T-)");
    }
    op.which = item[0] == 'S' ? Generator::S : Generator::T;
    op.direction = item[1] == '+' ? Direction::plus : Direction::minus;
    ops.push_back(op);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ops;
}

QuantumNumbers parse_state(const std::string& text) {
  static const std::regex plain(R"(\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?)");
  static const std::regex named(R"(\s*n\s*=\s*(-?\d+)\s*(?:,\s*l\s*=\s*(-?\d+)\s*)?)");
  std::smatch m;
  if (std::regex_match(text, m, plain) || std::regex_match(text, m, named)) {
    QuantumNumbers qn;
    qn.n = std::stoi(m[1].str());
    qn.l = m[2].matched ? std::stoi(m[2].str()) : 0;
    return qn;
  }
  throw Error(ErrorCode::parse, "cannot parse state '" + text + "' (expected n, n,l or n=..,l=..)");
}

Table spectrum_table(const ModelPtr& model, const CommandOptions& options, bool* oracle_ok) {
  Table t;
  t.command = "spectrum";
  t.model = model->name();
  t.params = model->params();
  t.columns = {"n", "l", "E_closed", "E_fd", "abs_diff", "rel_diff"};
  bool ok = true;
  std::vector<std::pair<QuantumNumbers, double>> fd;
  if (options.oracle) {
    for (const OracleProblem& op : model->oracle_problems(options.grid, options.domain)) {
      const auto eig = fd_eigensolve_extrapolated(op.potential, op.grid,
                                                  static_cast<int>(op.states.size()), op.kinetic);
      for (std::size_t i = 0; i < op.states.size(); ++i) {
        fd.emplace_back(op.states[i], op.energy_scale * eig[i] + op.energy_shift);
      }
    }
  }
  for (const QuantumNumbers& qn : model->states()) {
    const double e = model->energy(qn);
    std::vector<Cell> row{static_cast<long long>(qn.n), static_cast<long long>(qn.l), e};
    const auto it = std::find_if(fd.begin(), fd.end(), [&](const auto& p) { return p.first == qn; });
    if (it == fd.end()) {
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}});
    } else {
      const double rel = relative_difference(e, it->second, 0.0);
      ok = ok && rel <= options.tol.oracle;
      row.insert(row.end(), {it->second, std::abs(e - it->second), rel});
    }
    t.rows.push_back(std::move(row));
  }
  if (oracle_ok) *oracle_ok = ok;
  return t;
}

Table ladder_table(const ModelPtr& model, const QuantumNumbers& start,
                   const std::vector<LadderOp>& ops, const CommandOptions& options) {
  if (!model->admissible(start)) {
    throw Error(ErrorCode::out_of_range, "start state " + model->state_name(start) +
                                             " is not an admissible state of the model");
  }
  const ModelKind kind = model->kind();
  Table t;
  t.command = "ladder";
  t.model = model->name();
  t.params = model->params();
  t.columns = {"step", "op", "s", "t", "q"};
  for (const std::string& p : ladder_param_names(kind)) t.columns.push_back(p);
  t.columns.insert(t.columns.end(),
                   {"l", "measured", "predicted", "normalizable", "note"});

  const double alpha = model->type_e_problem().alpha;
  ModelPtr cur = model;
  QuantumNumbers qn = start;
  StateLabels st = model->labels(start);
  bool live = true;

  auto emit = [&](long long step, const std::string& op, const ParamList& params, Cell l,
                  Cell measured, Cell predicted, bool normalizable, const std::string& note) {
    std::vector<Cell> row{step, op, st.s, st.t, alpha * st.s * st.t};
    for (Cell& c : ladder_params(kind, params)) row.push_back(std::move(c));
    row.insert(row.end(), {std::move(l), std::move(measured), std::move(predicted), normalizable,
                           note});
    t.rows.push_back(std::move(row));
  };
  emit(0, "start", model->params(), model->type_e_l(start), Cell{}, Cell{}, true, "");

  const Grid grid = model->check_grid(options.grid, options.domain);
  long long step = 0;
  for (const LadderOp& op : ops) {
    ++step;
    const std::string name = std::string(to_string(op.which)) +
                             (op.direction == Direction::plus ? "+" : "-");
    (op.which == Generator::S ? st.s : st.t) += direction_sign(op.direction);
    if (!live) {
      emit(step, name, {}, Cell{}, Cell{}, std::string("n/a"), false,
           "chain has left the normalizable states");
      continue;
    }
    const detail::Prediction pred = detail::predict(*cur, qn, op.which, op.direction);
    const detail::CoefficientMeasurement cm =
        detail::measure(cur, qn, op.which, op.direction, cur->check_grid(grid.count, options.domain));
    Cell predicted = std::string("n/a");
    if (pred.available && pred.value) predicted = std::abs(*pred.value);
    const bool zero = pred.available && pred.value && std::abs(*pred.value) == 0.0;

    Cell measured;
    std::string note;
    if (cm.against_target) {
      measured = cm.shift.magnitude;
    } else if (zero || cm.shift.magnitude <= options.tol.identity) {
      measured = cm.shift.magnitude;
      note = "chain-top: image annihilated";
    } else {
      note = cm.target.note.empty() ? "target not normalizable" : cm.target.note;
    }
    if (!pred.available && note.empty()) note = "closed form unavailable";

    Cell l;
    if (cm.target.model) l = cm.target.model->type_e_l(cm.target.qn);
    emit(step, name, cm.target.params, std::move(l), std::move(measured), std::move(predicted),
         cm.target.normalizable, note);
    if (cm.target.model && cm.target.normalizable) {
      cur = cm.target.model;
      qn = cm.target.qn;
    } else {
      live = false;
    }
  }
  return t;
}

Table export_table(const ModelPtr& model, const QuantumNumbers& state,
                   const CommandOptions& options) {
  if (!model->admissible(state)) {
    throw Error(ErrorCode::out_of_range,
                "state " + model->state_name(state) + " is not an admissible state of the model");
  }
  Table t;
  t.command = "export";
  t.model = model->name();
  t.params = model->params();
  t.columns = {"x", "re_psi", "d_psi"};
  const bool phi = model->kind() == ModelKind::kepler && !options.weighted;
  const WavefunctionPtr f = phi ? model->type_e_function(state) : model->eigenfunction(state);
  const Grid grid = model->default_grid(options.grid, options.domain);
  for (int i = 0; i < grid.count; ++i) {
    const double x = grid.x(i);
    const RealJet j = f->jet(x);
    t.rows.push_back({x, j.value(), j.derivative(1)});
  }
  return t;
}

std::string format_table(const Table& table, Format format) {
  if (format == Format::json) {
    ojson doc;
    doc["command"] = table.command;
    doc["model"] = table.model;
    ojson params = ojson::object();
    for (const auto& [k, v] : table.params) params[k] = json_number(v);
    doc["params"] = params;
    ojson rows = ojson::array();
    for (const auto& row : table.rows) {
      ojson r = ojson::object();
      for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = json_cell(row[i]);
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_report(const RunReport& report, Format format) {
  if (format == Format::csv) {
    Table t;
    t.columns = {"id", "group", "measured", "relation", "bound", "pass", "skipped", "note",
                 "description"};
    for (const Check& c : report.checks) {
      t.rows.push_back({c.id, c.group, std::isfinite(c.measured) ? Cell{c.measured} : Cell{},
                        c.relation, c.bound, c.pass, c.skipped, c.note, c.description});
    }
    return format_table(t, Format::csv);
  }
  ojson doc;
  doc["suite"] = report.suite;
  doc["model"] = report.model;
  doc["overall"] = report.overall;
  doc["timing_seconds"] = report.seconds;
  ojson checks = ojson::array();
  for (const Check& c : report.checks) {
    ojson j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["group"] = c.group;
    j["measured"] = json_number(c.measured);
    j["relation"] = c.relation;
    j["bound"] = c.bound;
    j["pass"] = c.pass;
    if (c.skipped) j["skipped"] = true;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace satalg
