#include "app.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "betajacobi/expansion_b.hpp"
#include "betajacobi/expansion_beta.hpp"
#include "betajacobi/jacobi_oracle.hpp"
#include "betajacobi/laguerre.hpp"
#include "betajacobi/rational.hpp"
#include "betajacobi/real.hpp"
#include "betajacobi/reproduce.hpp"
#include "betajacobi/zero_expansions.hpp"

namespace betajacobi::app {

namespace {

using Json = nlohmann::ordered_json;

// Flat rows for csv/text; json is built separately so that nested fields keep their shape.
struct Rows {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Rows& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string render_text(const Rows& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    out << s << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return out.str();
}

std::string render(Format format, const Json& json, const Rows& rows) {
  switch (format) {
    case Format::json:
      return json.dump(2) + "\n";
    case Format::csv:
      return render_csv(rows);
    case Format::text:
      return render_text(rows);
  }
  return {};
}

std::string decimal(const Rational& r, int digits) { return Real(r, digits_to_bits(digits)).to_string(digits); }
std::string decimal(const Real& r, int digits) { return r.to_string(digits); }

void check_digits(int digits) {
  if (digits < 16) throw std::invalid_argument("--digits must be at least 16");
}

JacobiParams jacobi_params(const RunConfig& c) {
  JacobiParams params{c.n, Rational::parse(c.alpha), Rational::parse(c.beta)};
  params.validate();
  return params;
}

Rational scale_of(const JacobiParams& params, const std::string& scaling) {
  if (scaling == "beta") return params.beta;
  if (scaling == "b") return params.b();
  throw std::invalid_argument("--argument-scaling must be beta or b");
}

// x from --x, or from --z through z = 1 - 2x/scale.
Rational resolve_x(const RunConfig& c, const Rational& scale) {
  if (c.x) return Rational::parse(*c.x);
  if (c.z) return scale * (Rational(1) - Rational::parse(*c.z)) / Rational(2);
  throw std::invalid_argument("one of --x or --z is required");
}

Json params_json(const RunConfig& c) {
  Json p;
  p["n"] = c.n;
  p["alpha"] = Rational::parse(c.alpha).to_string();
  p["beta"] = Rational::parse(c.beta).to_string();
  return p;
}

}  // namespace

std::optional<Format> parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  return std::nullopt;
}

RunResult run_eval(const RunConfig& c) {
  check_digits(c.digits);
  if (c.kmax < 0) throw std::invalid_argument("--kmax must be non-negative");
  const JacobiParams params = jacobi_params(c);
  const std::string& method = c.method.empty() ? std::string("beta") : c.method;

  // Argument scaling: beta and b methods fix it; finite and oracle follow --argument-scaling,
  // except that finite defaults to b.
  std::string scaling = c.argument_scaling;
  if (method == "beta") scaling = "beta";
  else if (method == "b") scaling = "b";
  else if (method != "finite" && method != "oracle")
    throw std::invalid_argument("eval: --method must be one of beta, b, finite, oracle");

  const Rational scale = scale_of(params, scaling);
  Rational value;
  Rational x;
  Rational z;
  if (method == "oracle" && c.z && !c.x) {
    z = Rational::parse(*c.z);
    x = scale * (Rational(1) - z) / Rational(2);
  } else {
    x = resolve_x(c, scale);
    z = Rational(1) - Rational(2) * x / scale;
  }

  const int order = std::max(c.kmax, 1);
  if (method == "beta") {
    value = eval_expansion_beta(compute_uv(generate_ck(order), params.n, params.alpha), params.beta, x, c.kmax);
  } else if (method == "b") {
    value = eval_expansion_b(compute_yz(generate_dk(order), params.n, params.alpha), params.beta, x, c.kmax);
  } else if (method == "finite") {
    if (scaling == "b") {
      value = eval_finite_b(params, x);
    } else {
      check_argument_range(params.beta, x, false, "eval");
      value = params.n == 0 ? Rational(1) : eval_phi_sum(generate_ck(params.n), params, x, params.n);
    }
  } else {
    value = oracle_eval(params, z);
  }

  std::optional<Rational> oracle;
  std::optional<Rational> error;
  bool pass = true;
  if (c.compare_oracle) {
    oracle = oracle_eval(params, z);
    if (oracle->is_zero()) throw std::domain_error("eval: oracle value is zero, relative error undefined");
    error = relative_error_exact(value, *oracle);
    // Only the finite forms are identities; truncated expansions have no pass threshold.
    if (method == "finite" || method == "oracle") pass = error->is_zero();
  }

  Json j;
  Json p = params_json(c);
  p["x"] = x.to_string();
  p["z"] = z.to_string();
  p["argument_scaling"] = scaling;
  j["params"] = p;
  j["method"] = method;
  j["kmax"] = c.kmax;
  j["value"] = decimal(value, c.digits);
  j["oracle"] = oracle ? Json(decimal(*oracle, c.digits)) : Json(nullptr);
  j["rel_error"] = error ? Json(decimal(*error, c.digits)) : Json(nullptr);

  Rows rows;
  rows.columns = {"n", "alpha", "beta", "x", "z", "method", "kmax", "value", "oracle", "rel_error"};
  rows.rows.push_back({std::to_string(c.n), p["alpha"], p["beta"], p["x"], p["z"], method, std::to_string(c.kmax),
                       cell_text(j["value"]), cell_text(j["oracle"]), cell_text(j["rel_error"])});
  return {pass ? 0 : 1, render(c.format, j, rows)};
}

RunResult run_zeros(const RunConfig& c) {
  check_digits(c.digits);
  const JacobiParams params = jacobi_params(c);
  if (params.n < 1) throw std::invalid_argument("zeros: --n must be at least 1");
  const std::string& method = c.method.empty() ? std::string("delta") : c.method;
  if (method != "epsilon" && method != "delta" && method != "oracle")
    throw std::invalid_argument("zeros: --method must be one of epsilon, delta, oracle");
  if (c.terms < 0) throw std::invalid_argument("--terms must be non-negative");

  const bool want_oracle = c.compare_oracle || method == "oracle";
  std::vector<CertifiedZero> truth;
  if (want_oracle) truth = oracle_zeros(params, c.digits);

  Json list = Json::array();
  Rows rows;
  rows.columns = {"k", "z", "x", "oracle_z", "rel_error"};
  const int bits = digits_to_bits(c.digits);
  for (int k = 1; k <= params.n; ++k) {
    Json entry;
    entry["k"] = k;
    entry["z"] = nullptr;
    entry["x"] = nullptr;
    entry["oracle_z"] = nullptr;
    entry["rel_error"] = nullptr;
    list.push_back(entry);
  }
  if (method == "oracle") {
    const Real scale(scale_of(params, c.argument_scaling), bits);
    for (const auto& t : truth) {
      Json& entry = list[static_cast<std::size_t>(t.index - 1)];
      entry["z"] = decimal(t.midpoint, c.digits);
      entry["x"] = decimal(scale * (Real(1L, bits) - t.midpoint) / Real(2L, bits), c.digits);
      entry["oracle_z"] = entry["z"];
      entry["rel_error"] = decimal(Real(0L, bits), c.digits);
    }
  } else {
    const ZeroMethod m = method == "epsilon" ? ZeroMethod::epsilon : ZeroMethod::delta;
    const auto approx = all_zeros(params, m, c.terms, c.digits);
    for (const auto& a : approx) {
      Json& entry = list[static_cast<std::size_t>(a.index - 1)];
      entry["z"] = decimal(a.z, c.digits);
      entry["x"] = decimal(a.x, c.digits);
      if (want_oracle) {
        const CertifiedZero& t = truth[static_cast<std::size_t>(a.index - 1)];
        entry["oracle_z"] = decimal(t.midpoint, c.digits);
        entry["rel_error"] = decimal(relative_error(a.z, t.midpoint.to_rational(), c.digits), c.digits);
      }
    }
  }
  for (const auto& e : list) {
    rows.rows.push_back({std::to_string(e["k"].get<int>()), cell_text(e["z"]), cell_text(e["x"]),
                         cell_text(e["oracle_z"]), cell_text(e["rel_error"])});
  }
  return {0, render(c.format, list, rows)};
}

RunResult run_laguerre_zeros(const RunConfig& c) {
  check_digits(c.digits);
  const LaguerreParams params{c.n, Rational::parse(c.alpha)};
  params.validate();
  if (params.n < 1) throw std::invalid_argument("laguerre-zeros: --n must be at least 1");
  const LaguerreZeroSet set = laguerre_zeros(params, c.digits);
  Json list = Json::array();
  Rows rows;
  rows.columns = {"k", "ell"};
  for (std::size_t i = 0; i < set.zeros.size(); ++i) {
    Json entry;
    entry["k"] = static_cast<int>(i + 1);
    entry["ell"] = decimal(set.zeros[i], c.digits);
    rows.rows.push_back({std::to_string(i + 1), entry["ell"]});
    list.push_back(entry);
  }
  return {0, render(c.format, list, rows)};
}

RunResult run_oracle(const RunConfig& c) {
  check_digits(c.digits);
  const JacobiParams params = jacobi_params(c);
  Rational z;
  if (c.z) {
    z = Rational::parse(*c.z);
  } else {
    const Rational scale = scale_of(params, c.argument_scaling);
    z = Rational(1) - Rational(2) * resolve_x(c, scale) / scale;
  }
  const Rational value = oracle_eval(params, z);
  Json j;
  j["params"] = params_json(c);
  j["z"] = z.to_string();
  j["value"] = decimal(value, c.digits);
  j["exact"] = value.to_string();
  Rows rows;
  rows.columns = {"n", "alpha", "beta", "z", "value", "exact"};
  rows.rows.push_back({std::to_string(c.n), j["params"]["alpha"], j["params"]["beta"], j["z"], j["value"], j["exact"]});
  return {0, render(c.format, j, rows)};
}

RunResult run_reproduce_tables(const RunConfig& c) {
  check_digits(c.digits);
  std::vector<TableId> ids;
  if (c.table) {
    const auto id = parse_table_id(*c.table);
    if (!id) throw std::invalid_argument("unknown table " + *c.table);
    ids.push_back(*id);
  } else {
    ids.assign(std::begin(kAllTables), std::end(kAllTables));
  }

  Json list = Json::array();
  Rows rows;
  rows.columns = {"table", "n", "alpha", "beta", "x", "k", "order", "published", "computed", "pass"};
  bool all_pass = true;
  for (const TableId id : ids) {
    const TableReport report = run_reproduce(id, c.digits);
    all_pass = all_pass && report.pass;
    Json t;
    t["table"] = table_id_name(id);
    t["digits"] = report.digits;
    t["pass"] = report.pass;
    Json cells = Json::array();
    for (const auto& r : report.cells) {
      Json coords;
      coords["n"] = r.cell.n;
      coords["alpha"] = r.cell.alpha.to_string();
      coords["beta"] = r.cell.beta.to_string();
      if (r.cell.x) coords["x"] = r.cell.x->to_string();
      if (r.cell.k > 0) coords["k"] = r.cell.k;
      coords[r.cell.x ? "kmax" : "terms"] = r.cell.order;
      Json cell;
      cell["coords"] = coords;
      cell["published"] = r.cell.value_text;
      cell["computed"] = decimal(r.computed, c.digits);
      cell["pass"] = r.pass;
      cell["source"] = r.cell.source;
      cells.push_back(cell);
      rows.rows.push_back({table_id_name(id), std::to_string(r.cell.n), coords["alpha"], coords["beta"],
                           r.cell.x ? r.cell.x->to_string() : "", r.cell.k > 0 ? std::to_string(r.cell.k) : "",
                           std::to_string(r.cell.order), r.cell.value_text, cell["computed"],
                           r.pass ? "PASS" : "FAIL"});
    }
    t["cells"] = cells;
    list.push_back(t);
  }
  return {all_pass ? 0 : 1, render(c.format, list, rows)};
}

RunResult dispatch(const RunConfig& c) {
  if (c.subcommand == "eval") return run_eval(c);
  if (c.subcommand == "zeros") return run_zeros(c);
  if (c.subcommand == "laguerre-zeros") return run_laguerre_zeros(c);
  if (c.subcommand == "oracle") return run_oracle(c);
  if (c.subcommand == "reproduce") return run_reproduce_tables(c);
  throw std::invalid_argument("unknown subcommand " + c.subcommand);
}

}  // namespace betajacobi::app
