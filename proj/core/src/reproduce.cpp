#include "betajacobi/reproduce.hpp"

#include <json.hpp>

#include <cmath>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "betajacobi/expansion_b.hpp"
#include "betajacobi/expansion_beta.hpp"
#include "betajacobi/jacobi_oracle.hpp"

namespace betajacobi {

namespace {

PublishedCell parse_cell(const nlohmann::json& record) {
  PublishedCell cell;
  const auto id = parse_table_id(record.at("table").get<std::string>());
  if (!id) throw std::runtime_error("published values: unknown table " + record.at("table").dump());
  cell.table = *id;
  const auto& coords = record.at("coords");
  cell.n = coords.at("n").get<int>();
  cell.alpha = Rational::parse(coords.at("alpha").get<std::string>());
  cell.beta = Rational::parse(coords.at("beta").get<std::string>());
  if (coords.contains("x")) cell.x = Rational::parse(coords.at("x").get<std::string>());
  if (coords.contains("k")) cell.k = coords.at("k").get<int>();
  cell.order = coords.contains("kmax") ? coords.at("kmax").get<int>() : coords.at("terms").get<int>();
  cell.value_text = record.at("value").get<std::string>();
  cell.value = std::stod(cell.value_text);
  cell.source = record.at("source").get<std::string>();
  return cell;
}

// Relative error of a truncated value expansion, computed exactly.
Real value_cell_error(const PublishedCell& cell, int digits) {
  const JacobiParams params{cell.n, cell.alpha, cell.beta};
  const Rational& x = *cell.x;
  const int order = cell.order;
  Rational approx;
  Rational exact;
  if (table_method(cell.table) == TableMethod::beta) {
    approx = eval_expansion_beta(compute_uv(generate_ck(order), cell.n, cell.alpha), cell.beta, x, order);
    exact = oracle_eval(params, Rational(1) - Rational(2) * x / cell.beta);
  } else {
    approx = eval_expansion_b(compute_yz(generate_dk(order), cell.n, cell.alpha), cell.beta, x, order);
    exact = oracle_eval(params, Rational(1) - Rational(2) * x / params.b());
  }
  return Real(relative_error_exact(approx, exact), digits_to_bits(digits));
}

using ZeroGroupKey = std::tuple<int, Rational, Rational>;

std::vector<CellResult> zero_group(const std::vector<PublishedCell>& cells, ZeroMethod method, int digits) {
  const PublishedCell& first = cells.front();
  int order = 1;
  for (const auto& c : cells) order = std::max(order, c.order);
  const JacobiParams params{first.n, first.alpha, first.beta};
  const ZeroExpansion expansion(first.n, first.alpha, method, order, digits);
  const auto truth = oracle_zeros(params, digits);
  std::vector<CellResult> out;
  for (const auto& cell : cells) {
    const ZeroApprox approx = expansion.approximate(cell.beta, cell.k, cell.order);
    const Rational exact = truth.at(static_cast<std::size_t>(cell.k - 1)).midpoint.to_rational();
    Real error = relative_error(approx.z, exact, digits);
    const bool pass = cell_passes(cell.value, error, digits);
    out.push_back({cell, std::move(error), pass});
  }
  return out;
}

}  // namespace

const char* table_id_name(TableId id) {
  switch (id) {
    case TableId::T1:
      return "T1";
    case TableId::T2:
      return "T2";
    case TableId::T3:
      return "T3";
    case TableId::T4:
      return "T4";
    case TableId::R2:
      return "R2";
    case TableId::R3:
      return "R3";
    case TableId::S31:
      return "S31";
  }
  return "?";
}

std::optional<TableId> parse_table_id(std::string_view text) {
  for (const TableId id : kAllTables) {
    if (text == table_id_name(id)) return id;
  }
  return std::nullopt;
}

TableMethod table_method(TableId id) {
  switch (id) {
    case TableId::T1:
    case TableId::R2:
      return TableMethod::beta;
    case TableId::T3:
      return TableMethod::b;
    case TableId::T2:
    case TableId::R3:
      return TableMethod::epsilon;
    case TableId::T4:
    case TableId::S31:
      return TableMethod::delta;
  }
  return TableMethod::beta;
}

std::vector<PublishedCell> published_cells() {
  const auto doc = nlohmann::json::parse(published_values_json());
  std::vector<PublishedCell> out;
  for (const auto& record : doc.at("cells")) out.push_back(parse_cell(record));
  return out;
}

std::vector<PublishedCell> published_cells(TableId id) {
  std::vector<PublishedCell> out;
  for (auto& cell : published_cells()) {
    if (cell.table == id) out.push_back(std::move(cell));
  }
  return out;
}

bool cell_passes(double published, const Real& computed, int digits) {
  const double value = computed.to_double();
  const double floor = std::pow(10.0, 2 - digits);
  if (published < floor && value < floor) return true;
  return value >= published / 10.0 && value <= published * 10.0;
}

TableReport run_reproduce(TableId id, int digits) {
  if (digits < 16) throw std::invalid_argument("run_reproduce: at least 16 digits required");
  const auto cells = published_cells(id);
  TableReport report;
  report.table = id;
  report.digits = digits;

  const TableMethod method = table_method(id);
  if (method == TableMethod::beta || method == TableMethod::b) {
    std::vector<std::future<CellResult>> jobs;
    for (const auto& cell : cells) {
      jobs.push_back(std::async(std::launch::async, [cell, digits] {
        Real error = value_cell_error(cell, digits);
        const bool pass = cell_passes(cell.value, error, digits);
        return CellResult{cell, std::move(error), pass};
      }));
    }
    for (auto& job : jobs) report.cells.push_back(job.get());
  } else {
    const ZeroMethod zm = method == TableMethod::epsilon ? ZeroMethod::epsilon : ZeroMethod::delta;
    std::map<ZeroGroupKey, std::vector<PublishedCell>> groups;
    for (const auto& cell : cells) groups[{cell.n, cell.alpha, cell.beta}].push_back(cell);
    std::vector<std::future<std::vector<CellResult>>> jobs;
    for (const auto& [key, group] : groups) {
      jobs.push_back(std::async(std::launch::async, [group = group, zm, digits] { return zero_group(group, zm, digits); }));
    }
    for (auto& job : jobs) {
      for (auto& r : job.get()) report.cells.push_back(std::move(r));
    }
  }
  report.pass = !report.cells.empty();
  for (const auto& r : report.cells) report.pass = report.pass && r.pass;
  return report;
}

}  // namespace betajacobi
