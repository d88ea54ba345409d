// Acceptance runner: one PASS/FAIL line per criterion, followed by details
// of anything that failed. Usage: acceptance [--criterion N] [--digits D]

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "betajacobi/reproduce.hpp"
#include "support/properties.hpp"

namespace {

using namespace betajacobi;
using betajacobi::testing::Check;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
};

Outcome from_check(const std::string& label, const Check& c) {
  Outcome o;
  o.ok = c.ok;
  o.notes.push_back(label + (c.ok ? ": ok" : ": " + c.detail));
  return o;
}

void merge(Outcome& into, const Outcome& part) {
  into.ok = into.ok && part.ok;
  into.notes.insert(into.notes.end(), part.notes.begin(), part.notes.end());
}

Outcome tables(std::initializer_list<TableId> ids, int digits) {
  Outcome o;
  for (const TableId id : ids) {
    const TableReport report = run_reproduce(id, digits);
    std::vector<std::string> mismatches;
    for (const auto& cell : report.cells) {
      if (cell.pass) continue;
      std::string where = std::string(table_id_name(id)) + " n=" + std::to_string(cell.cell.n) +
                          " beta=" + cell.cell.beta.to_string();
      if (cell.cell.x) where += " x=" + cell.cell.x->to_string();
      if (cell.cell.k > 0) where += " k=" + std::to_string(cell.cell.k);
      where += " order=" + std::to_string(cell.cell.order);
      mismatches.push_back("  mismatch " + where + ": published " + cell.cell.value_text + ", computed " +
                           cell.computed.to_string(3));
    }
    o.ok = o.ok && report.pass;
    o.notes.push_back(std::string(table_id_name(id)) + ": " +
                      std::to_string(report.cells.size() - mismatches.size()) + "/" +
                      std::to_string(report.cells.size()) + " cells within tolerance");
    o.notes.insert(o.notes.end(), mismatches.begin(), mismatches.end());
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome(int)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "exact identities (finite sums vs oracle, 50 random rational cases each)",
       [](int) {
         Outcome o = from_check("beta-scaled sum of Phi_k", betajacobi::testing::identity_beta_suite(20240601, 50, 8));
         merge(o, from_check("finite b form", betajacobi::testing::identity_b_suite(20240602, 50, 8)));
         return o;
       }},
      {2, "printed coefficient snapshots (symbolic equality)",
       [](int) {
         Outcome o;
         std::string bad;
         const auto results = betajacobi::testing::printed_snapshot_suite();
         for (const auto& r : results) {
           if (!r.ok) bad += " " + r.name;
         }
         o.ok = bad.empty();
         o.notes.push_back(std::to_string(results.size()) + " snapshots" + (bad.empty() ? ", all equal" : "; differ:" + bad));
         return o;
       }},
      {3, "T1 grid (beta expansion, x=1)", [](int d) { return tables({TableId::T1}, d); }},
      {4, "T3 grid (b expansion, x=1)", [](int d) { return tables({TableId::T3}, d); }},
      {5, "T2 and T4 grids (zeros, n=5)", [](int d) { return tables({TableId::T2, TableId::T4}, d); }},
      {6, "R2 list (x=1/100, beta=50)", [](int d) { return tables({TableId::R2}, d); }},
      {7, "R3 and S31 spot values (zeros, n=25 and 50)", [](int d) { return tables({TableId::R3, TableId::S31}, d); }},
      {8, "property suites",
       [](int d) {
         Outcome o = from_check("basis reduction", betajacobi::testing::basis_reduction_suite(7));
         merge(o, from_check("exp/log round trip", betajacobi::testing::exp_log_roundtrip_suite(11)));
         merge(o, from_check("Laguerre trace and interlacing", betajacobi::testing::laguerre_trace_interlacing_suite(d)));
         merge(o, from_check("symmetry", betajacobi::testing::symmetry_suite(13)));
         merge(o, from_check("delta beats epsilon", betajacobi::testing::delta_beats_epsilon_suite(d)));
         merge(o, from_check("error decay in beta", betajacobi::testing::error_decay_suite(d)));
         return o;
       }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  int digits = 32;
  app.add_option("--criterion", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
  app.add_option("--digits", digits, "Working digits")->check(CLI::Range(32, 1000));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(digits);
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << "s]\n";
    for (const auto& note : o.notes) std::cout << "      " << note << "\n";
  }
  return all ? 0 : 1;
}
