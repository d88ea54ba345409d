#include <doctest.h>

#include <map>

#include "betajacobi/reproduce.hpp"

using namespace betajacobi;

TEST_SUITE("reproduce") {
  TEST_CASE("embedded published values") {
    const auto cells = published_cells();
    CHECK(cells.size() == 103);
    std::map<TableId, int> counts;
    for (const auto& c : cells) ++counts[c.table];
    CHECK(counts[TableId::T1] == 20);
    CHECK(counts[TableId::T2] == 25);
    CHECK(counts[TableId::T3] == 20);
    CHECK(counts[TableId::T4] == 25);
    CHECK(counts[TableId::R2] == 5);
    CHECK(counts[TableId::R3] == 4);
    CHECK(counts[TableId::S31] == 4);
    const auto t1 = published_cells(TableId::T1);
    CHECK(t1.back().value_text == "0.28e-11");
    CHECK(t1.back().beta == Rational(1000));
  }

  TEST_CASE("table ids") {
    for (const TableId id : kAllTables) CHECK(parse_table_id(table_id_name(id)) == id);
    CHECK_FALSE(parse_table_id("T9").has_value());
  }

  TEST_CASE("cell pass rule") {
    const auto bits = digits_to_bits(32);
    CHECK(cell_passes(1e-5, Real(5e-5, bits), 32));
    CHECK(cell_passes(1e-5, Real(1.1e-6, bits), 32));
    CHECK_FALSE(cell_passes(1e-5, Real(2e-4, bits), 32));
    CHECK_FALSE(cell_passes(1e-5, Real(9e-7, bits), 32));
    // Both under the rounding floor 10^(2-digits).
    CHECK(cell_passes(1e-31, Real(1e-40, bits), 32));
    CHECK_FALSE(cell_passes(1e-29, Real(1e-40, bits), 32));
  }

  TEST_CASE("function-value tables reproduce") {
    for (const TableId id : {TableId::T1, TableId::T3}) {
      const TableReport report = run_reproduce(id, 32);
      CHECK(report.cells.size() == 20);
      for (const auto& cell : report.cells) {
        INFO(table_id_name(id) << " beta=" << cell.cell.beta << " kmax=" << cell.cell.order);
        CHECK(cell.pass);
      }
    }
  }

  TEST_CASE("reports are deterministic") {
    const TableReport a = run_reproduce(TableId::T4, 32);
    const TableReport b = run_reproduce(TableId::T4, 32);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) CHECK(a.cells[i].computed == b.cells[i].computed);
    CHECK_THROWS_AS(run_reproduce(TableId::T1, 10), std::invalid_argument);
  }
}
