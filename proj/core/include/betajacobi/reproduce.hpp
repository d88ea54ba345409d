#pragma once

// Recomputation of the published relative-error tables against the exact
// oracle. The published numbers live in data/published_values.json, which
// is compiled into the library.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betajacobi/rational.hpp"
#include "betajacobi/real.hpp"
#include "betajacobi/zero_expansions.hpp"

namespace betajacobi {

enum class TableId { T1, T2, T3, T4, R2, R3, S31 };

inline constexpr TableId kAllTables[] = {TableId::T1, TableId::T2, TableId::T3, TableId::T4,
                                         TableId::R2, TableId::R3, TableId::S31};

const char* table_id_name(TableId id);
std::optional<TableId> parse_table_id(std::string_view text);

// Which expansion a table exercises.
enum class TableMethod { beta, b, epsilon, delta };
TableMethod table_method(TableId id);

struct PublishedCell {
  TableId table = TableId::T1;
  int n = 0;
  Rational alpha;
  Rational beta;
  std::optional<Rational> x;  // value tables only
  int k = 0;                  // zero tables only: index of z_k
  int order = 0;              // kmax (value tables) or number of terms (zero tables)
  std::string value_text;     // as printed, e.g. "0.28e-11"
  double value = 0.0;
  std::string source;
};

// Raw embedded JSON.
std::string_view published_values_json();

std::vector<PublishedCell> published_cells();
std::vector<PublishedCell> published_cells(TableId id);

// A cell passes if the computed relative error is within a factor of 10 of
// the published one, or both lie below the rounding floor 10^(2-digits).
bool cell_passes(double published, const Real& computed, int digits);

struct CellResult {
  PublishedCell cell;
  Real computed;
  bool pass = false;
};

struct TableReport {
  TableId table = TableId::T1;
  int digits = kDefaultWorkingDigits;
  std::vector<CellResult> cells;
  bool pass = false;
};

// Recomputes every published cell of `id`. Independent parameter groups run
// concurrently.
TableReport run_reproduce(TableId id, int digits = kDefaultWorkingDigits);

}  // namespace betajacobi
