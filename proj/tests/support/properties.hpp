#pragma once

// Property checks shared by the unit tests and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "betajacobi/rational.hpp"

namespace betajacobi::testing {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  // Uniform-ish rational in (lo, hi) with denominator up to max_den.
  Rational open_interval(const Rational& lo, const Rational& hi, long max_den = 97);
  int integer(int lo, int hi);

 private:
  std::mt19937_64 rng_;
};

// Exact value of a plain decimal literal such as "-12.5078".
Rational decimal_literal(const std::string& text);

// Sum_{k<=n} Phi_k / beta^k against the oracle at 1 - 2x/beta, exactly.
Check identity_beta_suite(std::uint64_t seed, int samples, int max_n);
// eval_finite_b against the oracle at 1 - 2x/b, exactly.
Check identity_b_suite(std::uint64_t seed, int samples, int max_n);

struct SnapshotResult {
  std::string name;
  bool ok = false;
};
std::vector<SnapshotResult> printed_snapshot_suite();

Check basis_reduction_suite(std::uint64_t seed);
Check exp_log_roundtrip_suite(std::uint64_t seed);
Check laguerre_trace_interlacing_suite(int digits);
Check symmetry_suite(std::uint64_t seed);
Check delta_beats_epsilon_suite(int digits);
Check error_decay_suite(int digits);

}  // namespace betajacobi::testing
