#include "properties.hpp"

#include <algorithm>

#include "betajacobi/expansion_b.hpp"
#include "betajacobi/expansion_beta.hpp"
#include "betajacobi/jacobi_oracle.hpp"
#include "betajacobi/laguerre.hpp"
#include "betajacobi/series.hpp"
#include "betajacobi/zero_expansions.hpp"
#include "printed.hpp"

namespace betajacobi::testing {

Rational RationalSampler::open_interval(const Rational& lo, const Rational& hi, long max_den) {
  std::uniform_int_distribution<long> den_dist(2, max_den);
  const long den = den_dist(rng_);
  std::uniform_int_distribution<long> num_dist(1, den - 1);
  return lo + (hi - lo) * Rational(num_dist(rng_), den);
}

Rational decimal_literal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational::parse(text);
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::string scale = "1" + std::string(text.size() - dot - 1, '0');
  return Rational::parse(digits) / Rational::parse(scale);
}

int RationalSampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

namespace {

std::string describe(const JacobiParams& p, const Rational& x) {
  return "n=" + std::to_string(p.n) + " alpha=" + p.alpha.to_string() + " beta=" + p.beta.to_string() +
         " x=" + x.to_string();
}

}  // namespace

Check identity_beta_suite(std::uint64_t seed, int samples, int max_n) {
  Check check;
  RationalSampler rs(seed);
  const CKTable ck = generate_ck(std::max(max_n, 1));
  for (int i = 0; i < samples; ++i) {
    const JacobiParams p{rs.integer(0, max_n), rs.open_interval(-1, 6), rs.open_interval(1, 60)};
    const Rational x = rs.open_interval(0, std::min(p.beta, p.b()));
    const Rational lhs = eval_phi_sum(ck, p, x, p.n);
    const Rational rhs = oracle_eval(p, Rational(1) - Rational(2) * x / p.beta);
    if (!(lhs == rhs)) check.fail(describe(p, x));
  }
  return check;
}

Check identity_b_suite(std::uint64_t seed, int samples, int max_n) {
  Check check;
  RationalSampler rs(seed);
  for (int i = 0; i < samples; ++i) {
    const JacobiParams p{rs.integer(0, max_n), rs.open_interval(-1, 6), rs.open_interval(1, 60)};
    const Rational x = rs.open_interval(0, std::min(p.beta, p.b()));
    const Rational lhs = eval_finite_b(p, x);
    const Rational rhs = oracle_eval(p, Rational(1) - Rational(2) * x / p.b());
    if (!(lhs == rhs)) check.fail(describe(p, x));
  }
  return check;
}

std::vector<SnapshotResult> printed_snapshot_suite() {
  std::vector<SnapshotResult> out;
  const CKTable ck = generate_ck(3);
  const DKTable dk = generate_dk(3);
  const AKTable ak = generate_ak(5);
  for (int j = 0; j <= 2; ++j) out.push_back({"c" + std::to_string(j), ck.c[j] == printed_c(j)});
  for (int j = 0; j <= 2; ++j) out.push_back({"d" + std::to_string(j), dk.d[j] == printed_d(j)});
  for (int j = 0; j <= 5; ++j) out.push_back({"a" + std::to_string(j), ak.a[j] == printed_a(j)});
  const auto uv = assemble_two_term_symbolic(ck.by_power);
  const auto yz = assemble_two_term_symbolic(dk.by_power);
  out.push_back({"u1", uv[1].first == printed_u1()});
  out.push_back({"v1", uv[1].second == printed_v1()});
  out.push_back({"y1", yz[1].first == printed_y1()});
  out.push_back({"z1", yz[1].second == printed_z1()});
  const auto eps = symbolic_zero_coefficients(ZeroMethod::epsilon, 3);
  const auto del = symbolic_zero_coefficients(ZeroMethod::delta, 3);
  for (int j = 1; j <= 3; ++j) out.push_back({"epsilon" + std::to_string(j), eps[j - 1] == printed_eps(j)});
  for (int j = 1; j <= 3; ++j) out.push_back({"delta" + std::to_string(j), del[j - 1] == printed_del(j)});
  return out;
}

Check basis_reduction_suite(std::uint64_t seed) {
  Check check;
  RationalSampler rs(seed);
  const auto table = basis_reduction_table(12);
  for (int trial = 0; trial < 40; ++trial) {
    const LaguerreParams p{rs.integer(1, 12), rs.open_interval(-1, 8)};
    const Rational x = rs.open_interval(-3, 30);
    Assignment at;
    at[static_cast<std::size_t>(Symbol::x)] = x;
    at[static_cast<std::size_t>(Symbol::n)] = Rational(p.n);
    at[static_cast<std::size_t>(Symbol::a)] = p.alpha;
    const Rational ln = laguerre_eval(p, x);
    const Rational ln1 = laguerre_eval(p.n - 1, p.alpha, x);
    const auto numeric = basis_reduction_numeric(p, p.n);
    for (int j = 0; j <= p.n; ++j) {
      const Rational lhs = pow(x, static_cast<unsigned>(j)) * laguerre_eval(p.n - j, p.alpha + Rational(j), x);
      const Rational sym = table[j].p.evaluate(at) * ln + table[j].q.evaluate(at) * ln1;
      const Rational num = numeric[j].p.evaluate(x) * ln + numeric[j].q.evaluate(x) * ln1;
      if (!(lhs == sym) || !(lhs == num)) {
        check.fail("n=" + std::to_string(p.n) + " j=" + std::to_string(j) + " alpha=" + p.alpha.to_string());
      }
    }
  }
  return check;
}

Check exp_log_roundtrip_suite(std::uint64_t seed) {
  Check check;
  RationalSampler rs(seed);
  constexpr int order = 12;
  for (int trial = 0; trial < 30; ++trial) {
    TruncatedSeries<Rational> f(SeriesParameter::inv_beta, order);
    for (int k = 1; k <= order; ++k) f[k] = rs.open_interval(-5, 5);
    if (!(series_log(series_exp(f)) == f)) check.fail("log(exp(f)) trial " + std::to_string(trial));
    TruncatedSeries<Rational> g = f;
    g[0] = Rational(1);
    if (!(series_exp(series_log(g)) == g)) check.fail("exp(log(g)) trial " + std::to_string(trial));
    if (!(series_inverse_unit(g) * g == TruncatedSeries<Rational>::constant(SeriesParameter::inv_beta, order, 1))) {
      check.fail("inverse trial " + std::to_string(trial));
    }
  }
  // Polynomial coefficients: f = x s t + n t^2 + ...
  TruncatedSeries<MultiPoly> f(SeriesParameter::inv_b, 6);
  f[1] = sym_x() * sym_s();
  f[2] = sym_n() - sym_x().pow(2);
  f[3] = MultiPoly(Rational(1, 3)) * sym_s().pow(3);
  f[5] = sym_b();
  if (!(series_log(series_exp(f)) == f)) check.fail("symbolic log(exp(f))");
  return check;
}

Check laguerre_trace_interlacing_suite(int digits) {
  Check check;
  const Real tolerance = pow10(2 - digits, digits_to_bits(digits + 4));
  for (const Rational& alpha : {Rational(-1, 2), Rational(0), Rational(1, 3), Rational(7, 2)}) {
    for (const int n : {1, 2, 3, 5, 8, 12, 25, 50}) {
      const LaguerreParams p{n, alpha};
      const auto set = laguerre_zeros(p, digits);
      const std::string tag = "n=" + std::to_string(n) + " alpha=" + alpha.to_string();
      Real sum(0L, digits_to_bits(digits + 4));
      for (const auto& z : set.zeros) sum += z;
      const Rational trace = Rational(n) * (Rational(n) + alpha);
      if (relative_error(sum, trace, digits + 4) > tolerance) check.fail("trace " + tag);
      for (const auto& [lo, hi] : set.brackets) {
        if (laguerre_eval(p, lo).sign() * laguerre_eval(p, hi).sign() >= 0) check.fail("bracket " + tag);
      }
      if (n >= 2) {
        const auto prev = laguerre_zeros(LaguerreParams{n - 1, alpha}, digits);
        for (int i = 0; i + 1 < n; ++i) {
          if (!(set.zeros[i] < prev.zeros[i] && prev.zeros[i] < set.zeros[i + 1])) check.fail("interlacing " + tag);
        }
      }
    }
  }
  return check;
}

Check symmetry_suite(std::uint64_t seed) {
  Check check;
  RationalSampler rs(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const JacobiParams p{rs.integer(0, 15), rs.open_interval(-1, 10), rs.open_interval(-1, 120)};
    const Rational z = rs.open_interval(-2, 2);
    const Rational value = oracle_eval(p, z);
    const SymmetryImage image = symmetry_map(p, z);
    const Rational mapped = Rational(image.sign) * oracle_eval(image.params, image.z);
    const Rational sign = p.n % 2 == 0 ? Rational(1) : Rational(-1);
    const Rational direct = sign * oracle_eval(JacobiParams{p.n, p.beta, p.alpha}, -z);
    if (!(value == mapped) || !(value == direct)) check.fail(describe(p, z));
  }
  return check;
}

Check delta_beats_epsilon_suite(int digits) {
  Check check;
  const JacobiParams p{5, Rational(1, 3), Rational(100)};
  const auto truth = oracle_zeros(p, digits);
  const ZeroExpansion eps(p.n, p.alpha, ZeroMethod::epsilon, 5, digits);
  const ZeroExpansion del(p.n, p.alpha, ZeroMethod::delta, 5, digits);
  for (int terms = 1; terms <= 5; ++terms) {
    for (int k = 1; k <= p.n; ++k) {
      const Rational exact = truth[k - 1].midpoint.to_rational();
      const Real e = relative_error(eps.approximate(p.beta, k, terms).z, exact, digits);
      const Real d = relative_error(del.approximate(p.beta, k, terms).z, exact, digits);
      if (!(d < e)) check.fail("k=" + std::to_string(k) + " terms=" + std::to_string(terms));
    }
  }
  return check;
}

Check error_decay_suite(int digits) {
  Check check;
  // Function values: n=10, alpha=1/3, x=1, both scalings.
  const Rational alpha(1, 3);
  const Rational x(1);
  const int n = 10;
  const UVTable uv = compute_uv(generate_ck(5), n, alpha);
  const YZTable yz = compute_yz(generate_dk(5), n, alpha);
  const std::vector<Rational> betas{50, 100, 500, 1000};
  for (int kmax = 0; kmax <= 5; ++kmax) {
    Rational prev_beta;
    Rational prev_b;
    for (std::size_t i = 0; i < betas.size(); ++i) {
      const JacobiParams p{n, alpha, betas[i]};
      const Rational eb = relative_error_exact(eval_expansion_beta(uv, p.beta, x, kmax),
                                               oracle_eval(p, Rational(1) - Rational(2) * x / p.beta));
      const Rational ebb = relative_error_exact(eval_expansion_b(yz, p.beta, x, kmax),
                                                oracle_eval(p, Rational(1) - Rational(2) * x / p.b()));
      if (i > 0 && !(eb < prev_beta)) check.fail("beta-scaling kmax=" + std::to_string(kmax));
      if (i > 0 && !(ebb < prev_b)) check.fail("b-scaling kmax=" + std::to_string(kmax));
      prev_beta = eb;
      prev_b = ebb;
    }
  }
  // Zeros: n=5, alpha=1/3.
  const std::vector<Rational> zero_betas{100, 200, 400, 800};
  std::vector<std::vector<CertifiedZero>> truth;
  for (const auto& beta : zero_betas) truth.push_back(oracle_zeros(JacobiParams{5, alpha, beta}, digits));
  for (const ZeroMethod method : {ZeroMethod::epsilon, ZeroMethod::delta}) {
    const ZeroExpansion expansion(5, alpha, method, 5, digits);
    for (int terms = 1; terms <= 5; ++terms) {
      for (int k = 1; k <= 5; ++k) {
        Real prev;
        for (std::size_t i = 0; i < zero_betas.size(); ++i) {
          const Real e = relative_error(expansion.approximate(zero_betas[i], k, terms).z,
                                        truth[i][k - 1].midpoint.to_rational(), digits);
          if (i > 0 && !(e < prev)) {
            check.fail(std::string(zero_method_name(method)) + " k=" + std::to_string(k) +
                       " terms=" + std::to_string(terms));
          }
          prev = e;
        }
      }
    }
  }
  return check;
}

}  // namespace betajacobi::testing
