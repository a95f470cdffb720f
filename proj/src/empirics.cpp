#include "tuplesieve/empirics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tuplesieve/asymptotics.hpp"
#include "tuplesieve/parallel.hpp"

namespace tuplesieve::empirics {

using asymptotics::binomial;
using asymptotics::factorial_rat;

// ---------------------------------------------------------------------------
// main-term coefficients (exact; the float paths scale them by S N (log R)^p)
// ---------------------------------------------------------------------------

MainTermCoeff thm5_coeff(int k, int l1, int l2) {
  return {binomial(l1 + l2, l1) / factorial_rat(k + l1 + l2), k + l1 + l2};
}

MainTermCoeff thm6a_coeff(int k, int l1, int l2) {
  return {binomial(l1 + l2 + 2, l1 + 1) / factorial_rat(k + l1 + l2 + 1),
          k + l1 + l2 + 1};
}

MainTermCoeff thm6b_coeff(int k, int l1, int l2) {
  return {binomial(l1 + l2, l1) / factorial_rat(k + l1 + l2), k + l1 + l2};
}

Thm7Coeffs thm7_coeffs(int k, int l1, int l2) {
  Thm7Coeffs c;
  c.c1 = binomial(l1 + l2 + 2, l1 + 1) / factorial_rat(k + l1 + l2 + 1);
  c.p1 = k + l1 + l2 + 1;
  c.c2 = Rational(2) * asymptotics::t_coeff(l1, l2) / factorial_rat(k + l1 + l2 + 2);
  c.p2 = k + l1 + l2 + 2;
  return c;
}

// ---------------------------------------------------------------------------
// varpi blocks
// ---------------------------------------------------------------------------

std::vector<double> varpi_block(uint64_t N, size_t length, const PrimeTable& t) {
  auto flags = prime_flags(N, length, t);
  std::vector<double> out(length, 0.0);
  for (size_t i = 0; i < length; ++i)
    if (flags[i]) out[i] = std::log(static_cast<double>(N + 1 + i));
  return out;
}

std::vector<double> varpi_conv_block(uint64_t N, size_t length, const PrimeTable& t) {
  std::vector<double> out(length, 0.0);
  for_two_prime_numbers(N, length, t, [&](uint64_t n, uint64_t p, uint64_t q) {
    double lp = std::log(static_cast<double>(p));
    out[n - N - 1] = (p == q) ? lp * lp : 2.0 * lp * std::log(static_cast<double>(q));
  });
  return out;
}

double c0_constant(uint64_t P, const PrimeTable& t) {
  // C0 = 2 log 2 - 2 gamma - 1 - 2 sum_p log p / (p(p-1)); the tail over
  // p > P is ~ int_P^inf dt/t^2 = 1/P by PNT, far below the targets here
  CompensatedSum s;
  for_primes_in(1, P, t, [&](uint64_t p) {
    double dp = static_cast<double>(p);
    s.add(std::log(dp) / (dp * (dp - 1.0)));
  });
  double tail = 1.0 / static_cast<double>(P);
  return 2.0 * std::log(2.0) - 2.0 * kEulerGamma - 1.0 - 2.0 * (s.value() + tail);
}

VarpiMeanResult check_varpi_mean(uint64_t N, const PrimeTable& t, uint64_t q) {
  double c0 = c0_constant(10'000'000, t);
  auto partials = map_blocks<double>(
      N, 2 * N, uint64_t{1} << 20, [&](size_t, uint64_t lo, uint64_t len) {
        CompensatedSum cs;
        for_two_prime_numbers(lo, static_cast<size_t>(len), t,
                              [&](uint64_t n, uint64_t p, uint64_t qq) {
                                if (q > 1 && std::gcd(n, q) != 1) return;
                                double lp = std::log(static_cast<double>(p));
                                cs.add(p == qq ? lp * lp
                                               : 2.0 * lp * std::log(static_cast<double>(qq)));
                              });
        return cs.value();
      });
  CompensatedSum total;
  for (double s : partials) total.add(s);

  double coprime_correction = 0.0;
  if (q > 1) {
    std::vector<uint32_t> ps;
    t.factor_distinct(q, ps);
    for (uint32_t p : ps)
      coprime_correction += std::log(static_cast<double>(p)) / static_cast<double>(p);
  }
  double predicted =
      static_cast<double>(N) *
      (std::log(static_cast<double>(N)) + c0 - 2.0 * coprime_correction);
  double lhs = total.value();
  return {lhs, predicted, std::abs(lhs - predicted) / std::abs(predicted), c0};
}

// ---------------------------------------------------------------------------
// theorem verifications
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kSingularTruncation = 1'000'000;

double singular_value(const Tuple& H, const PrimeTable& t) {
  uint64_t P = std::min<uint64_t>(kSingularTruncation, t.limit());
  return singular_series(H, P, t).value;
}

void materialize(weights::LambdaTable& lt) {
  for (uint64_t d = 1; d < lt.limit; ++d)
    if (lt.lam[d] != 0.0) lt.omega_for(d);
}

// sum over (N, 2N] of weight(n) * Lambda(l1) * Lambda(l2); with_weight = false
// skips the weight array entirely (unweighted product sum)
template <class WeightFill>
double sieve_product_sum(const Tuple& H, int l1, int l2, uint64_t N, double R,
                         const PrimeTable& t, double S, WeightFill&& weight_fill,
                         bool with_weight) {
  weights::LambdaTable lt1 = weights::build_lambda_table(H, l1, R, t, S);
  std::optional<weights::LambdaTable> lt2;
  materialize(lt1);
  if (l2 != l1) {
    lt2 = weights::build_lambda_table(H, l2, R, t, S);
    materialize(*lt2);
  }

  auto partials = map_blocks<double>(
      N, 2 * N, uint64_t{1} << 20, [&](size_t, uint64_t lo, uint64_t len) {
        auto b1 = weights::sieve_lambda_R(lo, static_cast<size_t>(len), lt1);
        const std::vector<double>* v2 = &b1.values;
        weights::SieveBlock b2;
        if (lt2) {
          b2 = weights::sieve_lambda_R(lo, static_cast<size_t>(len), *lt2);
          v2 = &b2.values;
        }
        CompensatedSum cs;
        if (!with_weight) {
          for (size_t i = 0; i < len; ++i) cs.add(b1.values[i] * (*v2)[i]);
        } else {
          std::vector<double> w(static_cast<size_t>(len), 0.0);
          weight_fill(lo, static_cast<size_t>(len), w);
          for (size_t i = 0; i < len; ++i)
            if (w[i] != 0.0) cs.add(w[i] * b1.values[i] * (*v2)[i]);
        }
        return cs.value();
      });
  CompensatedSum total;
  for (double s : partials) total.add(s);
  return total.value();
}

void require_admissible(const Tuple& H, const PrimeTable& t, const char* who) {
  if (!is_admissible(H, t))
    throw std::invalid_argument(std::string(who) + ": tuple is not admissible");
}

// ---- finite-R main terms from the diagonalization identities ----

// sum_{r < R} y_{r,l1} y_{r,l2} / f_1(r) with the concrete y
double diag_sum_plain(const Tuple& H, int l1, int l2, double R, const PrimeTable& t,
                      double S) {
  auto plain = weights::SieveFunctions::plain(H, t);
  CompensatedSum acc;
  for (uint64_t r = 1; static_cast<double>(r) < R; ++r) {
    if (!t.is_squarefree(r)) continue;
    double y1 = weights::y_paper(r, l1, R, S, t);
    double y2 = (l2 == l1) ? y1 : weights::y_paper(r, l2, R, S, t);
    acc.add(y1 * y2 / plain.f1(r).get_d());
  }
  return acc.value();
}

// sum'_{r < R} y*_{r,l1} y*_{r,l2} / f_1*(r); requires 0 in H
double diag_sum_star(const Tuple& H, int l1, int l2, double R, const PrimeTable& t,
                     double S) {
  auto star = weights::SieveFunctions::star(H, t);
  CompensatedSum acc;
  for (uint64_t r = 1; static_cast<double>(r) < R; ++r) {
    if (!t.is_squarefree(r) || !star.coprime_to_excluded(r)) continue;
    double y1 = weights::y_star(r, l1, H, R, t, S);
    double y2 = (l2 == l1) ? y1 : weights::y_star(r, l2, H, R, t, S);
    acc.add(y1 * y2 / star.f1(r).get_d());
  }
  return acc.value();
}

// sum'_{r < R} y+_{r,l1} y+_{r,l2} / f_1+(r); requires 0 not in H
double diag_sum_dagger(const Tuple& H, int l1, int l2, double R, const PrimeTable& t,
                       double S) {
  auto dag = weights::SieveFunctions::dagger(H, t);
  CompensatedSum acc;
  for (uint64_t r = 1; static_cast<double>(r) < R; ++r) {
    if (!t.is_squarefree(r) || !dag.coprime_to_excluded(r)) continue;
    double y1 = weights::y_dagger(r, l1, H, R, t, S);
    double y2 = (l2 == l1) ? y1 : weights::y_dagger(r, l2, H, R, t, S);
    acc.add(y1 * y2 / dag.f1(r).get_d());
  }
  return acc.value();
}

// The two-prime decomposition L = N (log N + C0) S1 - 2N S2 + 2N S3 with
//   U(p) = -sum_r (z1 y2 + z2 y1)/f_1* + (1 - 2 nu*_p/(p-1)) sum_r z1 z2/f_1*,
//   S3 = sum_{p<R} (log p / p) U(p),
//   S2 = sum_{p<R, p coprime to A} (log p / p) U(p) / f*(p).
void prime_sums_star(const Tuple& H, int l1, int l2, double R, const PrimeTable& t,
                     double S, double& S2, double& S3) {
  auto star = weights::SieveFunctions::star(H, t);
  CompensatedSum s2, s3;
  for (uint32_t p : t.primes()) {
    if (static_cast<double>(p) >= R) break;
    CompensatedSum sum_zy, sum_zz;
    for (uint64_t r = 1; static_cast<double>(r) * p < R; ++r) {
      if (!t.is_squarefree(r * p) || !star.coprime_to_excluded(r)) continue;
      double f1s = star.f1(r).get_d();
      double z1 = weights::z_star(r, p, l1, H, R, t, S);
      double z2 = (l2 == l1) ? z1 : weights::z_star(r, p, l2, H, R, t, S);
      double y1 = weights::y_star(r, l1, H, R, t, S);
      double y2 = (l2 == l1) ? y1 : weights::y_star(r, l2, H, R, t, S);
      sum_zy.add((z1 * y2 + z2 * y1) / f1s);
      sum_zz.add(z1 * z2 / f1s);
    }
    int nu_star = nu_p(H, p) - 1;
    double U = -sum_zy.value() +
               (1.0 - 2.0 * nu_star / (static_cast<double>(p) - 1.0)) * sum_zz.value();
    double lp_over_p = std::log(static_cast<double>(p)) / static_cast<double>(p);
    s3.add(lp_over_p * U);
    if (nu_star > 0) {
      double fstar_p = (static_cast<double>(p) - 1.0) / nu_star;
      s2.add(lp_over_p * U / fstar_p);
    }
  }
  S2 = s2.value();
  S3 = s3.value();
}

void require_r_range(double R, uint64_t N, const char* who) {
  if (R < 2.0 || R * R > static_cast<double>(N))
    throw std::invalid_argument(std::string(who) +
                                ": R outside the supported range (2 <= R <= sqrt(N))");
}

}  // namespace

SievedSum verify_thm5(const Tuple& H, int l1, int l2, uint64_t N, double R,
                      const PrimeTable& t) {
  require_admissible(H, t, "verify_thm5");
  require_r_range(R, N, "verify_thm5");
  double S = singular_value(H, t);
  SievedSum out{N, R, H, l1, l2, std::nullopt, 0, 0, 0};
  out.lhs = sieve_product_sum(H, l1, l2, N, R, t, S,
                              [](uint64_t, size_t, std::vector<double>&) {}, false);
  auto mc = thm5_coeff(H.k(), l1, l2);
  out.main_term = mc.coeff.get_d() * S * static_cast<double>(N) *
                  std::pow(std::log(R), mc.log_power);
  out.ratio = out.lhs / out.main_term;
  out.finite_main = static_cast<double>(N) * diag_sum_plain(H, l1, l2, R, t, S);
  out.finite_ratio = out.lhs / out.finite_main;
  return out;
}

SievedSum verify_thm6_part1(const Tuple& H, int64_t h0, int l1, int l2, uint64_t N,
                            double R, const PrimeTable& t) {
  if (!H.contains(h0))
    throw std::invalid_argument("verify_thm6_part1: h0 must lie in H (use part 2)");
  require_admissible(H, t, "verify_thm6_part1");
  require_r_range(R, N, "verify_thm6_part1");
  double S = singular_value(H, t);
  SievedSum out{N, R, H, l1, l2, h0, 0, 0, 0};
  out.lhs = sieve_product_sum(
      H, l1, l2, N, R, t, S,
      [&](uint64_t lo, size_t len, std::vector<double>& w) {
        // varpi(n + h0): sieve the shifted window rather than re-deriving
        uint64_t shifted = static_cast<uint64_t>(static_cast<int64_t>(lo) + h0);
        auto flags = prime_flags(shifted, len, t);
        for (size_t i = 0; i < len; ++i)
          if (flags[i]) w[i] = std::log(static_cast<double>(shifted + 1 + i));
      },
      true);
  auto mc = thm6a_coeff(H.k(), l1, l2);
  out.main_term = mc.coeff.get_d() * S * static_cast<double>(N) *
                  std::pow(std::log(R), mc.log_power);
  out.ratio = out.lhs / out.main_term;
  // translate so that 0 sits in the tuple; nu_p and S are shift-invariant
  Tuple Hz = H.translated(-h0);
  out.finite_main = static_cast<double>(N) * diag_sum_star(Hz, l1, l2, R, t, S);
  out.finite_ratio = out.lhs / out.finite_main;
  return out;
}

SievedSum verify_thm6_part2(const Tuple& H, int64_t h0, int l1, int l2, uint64_t N,
                            double R, const PrimeTable& t) {
  if (H.contains(h0))
    throw std::invalid_argument("verify_thm6_part2: h0 must lie outside H (use part 1)");
  if (l1 < 1 || l2 < 1)
    throw std::domain_error("verify_thm6_part2: l1, l2 >= 1 required");
  Tuple H0 = H.with(h0);
  require_admissible(H, t, "verify_thm6_part2");
  require_admissible(H0, t, "verify_thm6_part2 (H0)");
  require_r_range(R, N, "verify_thm6_part2");
  double S = singular_value(H, t);
  double S0 = singular_value(H0, t);
  SievedSum out{N, R, H, l1, l2, h0, 0, 0, 0};
  out.lhs = sieve_product_sum(
      H, l1, l2, N, R, t, S,
      [&](uint64_t lo, size_t len, std::vector<double>& w) {
        uint64_t shifted = static_cast<uint64_t>(static_cast<int64_t>(lo) + h0);
        auto flags = prime_flags(shifted, len, t);
        for (size_t i = 0; i < len; ++i)
          if (flags[i]) w[i] = std::log(static_cast<double>(shifted + 1 + i));
      },
      true);
  auto mc = thm6b_coeff(H.k(), l1, l2);
  out.main_term = mc.coeff.get_d() * S0 * static_cast<double>(N) *
                  std::pow(std::log(R), mc.log_power);
  out.ratio = out.lhs / out.main_term;
  Tuple Hz = H.translated(-h0);  // now 0 is the adjoined point
  out.finite_main = static_cast<double>(N) * diag_sum_dagger(Hz, l1, l2, R, t, S);
  out.finite_ratio = out.lhs / out.finite_main;
  return out;
}

SievedSum verify_thm7(const Tuple& H, int64_t h0, int l1, int l2, uint64_t N, double R,
                      const PrimeTable& t) {
  if (!H.contains(h0))
    throw std::invalid_argument("verify_thm7: h0 must lie in H");
  require_admissible(H, t, "verify_thm7");
  require_r_range(R, N, "verify_thm7");
  double S = singular_value(H, t);
  SievedSum out{N, R, H, l1, l2, h0, 0, 0, 0};
  out.lhs = sieve_product_sum(
      H, l1, l2, N, R, t, S,
      [&](uint64_t lo, size_t len, std::vector<double>& w) {
        uint64_t shifted = static_cast<uint64_t>(static_cast<int64_t>(lo) + h0);
        // prime squares included: they are part of the convolution's support
        for_two_prime_numbers(shifted, len, t, [&](uint64_t n, uint64_t p, uint64_t q) {
          double lp = std::log(static_cast<double>(p));
          w[n - shifted - 1] =
              (p == q) ? lp * lp : 2.0 * lp * std::log(static_cast<double>(q));
        });
      },
      true);
  auto mc = thm7_coeffs(H.k(), l1, l2);
  double logR = std::log(R);
  double logN = std::log(static_cast<double>(N));
  out.main_term = mc.c1.get_d() * S * static_cast<double>(N) * logN *
                      std::pow(logR, mc.p1) +
                  mc.c2.get_d() * S * static_cast<double>(N) * std::pow(logR, mc.p2);
  out.ratio = out.lhs / out.main_term;
  Tuple Hz = H.translated(-h0);
  double S1 = diag_sum_star(Hz, l1, l2, R, t, S);
  double S2 = 0, S3 = 0;
  prime_sums_star(Hz, l1, l2, R, t, S, S2, S3);
  double c0 = c0_constant(10'000'000, t);
  out.finite_main =
      static_cast<double>(N) * ((logN + c0) * S1 - 2.0 * S2 + 2.0 * S3);
  out.finite_ratio = out.lhs / out.finite_main;
  return out;
}

// ---------------------------------------------------------------------------
// error-term profiles (x = N only; the sup over x <= N is out of scope)
// ---------------------------------------------------------------------------

std::vector<ErrorTermRecord> bv_profile(uint64_t N, uint64_t Q, const PrimeTable& t) {
  if (Q < 1) throw std::invalid_argument("bv_profile: Q >= 1");
  std::vector<std::vector<double>> buckets(Q + 1);
  for (uint64_t q = 1; q <= Q; ++q) buckets[q].assign(q, 0.0);
  for_primes_in(N, 2 * N, t, [&](uint64_t p) {
    double lp = std::log(static_cast<double>(p));
    for (uint64_t q = 1; q <= Q; ++q) buckets[q][p % q] += lp;
  });
  std::vector<ErrorTermRecord> out;
  double cumulative = 0.0;
  for (uint64_t q = 1; q <= Q; ++q) {
    double expected = static_cast<double>(N) / static_cast<double>(t.totient(q));
    double worst = 0.0;
    for (uint64_t a = 0; a < q; ++a) {
      if (std::gcd(a == 0 ? q : a, q) != 1) continue;
      worst = std::max(worst, std::abs(buckets[q][a] - expected));
    }
    cumulative += worst;
    out.push_back({q, worst, cumulative});
  }
  return out;
}

std::vector<ErrorTermRecord> e2_error_profile(uint64_t N, uint64_t Q,
                                              const PrimeTable& t) {
  if (Q < 1) throw std::invalid_argument("e2_error_profile: Q >= 1");
  double c0 = c0_constant(10'000'000, t);
  std::vector<std::vector<double>> buckets(Q + 1);
  for (uint64_t q = 1; q <= Q; ++q) buckets[q].assign(q, 0.0);
  for_two_prime_numbers(N, static_cast<size_t>(N), t,
                        [&](uint64_t n, uint64_t p, uint64_t qq) {
                          double lp = std::log(static_cast<double>(p));
                          double v = (p == qq)
                                         ? lp * lp
                                         : 2.0 * lp * std::log(static_cast<double>(qq));
                          for (uint64_t q = 1; q <= Q; ++q) buckets[q][n % q] += v;
                        });
  std::vector<ErrorTermRecord> out;
  double cumulative = 0.0;
  double logN = std::log(static_cast<double>(N));
  std::vector<uint32_t> ps;
  for (uint64_t r = 1; r <= Q; ++r) {
    double correction = 0.0;
    ps.clear();
    t.factor_distinct(r, ps);
    for (uint32_t p : ps)
      correction += std::log(static_cast<double>(p)) / static_cast<double>(p);
    double expected = static_cast<double>(N) / static_cast<double>(t.totient(r)) *
                      (logN + c0 - 2.0 * correction);
    double worst = 0.0;
    for (uint64_t a = 0; a < r; ++a) {
      if (std::gcd(a == 0 ? r : a, r) != 1) continue;
      worst = std::max(worst, std::abs(buckets[r][a] - expected));
    }
    cumulative += worst;
    out.push_back({r, worst, cumulative});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gallagher average
// ---------------------------------------------------------------------------

GallagherResult gallagher_average(int k, int64_t h, uint64_t P, const PrimeTable& t) {
  if (k < 1 || h < k) throw std::invalid_argument("gallagher_average: need 1 <= k <= h");
  if (P > t.limit()) throw std::invalid_argument("gallagher_average: P beyond table");
  // S_P(H) = base * prod_{p <= h} (1 - nu_p/p)(1-1/p)^-k, where the base
  // collects all p in (h, P] (there nu_p = k since Delta's primes are < h)
  double base = 1.0;
  for (uint32_t p : t.primes()) {
    if (p > P) break;
    if (p <= static_cast<uint64_t>(h)) continue;
    double dp = static_cast<double>(p);
    base *= (1.0 - k / dp) * std::pow(1.0 - 1.0 / dp, -k);
  }
  std::vector<uint32_t> small_primes;
  for (uint32_t p : t.primes()) {
    if (p > std::min<uint64_t>(P, static_cast<uint64_t>(h))) break;
    small_primes.push_back(p);
  }

  CompensatedSum acc;
  // iterative k-subset enumeration of [1, h]
  std::vector<int64_t> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  for (;;) {
    double s = base;
    for (uint32_t p : small_primes) {
      int nu;
      if (p <= 64) {
        uint64_t mask = 0;
        for (int64_t e : idx) mask |= uint64_t{1} << (e % p);
        nu = std::popcount(mask);
      } else {
        std::vector<char> seen(p, 0);
        nu = 0;
        for (int64_t e : idx)
          if (!seen[e % p]) {
            seen[e % p] = 1;
            ++nu;
          }
      }
      double dp = static_cast<double>(p);
      s *= (1.0 - nu / dp) * std::pow(1.0 - 1.0 / dp, -k);
      if (s == 0.0) break;
    }
    acc.add(s);
    // advance combination
    int i = k - 1;
    while (i >= 0 && idx[i] == h - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  double predicted = std::pow(static_cast<double>(h), k);
  for (int i = 2; i <= k; ++i) predicted /= i;
  GallagherResult out{k, h, acc.value(), predicted, acc.value() / predicted};
  return out;
}

}  // namespace tuplesieve::empirics
