// arith.hpp
//
// Shared arithmetic layer: least-prime-factor sieve, segmented prime
// iteration, Mobius/totient/omega on sieved range, exact rationals
// (GMP-backed), compensated floating summation, and the beta-integral
// cross check
//
//   int_1^x (log x/u)^(a-1) (log u)^(b-1) du/u
//     = (log x)^(a+b-1) Gamma(a)Gamma(b)/Gamma(a+b).
//
// PrimeTable is immutable after construction and safe to share across
// threads. All free functions here are pure.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tuplesieve {

using Rational = mpq_class;
using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// PrimeTable: primes <= limit plus a least-prime-factor array, so that any
// 2 <= n <= limit factors in O(omega(n)) divisions. The lpf array (rather
// than a plain bitset) is what keeps the weight computations cheap: every
// squarefree d < R is factored over and over.
// ---------------------------------------------------------------------------
class PrimeTable {
 public:
  explicit PrimeTable(uint64_t limit);

  uint64_t limit() const noexcept { return limit_; }
  const std::vector<uint32_t>& primes() const noexcept { return primes_; }
  uint64_t prime_count() const noexcept { return primes_.size(); }

  // least prime factor of n, 2 <= n <= limit
  uint32_t least_factor(uint64_t n) const {
    check_range(n);
    return lpf_[n];
  }

  bool is_prime(uint64_t n) const {
    if (n < 2) return false;
    check_range(n);
    return lpf_[n] == n;
  }

  // mu(n): 0 iff n has a square factor
  int mobius(uint64_t n) const;

  // Euler phi
  uint64_t totient(uint64_t n) const;

  // number of distinct prime factors
  int omega(uint64_t n) const;

  bool is_squarefree(uint64_t n) const { return mobius(n) != 0; }

  // distinct prime factors of n in ascending order, appended to out
  void factor_distinct(uint64_t n, std::vector<uint32_t>& out) const;

 private:
  void check_range(uint64_t n) const {
    if (n == 0 || n > limit_)
      throw std::invalid_argument("PrimeTable: argument " + std::to_string(n) +
                                  " outside table limit " + std::to_string(limit_));
  }

  uint64_t limit_;
  std::vector<uint32_t> lpf_;
  std::vector<uint32_t> primes_;
};

// ---------------------------------------------------------------------------
// Segmented prime machinery for windows far beyond table.limit().
// Requires table.limit()^2 >= hi.
// ---------------------------------------------------------------------------

// flags[i] != 0  iff  lo + 1 + i is prime, for i in [0, len)
std::vector<uint8_t> prime_flags(uint64_t lo, size_t len, const PrimeTable& t);

// Calls fn(n, p, q) for every n in (lo, lo+len] that is a product of exactly
// two primes p <= q (p == q at prime squares), by dividing out sieve primes
// <= sqrt(lo+len). Needs table.limit()^2 >= lo+len. The internal segment
// size does not affect the output.
void for_two_prime_numbers(uint64_t lo, size_t len, const PrimeTable& t,
                           const std::function<void(uint64_t, uint64_t, uint64_t)>& fn,
                           size_t segment = size_t{1} << 19);

// calls fn(p) for every prime p with lo < p <= hi, ascending
template <class F>
void for_primes_in(uint64_t lo, uint64_t hi, const PrimeTable& t, F&& fn) {
  if (hi <= lo) return;
  constexpr uint64_t kBlock = 1 << 20;
  for (uint64_t start = lo; start < hi; start += kBlock) {
    uint64_t len = std::min<uint64_t>(kBlock, hi - start);
    auto flags = prime_flags(start, static_cast<size_t>(len), t);
    for (uint64_t i = 0; i < len; ++i)
      if (flags[i]) fn(start + 1 + i);
  }
}

// ---------------------------------------------------------------------------
// Compensated (Neumaier) summation. Fixed left-to-right order; block
// reductions elsewhere in the library always combine partial sums in block
// order, so results are independent of the worker count.
// ---------------------------------------------------------------------------
class CompensatedSum {
 public:
  void add(double x) {
    double t = s_ + x;
    if (std::abs(s_) >= std::abs(x))
      c_ += (s_ - t) + x;
    else
      c_ += (x - t) + s_;
    s_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.s_);
    c_ += other.c_;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

double sum_compensated(std::span<const double> xs);

// ---------------------------------------------------------------------------
// Beta-integral check. closed_form uses Gamma (std::tgamma; relative error
// well below the 1e-10 target for a,b in [1, ~30]); quadrature integrates
// (log x/u)^(a-1) (log u)^(b-1) du/u over [1,x] by double-exponential
// (tanh-sinh) rule with level refinement until convergence.
// ---------------------------------------------------------------------------
struct BetaIntegralCheck {
  double closed_form;
  double quadrature;
};

BetaIntegralCheck beta_integral_check(double a, double b, double x);

// Euler-Mascheroni, used by the varpi*varpi mean-value constant
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240;

}  // namespace tuplesieve
