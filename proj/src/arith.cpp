#include "tuplesieve/arith.hpp"

#include <algorithm>
#include <cmath>

namespace tuplesieve {

PrimeTable::PrimeTable(uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
  if (limit > 0xFFFFFFFFull)
    throw std::invalid_argument("PrimeTable: limit exceeds the 32-bit factor range");
  lpf_.assign(limit + 1, 0);
  // linear sieve: each composite is struck exactly once by its least prime
  for (uint64_t n = 2; n <= limit; ++n) {
    if (lpf_[n] == 0) {
      lpf_[n] = static_cast<uint32_t>(n);
      primes_.push_back(static_cast<uint32_t>(n));
    }
    for (uint32_t p : primes_) {
      if (p > lpf_[n] || p * n > limit) break;
      lpf_[p * n] = p;
    }
  }
}

int PrimeTable::mobius(uint64_t n) const {
  check_range(n);
  int sign = 1;
  while (n > 1) {
    uint32_t p = lpf_[n];
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

uint64_t PrimeTable::totient(uint64_t n) const {
  check_range(n);
  uint64_t result = n;
  while (n > 1) {
    uint32_t p = lpf_[n];
    result -= result / p;
    while (n % p == 0) n /= p;
  }
  return result;
}

int PrimeTable::omega(uint64_t n) const {
  check_range(n);
  int count = 0;
  while (n > 1) {
    uint32_t p = lpf_[n];
    ++count;
    while (n % p == 0) n /= p;
  }
  return count;
}

void PrimeTable::factor_distinct(uint64_t n, std::vector<uint32_t>& out) const {
  check_range(n);
  while (n > 1) {
    uint32_t p = lpf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
}

std::vector<uint8_t> prime_flags(uint64_t lo, size_t len, const PrimeTable& t) {
  uint64_t hi = lo + len;
  if (t.limit() * t.limit() < hi)
    throw std::invalid_argument("prime_flags: table too small for window");
  std::vector<uint8_t> flags(len, 1);
  for (uint64_t i = 0; i < len && lo + 1 + i < 2; ++i) flags[i] = 0;
  for (uint32_t p : t.primes()) {
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    if (p2 > hi) break;
    // first multiple of p in (lo, hi] that is >= p^2
    uint64_t start = std::max<uint64_t>(p2, ((lo / p) + 1) * p);
    for (uint64_t m = start; m <= hi; m += p) flags[m - lo - 1] = 0;
  }
  return flags;
}

double sum_compensated(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

void for_two_prime_numbers(uint64_t lo, size_t len, const PrimeTable& t,
                           const std::function<void(uint64_t, uint64_t, uint64_t)>& fn,
                           size_t segment) {
  uint64_t hi = lo + len;
  if (t.limit() * t.limit() < hi)
    throw std::invalid_argument("for_two_prime_numbers: table too small for window");
  const size_t kBlock = std::max<size_t>(segment, 16);
  std::vector<uint64_t> rem(std::min(len, kBlock));
  std::vector<uint32_t> p1(rem.size()), p2(rem.size());
  std::vector<uint8_t> e1(rem.size()), e2(rem.size()), many(rem.size());

  for (uint64_t start = lo; start < hi; start += kBlock) {
    size_t blen = static_cast<size_t>(std::min<uint64_t>(kBlock, hi - start));
    for (size_t i = 0; i < blen; ++i) {
      rem[i] = start + 1 + i;
      p1[i] = p2[i] = 0;
      e1[i] = e2[i] = many[i] = 0;
    }
    for (uint32_t p : t.primes()) {
      uint64_t pp = static_cast<uint64_t>(p) * p;
      if (pp > start + blen) break;
      uint64_t first = ((start / p) + 1) * p;  // first multiple in (start, start+blen]
      for (uint64_t m = first; m <= start + blen; m += p) {
        size_t i = static_cast<size_t>(m - start - 1);
        uint8_t e = 0;
        while (rem[i] % p == 0) {
          rem[i] /= p;
          ++e;
        }
        if (p1[i] == 0) {
          p1[i] = p;
          e1[i] = e;
        } else if (p2[i] == 0) {
          p2[i] = p;
          e2[i] = e;
        } else {
          many[i] = 1;
        }
      }
    }
    for (size_t i = 0; i < blen; ++i) {
      if (many[i]) continue;
      uint64_t n = start + 1 + i;
      uint64_t r = rem[i];
      if (p2[i] != 0) {
        // two small primes; need both simple and nothing left over
        if (e1[i] == 1 && e2[i] == 1 && r == 1) fn(n, p1[i], p2[i]);
      } else if (p1[i] != 0) {
        if (e1[i] == 1 && r > 1)
          fn(n, p1[i], r);  // r is prime: it exceeds sqrt(n)
        else if (e1[i] == 2 && r == 1)
          fn(n, p1[i], p1[i]);
      }
      // p1 == 0: n is prime or 1
    }
  }
}

// ---------------------------------------------------------------------------
// tanh-sinh quadrature of f over (lo, hi); refines the mesh until two
// successive levels agree to reltol or the level cap is reached.
// ---------------------------------------------------------------------------
namespace {

template <class F>
double tanh_sinh(F&& f, double lo, double hi, double reltol) {
  const double c = 0.5 * (hi + lo);
  const double s = 0.5 * (hi - lo);
  const double half_pi = 1.57079632679489661923;
  double best = 0.0;
  double prev = 0.0;
  for (int level = 2; level <= 12; ++level) {
    double h = 1.0 / static_cast<double>(1u << level);
    CompensatedSum acc;
    // |t| beyond ~4.3 gives weights below double underflow territory
    long kmax = static_cast<long>(4.3 / h);
    for (long k = -kmax; k <= kmax; ++k) {
      double t = k * h;
      double u = half_pi * std::sinh(t);
      double x = std::tanh(u);
      double w = half_pi * std::cosh(t) / (std::cosh(u) * std::cosh(u));
      double node = c + s * x;
      if (node <= lo || node >= hi) continue;
      double v = f(node);
      if (std::isfinite(v)) acc.add(w * v);
    }
    double integral = acc.value() * s * h;
    if (level > 3 && std::abs(integral - prev) <=
                         reltol * std::max(1e-300, std::abs(integral))) {
      best = integral;
      break;
    }
    prev = integral;
    best = integral;
  }
  return best;
}

}  // namespace

BetaIntegralCheck beta_integral_check(double a, double b, double x) {
  if (a < 1.0 || b < 1.0 || x <= 1.0)
    throw std::invalid_argument("beta_integral_check: need a,b >= 1 and x > 1");
  double logx = std::log(x);
  // Gamma(a)Gamma(b)/Gamma(a+b) via lgamma to dodge overflow for larger a+b
  double lg = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  double closed = std::pow(logx, a + b - 1.0) * std::exp(lg);
  auto integrand = [&](double u) {
    return std::pow(std::log(x / u), a - 1.0) * std::pow(std::log(u), b - 1.0) / u;
  };
  double quad = tanh_sinh(integrand, 1.0, x, 1e-12);
  return {closed, quad};
}

}  // namespace tuplesieve
