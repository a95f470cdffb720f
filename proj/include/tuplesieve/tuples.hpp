// tuples.hpp
//
// Admissible k-tuple machinery. For a set H = {h_1 < ... < h_k} of distinct
// integers and P(n;H) = prod_{h in H} (n+h):
//
//   nu_p(H)   = #{h mod p}           (distinct residue classes mod p)
//   Omega_d   = {a in Z_d : P(a;H) == 0 mod d}, |Omega_d| = prod_{p|d} nu_p
//   admissible: nu_p < p for every prime p (only p <= k can fail)
//   S(H)      = prod_p (1 - nu_p/p)(1 - 1/p)^(-k)   (singular series)
//   S*(H)     = prod_p (1 - nu*_p/(p-1))(1 - 1/p)^(-k+1), nu*_p = nu_p - 1,
//               defined for 0 in H; equals S(H) identically
//   beta(H)   = sum_p (k - nu_p) log p / p, supported on p | Delta(H)
//   Delta(H)  = prod_{i<j} |h_i - h_j|
//
// nu_p = k whenever p does not divide Delta(H), so beta is a finite sum and
// the singular-series tail over large primes can be bounded with nu_p = k.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tuplesieve/arith.hpp"

namespace tuplesieve {

class Tuple {
 public:
  // elements are sorted; duplicates rejected
  explicit Tuple(std::vector<int64_t> elements);

  int k() const noexcept { return static_cast<int>(elems_.size()); }
  const std::vector<int64_t>& elements() const noexcept { return elems_; }
  const BigInt& delta() const noexcept { return delta_; }
  int64_t diameter() const noexcept {
    return elems_.size() < 2 ? 0 : elems_.back() - elems_.front();
  }
  bool contains(int64_t h) const;
  Tuple translated(int64_t c) const;
  // H u {h0}; h0 must not already be a member
  Tuple with(int64_t h0) const;
  // H \ {h0}; h0 must be a member
  Tuple without(int64_t h0) const;

  bool operator==(const Tuple& o) const { return elems_ == o.elems_; }
  std::string str() const;

 private:
  std::vector<int64_t> elems_;
  BigInt delta_;
};

// nu_p(H): number of distinct residues of H mod p
int nu_p(const Tuple& H, uint64_t p);

// Omega_d(H) for squarefree d, assembled by CRT from Omega_p = {-h mod p}.
// d = 1 yields {0} (empty product convention, nu_1 = 1).
std::vector<uint64_t> omega_d(const Tuple& H, uint64_t d, const PrimeTable& t);

bool is_admissible(const Tuple& H, const PrimeTable& t);

struct SingularSeriesValue {
  double value;             // truncated Euler product over p <= truncation_prime
  uint64_t truncation_prime;
  double tail_bound;        // relative: value*(1 +- tail_bound) brackets the full product
};

// Truncated singular series with a rigorous tail bracket. Inadmissible H
// gives value 0 (some factor vanishes), tail 0.
SingularSeriesValue singular_series(const Tuple& H, uint64_t P, const PrimeTable& t);

// Reduced-residue analogue S*(H), requiring 0 in H. Mathematically equal to
// S(H) factor by factor; kept as an independent computation path.
double singular_series_star(const Tuple& H, uint64_t P, const PrimeTable& t);

// beta(H) = sum over p | Delta(H) of (k - nu_p) log p / p
double beta(const Tuple& H, const PrimeTable& t);

// distinct primes dividing Delta(H) (all are <= diameter), ascending
std::vector<uint32_t> delta_prime_support(const Tuple& H, const PrimeTable& t);

// All admissible k-subsets of [1, h_max], sorted by (diameter, elements).
// max_results, if set, truncates the sorted list.
std::vector<Tuple> search_admissible(int k, int64_t h_max, const PrimeTable& t,
                                     std::optional<size_t> max_results = std::nullopt);

}  // namespace tuplesieve
