// weights.hpp
//
// Sieve-weight engine. Everything revolves around the Mobius pair
//
//   y_r      = mu(r) f_1(r) sum_d lambda_{dr} / f(dr),
//   lambda_d = mu(d) f(d)   sum_r y_{dr}      / f_1(dr),
//
// with f(d) = d/nu_d and f_1 = f * mu, which diagonalizes the bilinear form
// sum_{d,e} lambda_d lambda_e / f([d,e]) into sum_r y_r^2 / f_1(r).
//
// Three multiplicative-function packs are supported:
//   plain :  f(p)  = p/nu_p,          f_1(p)  = (p-nu_p)/nu_p
//   star  :  f*(p) = (p-1)/nu*_p,     nu*_p   = nu_p - 1        (0 in H)
//   dagger:  f+(p) = (p-1)/nu+_p,     nu+_p   = nu_p - [p | B0] (0 not in H)
// star/dagger values are partial functions: arguments must be coprime to the
// excluded modulus A (product of primes with vanishing nu), otherwise a
// domain error is raised.
//
// The concrete weights are
//   y_{r,l}      = mu^2(r) S(H) (log R/r)^l / l!            (r < R)
//   lambda_{d,l} = mu(d) (f(d)/f_1(d)) (S(H)/l!)
//                    sum_{r<R/d, (r,d)=1} mu^2(r) (log R/rd)^l / f_1(r)
// together with the Heath-Brown-style alternative
//   lambda^hb_{d,l} = mu(d) (log R/d)^{k+l} / (k+l)!.
//
// Scalar modes: double for empirical sums, exact rationals for the identity
// suite (log-free, generic rational y; every identity is homogeneous in the
// singular-series prefactor, which is therefore set to 1 there).

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tuplesieve/arith.hpp"
#include "tuplesieve/tuples.hpp"

namespace tuplesieve::weights {

enum class Variant { plain, star, dagger };

// ---------------------------------------------------------------------------
// Multiplicative function pack for one tuple.
// ---------------------------------------------------------------------------
class SieveFunctions {
 public:
  static SieveFunctions plain(const Tuple& H, const PrimeTable& t);
  static SieveFunctions star(const Tuple& H, const PrimeTable& t);    // 0 in H
  static SieveFunctions dagger(const Tuple& H, const PrimeTable& t);  // 0 not in H

  Variant variant() const noexcept { return variant_; }
  const Tuple& tuple() const noexcept { return H_; }

  // A (star), A0 (dagger), 1 (plain); 0 is the "every prime excluded"
  // degenerate case (star with k = 1)
  uint64_t excluded_modulus() const noexcept { return excluded_; }
  // squarefree kernel of prod |h| (dagger only, else 1)
  uint64_t b0() const noexcept { return b0_; }

  bool coprime_to_excluded(uint64_t d) const;

  // variant-dependent residue count at a prime
  int nu(uint64_t p) const;

  // f, f_1 on squarefree arguments (exact rationals)
  Rational f(uint64_t d) const;
  Rational f1(uint64_t d) const;

  // dagger extras: f_2(p) = 1 (p coprime to B0) or -f_1(p) (p | B0), and
  // F(p) = p (p-1-nu+_p) / ((p-1)(p-nu_p)), both extended multiplicatively
  Rational f2(uint64_t m) const;
  Rational F(uint64_t r) const;

 private:
  SieveFunctions(Variant v, const Tuple& H, const PrimeTable& t);

  Variant variant_;
  Tuple H_;
  const PrimeTable* table_;
  uint64_t excluded_ = 1;
  uint64_t b0_ = 1;
};

// ---------------------------------------------------------------------------
// Finite weight map on squarefree r < limit (dense; index = r).
// ---------------------------------------------------------------------------
template <class S>
struct WeightVec {
  uint64_t limit = 0;
  std::vector<S> v;

  WeightVec() = default;
  explicit WeightVec(uint64_t lim) : limit(lim), v(static_cast<size_t>(lim), S(0)) {}

  S& operator[](uint64_t r) { return v[static_cast<size_t>(r)]; }
  const S& operator[](uint64_t r) const { return v[static_cast<size_t>(r)]; }
  S get(uint64_t r) const { return r >= 1 && r < limit ? v[static_cast<size_t>(r)] : S(0); }

  bool operator==(const WeightVec& o) const { return limit == o.limit && v == o.v; }
};

using WeightVecQ = WeightVec<Rational>;
using WeightVecD = WeightVec<double>;

// Mobius pair between y and lambda for the plain functions. The input must
// vanish on non-squarefree indices (argument error otherwise).
WeightVecQ lambda_from_y(const WeightVecQ& y, const SieveFunctions& plain, const PrimeTable& t);
WeightVecQ y_from_lambda(const WeightVecQ& lam, const SieveFunctions& plain, const PrimeTable& t);
WeightVecD lambda_from_y(const WeightVecD& y, const SieveFunctions& plain, const PrimeTable& t);
WeightVecD y_from_lambda(const WeightVecD& lam, const SieveFunctions& plain, const PrimeTable& t);

// ---------------------------------------------------------------------------
// Concrete weights (floating).
// ---------------------------------------------------------------------------

// mu^2(r) S (log R/r)^l / l!  for r < R, else 0
double y_paper(uint64_t r, int l, double R, double singular, const PrimeTable& t);

// lambda_{d,l} for the tuple H; `singular` is S(H)
double lambda_paper(uint64_t d, int l, const Tuple& H, double R, const PrimeTable& t,
                    double singular);

// Heath-Brown-style alternative; k is the tuple size
double lambda_gpy(uint64_t d, int l, int k, double R, const PrimeTable& t);

// Cached lambda table with residue lists, built once per (H, l, R).
struct LambdaTable {
  Tuple H;
  int ell = 0;
  double R = 0;
  uint64_t limit = 0;                         // entries for d < limit
  std::vector<double> lam;                    // index d; 0 off support
  std::vector<std::vector<uint32_t>> omega;   // Omega_d, filled lazily
  const PrimeTable* table = nullptr;

  const std::vector<uint32_t>& omega_for(uint64_t d);
};

LambdaTable build_lambda_table(const Tuple& H, int l, double R, const PrimeTable& t,
                               double singular);

// Lambda_R(n; H, l) = sum_{d | P(n;H), d < R} lambda_d for n in (N, N+length].
// Uses block accumulation over residue classes; falls back to per-n divisor
// evaluation (flagged) when the block is shorter than the sieve radius.
struct SieveBlock {
  std::vector<double> values;
  bool used_fallback = false;
};
SieveBlock sieve_lambda_R(uint64_t N, size_t length, LambdaTable& lt);

// Exact-mode variant over an arbitrary rational lambda vector.
struct SieveBlockQ {
  std::vector<Rational> values;
  bool used_fallback = false;
};
SieveBlockQ sieve_lambda_R_exact(uint64_t N, size_t length, const WeightVecQ& lam,
                                 const Tuple& H, const PrimeTable& t);

// Per-n reference evaluation (direct divisor route), used as oracle and as
// the fallback path.
Rational lambda_R_at_exact(uint64_t n, const WeightVecQ& lam, const Tuple& H);

// ---------------------------------------------------------------------------
// Starred and dagger weights (floating, concrete y).
// ---------------------------------------------------------------------------

// y*_{r,l} closed form:
//   mu^2(r) (S/l!) (r/phi(r)) sum_{m < R/r, (m,r)=1} mu^2(m) (log R/rm)^l / phi(m);
// 0 when (r, A) > 1 or r >= R or r not squarefree.
double y_star(uint64_t r, int l, const Tuple& H, double R, const PrimeTable& t,
              double singular);

// z*_{r,p,l} closed form; vanishes when rp is not squarefree or r >= R/p.
double z_star(uint64_t r, uint64_t p, int l, const Tuple& H, double R,
              const PrimeTable& t, double singular);

// y+_{r,l} for 0 not in H, l >= 1 (l = 0 unsupported):
//   (S(H) F(r)/l!) sum_{delta | B1, delta < R/r} (1/phi(delta))
//       sum_{n < R/(r delta), (n, r B1)=1} mu(n)/(f_1(n) phi(n)) (log R/(r delta n))^l
// with B1 = B0/(B0, r).
double y_dagger(uint64_t r, int l, const Tuple& H, double R, const PrimeTable& t,
                double singular);

// ---------------------------------------------------------------------------
// Exact identity routes (generic rational y). "def" evaluates the defining
// sum over lambda = lambda_from_y(y); "closed" evaluates the transformed
// expression. Equality of the two is the content of the identity suite.
// ---------------------------------------------------------------------------
Rational y_star_def_exact(uint64_t r, const WeightVecQ& lam, const SieveFunctions& star,
                          const PrimeTable& t);
Rational y_star_closed_exact(uint64_t r, const WeightVecQ& y, const PrimeTable& t);
Rational z_star_def_exact(uint64_t r, uint64_t p, const WeightVecQ& lam,
                          const SieveFunctions& star, const PrimeTable& t);
Rational z_star_closed_exact(uint64_t r, uint64_t p, const WeightVecQ& y, const Tuple& H,
                             const PrimeTable& t);
Rational y_dagger_def_exact(uint64_t r, const WeightVecQ& lam, const SieveFunctions& dagger,
                            const PrimeTable& t);
Rational y_dagger_closed_exact(uint64_t r, const WeightVecQ& y, const SieveFunctions& dagger,
                               const PrimeTable& t);

// sum_{d,e < R} lambda_d lambda_e / f([d,e]), the undiagonalized bilinear form
Rational bilinear_form_exact(const WeightVecQ& lam, const SieveFunctions& plain);
// sum_r y_r^2 / f_1(r)
Rational diagonal_form_exact(const WeightVecQ& y, const SieveFunctions& plain);

// ---------------------------------------------------------------------------
// Exact identity suite: Mobius roundtrip, diagonalization, y* closed-form
// equivalence, z*-y* relation, f_2 divisor identity, dagger closed form,
// block-sieve vs divisor enumeration, stationarity of the constant-y
// optimum, F*G vs singular-series ratio (float, truncation accuracy).
// ---------------------------------------------------------------------------
struct IdentityCheck {
  std::string name;
  std::string tuple;
  bool ok;
  std::string detail;  // empty when ok
};

std::vector<IdentityCheck> run_identity_suite(const PrimeTable& t, uint64_t R,
                                              uint64_t seed);

}  // namespace tuplesieve::weights
