// asymptotics.hpp
//
// Exact symbolic layer for the level-of-distribution analysis. theta stays a
// formal variable; matrix entries are polynomials with exact rational
// coefficients:
//
//   m(k,l1,l2,theta) = C(l1+l2,l1)/(k+l1+l2)! *
//       ( k(l1+l2+1)(l1+l2+2) / ((k+l1+l2+1)(l1+1)(l2+1)) * theta/2 - 1 )
//
//   m2 = m21 + m22 - m23 with
//   m21 = C(l1+l2+2,l1+1) k/(k+l1+l2+1)! * theta/2
//   m22 = 2 [C(l1+l2+2,l1+1) - C(l1+l2+3,l1+1) - C(l1+l2+3,l2+1)]
//           * k/(k+l1+l2+2)! * theta^2/4
//   m23 = (1/2) C(l1+l2,l1)/(k+l1+l2)!
//
//   T(l1,l2) = -C(l1+l2+3,l2+1) - C(l1+l2+3,l1+1) + C(l1+l2+2,l1+1)
//
// Positivity of b^T M b at a rational theta is decided by exact recursive
// Schur elimination (LDL^T signatures), which also produces an integer
// witness vector; no floating eigensolvers anywhere.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tuplesieve/arith.hpp"

namespace tuplesieve::asymptotics {

// polynomial in theta, ascending coefficients, trailing zeros trimmed
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int degree);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Rational coeff(int i) const;

  Rational eval(const Rational& theta) const;
  double eval_double(double theta) const;

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rational& s) const;
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  // "15*theta^2 - 64*theta + 48" with rational coefficients as a/b
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Rational binomial(int n, int k);
Rational factorial_rat(int n);

RationalPoly m_poly(int k, int l1, int l2);
RationalPoly m2_poly(int k, int l1, int l2);
// T(k,l1,l2); independent of k
Rational t_coeff(int l1, int l2);

enum class FormKind { prime, e2 };

struct FormMatrix {
  int k = 0;
  int L = 0;
  FormKind kind = FormKind::prime;
  std::vector<RationalPoly> entries;  // (L+1) x (L+1), row-major

  const RationalPoly& at(int i, int j) const { return entries[i * (L + 1) + j]; }
};

FormMatrix build_matrix(int k, int L, FormKind kind);

RationalPoly quad_form(const FormMatrix& M, std::span<const Rational> b);
RationalPoly quad_form(const FormMatrix& M, std::span<const long> b);
RationalPoly determinant(const FormMatrix& M);

// open subintervals of (1/2, 1] where p(theta) > 0; roots listed to ~1e-12.
// Degree must be <= 2 (exact root expressions); identically_zero flags the
// empty case.
struct PositivityResult {
  std::vector<std::pair<double, double>> intervals;
  std::vector<double> roots_in_range;  // roots inside (1/2, 1]
  bool identically_zero = false;
};
PositivityResult positivity_threshold(const RationalPoly& p);

// sign-change bisection against exact rational evaluation; finds simple roots
// of arbitrary-degree polynomials inside [lo, hi]
std::vector<double> roots_by_bisection(const RationalPoly& p, double lo, double hi);

struct EigenResult {
  bool has_positive = false;
  std::vector<BigInt> witness;  // integer b with b^T M b > 0 when has_positive
};
// exact decision for "the symmetric matrix M(theta0) has a positive
// eigenvalue", with certificate
EigenResult positive_eigen_exists(const FormMatrix& M, const Rational& theta0);

// sum b_l1 b_l2 m(k,l1,l2,theta); same value as quad_form on the prime-kind
// matrix, kept as an independently coded route
Rational s1_star_model(int k, int L, std::span<const Rational> b, const Rational& theta);

// single-l diagonal value via the simplified display
// C(2l,l)/(k+2l)! ( 2k(2l+1)/((k+2l+1)(l+1)) * theta/2 - 1 )
Rational m_single(int k, int l, const Rational& theta);

// (k + 4l^2 + 6l + 2 + 4 eps (k + 2kl)) / (2 (1+l)(1+2l+k))
Rational b1_tilde_threshold(int k, int l, const Rational& eps);

}  // namespace tuplesieve::asymptotics
