#include "tuplesieve/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tuplesieve::asymptotics {

// ---------------------------------------------------------------------------
// RationalPoly
// ---------------------------------------------------------------------------

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == Rational(0)) c_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
}

Rational RationalPoly::eval(const Rational& theta) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * theta + *it;
  return acc;
}

double RationalPoly::eval_double(double theta) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * theta + it->get_d();
  return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RationalPoly();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
  std::vector<Rational> out(c_);
  for (auto& c : out) c *= s;
  return RationalPoly(std::move(out));
}

std::string RationalPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = c_[i];
    if (c == Rational(0)) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool unit = (a == Rational(1)) && i > 0;
    if (!unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "theta";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// binomials, matrix entries
// ---------------------------------------------------------------------------

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational factorial_rat(int n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

RationalPoly m_poly(int k, int l1, int l2) {
  if (l1 < 0 || l2 < 0 || l1 > k || l2 > k)
    throw std::invalid_argument("m_poly: need 0 <= l1,l2 <= k");
  Rational front = binomial(l1 + l2, l1) / factorial_rat(k + l1 + l2);
  Rational slope = Rational(k * (l1 + l2 + 1)) * Rational(l1 + l2 + 2) /
                   (Rational(k + l1 + l2 + 1) * Rational(l1 + 1) * Rational(l2 + 1)) /
                   Rational(2);
  return RationalPoly({front * Rational(-1), front * slope});
}

RationalPoly m2_poly(int k, int l1, int l2) {
  if (l1 < 0 || l2 < 0 || l1 > k || l2 > k)
    throw std::invalid_argument("m2_poly: need 0 <= l1,l2 <= k");
  Rational m21 = binomial(l1 + l2 + 2, l1 + 1) * Rational(k) /
                 factorial_rat(k + l1 + l2 + 1) / Rational(2);
  Rational bracket = binomial(l1 + l2 + 2, l1 + 1) - binomial(l1 + l2 + 3, l1 + 1) -
                     binomial(l1 + l2 + 3, l2 + 1);
  Rational m22 = Rational(2) * bracket * Rational(k) / factorial_rat(k + l1 + l2 + 2) /
                 Rational(4);
  Rational m23 = binomial(l1 + l2, l1) / factorial_rat(k + l1 + l2) / Rational(2);
  // m21 * theta + m22 * theta^2 - m23
  return RationalPoly({-m23, m21, m22});
}

Rational t_coeff(int l1, int l2) {
  return -binomial(l1 + l2 + 3, l2 + 1) - binomial(l1 + l2 + 3, l1 + 1) +
         binomial(l1 + l2 + 2, l1 + 1);
}

FormMatrix build_matrix(int k, int L, FormKind kind) {
  if (L > k) throw std::invalid_argument("build_matrix: need L <= k");
  FormMatrix M{k, L, kind, {}};
  M.entries.reserve(static_cast<size_t>(L + 1) * (L + 1));
  for (int i = 0; i <= L; ++i)
    for (int j = 0; j <= L; ++j)
      M.entries.push_back(kind == FormKind::prime ? m_poly(k, i, j) : m2_poly(k, i, j));
  return M;
}

RationalPoly quad_form(const FormMatrix& M, std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != M.L + 1)
    throw std::invalid_argument("quad_form: dimension mismatch");
  RationalPoly acc;
  for (int i = 0; i <= M.L; ++i)
    for (int j = 0; j <= M.L; ++j) acc = acc + M.at(i, j) * (b[i] * b[j]);
  return acc;
}

RationalPoly quad_form(const FormMatrix& M, std::span<const long> b) {
  std::vector<Rational> br(b.begin(), b.end());
  return quad_form(M, br);
}

namespace {
RationalPoly det_rec(const FormMatrix& M, std::vector<int>& rows, std::vector<int>& cols) {
  if (rows.size() == 1) return M.at(rows[0], cols[0]);
  RationalPoly acc;
  int r0 = rows[0];
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < cols.size(); ++j) {
    std::vector<int> sub_cols;
    for (size_t jj = 0; jj < cols.size(); ++jj)
      if (jj != j) sub_cols.push_back(cols[jj]);
    RationalPoly minor = det_rec(M, sub_rows, sub_cols);
    RationalPoly term = M.at(r0, cols[j]) * minor;
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}
}  // namespace

RationalPoly determinant(const FormMatrix& M) {
  std::vector<int> rows, cols;
  for (int i = 0; i <= M.L; ++i) {
    rows.push_back(i);
    cols.push_back(i);
  }
  return det_rec(M, rows, cols);
}

// ---------------------------------------------------------------------------
// positivity over (1/2, 1]
// ---------------------------------------------------------------------------

namespace {

// high-precision sqrt of a nonnegative rational, as double
double sqrt_rational(const Rational& q) {
  mpf_class f(0, 256);
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  mpf_class r(0, 256);
  mpf_sqrt(r.get_mpf_t(), f.get_mpf_t());
  return r.get_d();
}

}  // namespace

PositivityResult positivity_threshold(const RationalPoly& p) {
  if (p.degree() > 2)
    throw std::invalid_argument("positivity_threshold: degree must be <= 2");
  PositivityResult out;
  const double lo = 0.5, hi = 1.0;
  if (p.is_zero()) {
    out.identically_zero = true;
    return out;
  }

  // real roots, exact coefficients
  std::vector<double> roots;
  Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  if (a == Rational(0)) {
    if (!(b == Rational(0))) roots.push_back(Rational(-c / b).get_d());
  } else {
    Rational disc = b * b - Rational(4) * a * c;
    if (disc >= 0) {
      double sq = sqrt_rational(disc);
      double da = a.get_d(), db = b.get_d();
      // the usual stable pairing
      double q = -0.5 * (db + (db >= 0 ? sq : -sq));
      double r1 = q / da;
      double r2 = (q != 0.0) ? c.get_d() / q : (-db / da - r1);
      roots.push_back(std::min(r1, r2));
      if (!(disc == Rational(0))) roots.push_back(std::max(r1, r2));
    }
  }
  for (double r : roots)
    if (r > lo && r <= hi) out.roots_in_range.push_back(r);

  // walk the sign pattern across (lo, hi]
  std::vector<double> cuts{lo};
  for (double r : roots)
    if (r > lo && r < hi) cuts.push_back(r);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    if (p.eval_double(mid) > 0) out.intervals.emplace_back(cuts[i], cuts[i + 1]);
  }
  return out;
}

std::vector<double> roots_by_bisection(const RationalPoly& p, double lo, double hi) {
  std::vector<double> roots;
  const int grid = 4096;
  auto sign_at = [&](double x) {
    // exact evaluation at a nearby rational point
    Rational q(x);
    Rational v = p.eval(q);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
  };
  double step = (hi - lo) / grid;
  int prev = sign_at(lo);
  double prev_x = lo;
  for (int i = 1; i <= grid; ++i) {
    double x = lo + i * step;
    int s = sign_at(x);
    if (s == 0) {
      roots.push_back(x);
    } else if (prev != 0 && s != prev) {
      double a = prev_x, b = x;
      for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
        double m = 0.5 * (a + b);
        int sm = sign_at(m);
        if (sm == 0) {
          a = b = m;
          break;
        }
        (sm == prev ? a : b) = m;
      }
      roots.push_back(0.5 * (a + b));
    }
    if (s != 0) {
      prev = s;
      prev_x = x;
    }
  }
  return roots;
}

// ---------------------------------------------------------------------------
// exact positive-eigenvalue decision with witness
// ---------------------------------------------------------------------------

namespace {

// Symmetric rational matrix, recursive Schur elimination. Returns a rational
// witness x with x^T M x > 0 if one exists.
bool find_positive_direction(std::vector<std::vector<Rational>> M,
                             std::vector<Rational>& witness_out) {
  size_t n = M.size();
  if (n == 0) return false;

  // any positive diagonal entry is already a witness direction
  for (size_t i = 0; i < n; ++i)
    if (M[i][i] > 0) {
      witness_out.assign(n, Rational(0));
      witness_out[i] = 1;
      return true;
    }

  // pivot on a nonzero (necessarily negative) diagonal entry
  for (size_t i = 0; i < n; ++i) {
    if (M[i][i] == 0) continue;
    // Schur complement on the complementary index set
    std::vector<size_t> rest;
    for (size_t j = 0; j < n; ++j)
      if (j != i) rest.push_back(j);
    std::vector<std::vector<Rational>> S(rest.size(), std::vector<Rational>(rest.size()));
    for (size_t a = 0; a < rest.size(); ++a)
      for (size_t b = 0; b < rest.size(); ++b)
        S[a][b] = M[rest[a]][rest[b]] - M[rest[a]][i] * M[i][rest[b]] / M[i][i];
    std::vector<Rational> sub;
    if (!find_positive_direction(std::move(S), sub)) return false;
    // lift: x_i = -(sum_j y_j M[i][rest[j]]) / M[i][i]  gives x^T M x = y^T S y
    witness_out.assign(n, Rational(0));
    Rational dot(0);
    for (size_t a = 0; a < rest.size(); ++a) {
      witness_out[rest[a]] = sub[a];
      dot += sub[a] * M[i][rest[a]];
    }
    witness_out[i] = -dot / M[i][i];
    return true;
  }

  // all diagonal entries vanish: any nonzero off-diagonal entry gives an
  // indefinite 2x2 block
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!(M[i][j] == 0)) {
        witness_out.assign(n, Rational(0));
        witness_out[i] = 1;
        witness_out[j] = (M[i][j] > 0) ? 1 : -1;
        return true;
      }
  return false;  // zero matrix
}

}  // namespace

EigenResult positive_eigen_exists(const FormMatrix& Mx, const Rational& theta0) {
  size_t n = Mx.L + 1;
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) M[i][j] = Mx.at(i, j).eval(theta0);
  EigenResult out;
  std::vector<Rational> w;
  out.has_positive = find_positive_direction(std::move(M), w);
  if (out.has_positive) {
    // clear denominators; scaling does not change the sign of the form
    BigInt lcm(1);
    for (auto& q : w) {
      BigInt den = q.get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (auto& q : w) {
      Rational scaled = q * Rational(lcm);
      out.witness.push_back(scaled.get_num());
    }
  }
  return out;
}

Rational s1_star_model(int k, int L, std::span<const Rational> b, const Rational& theta) {
  if (static_cast<int>(b.size()) != L + 1)
    throw std::invalid_argument("s1_star_model: dimension mismatch");
  Rational acc(0);
  for (int l1 = 0; l1 <= L; ++l1)
    for (int l2 = 0; l2 <= L; ++l2)
      acc += b[l1] * b[l2] * m_poly(k, l1, l2).eval(theta);
  return acc;
}

Rational m_single(int k, int l, const Rational& theta) {
  Rational inner = Rational(2 * k) * Rational(2 * l + 1) /
                       (Rational(k + 2 * l + 1) * Rational(l + 1)) * theta / Rational(2) -
                   Rational(1);
  return binomial(2 * l, l) / factorial_rat(k + 2 * l) * inner;
}

Rational b1_tilde_threshold(int k, int l, const Rational& eps) {
  if (l > k) throw std::invalid_argument("b1_tilde_threshold: need l <= k");
  Rational num = Rational(k + 4 * l * l + 6 * l + 2) +
                 Rational(4) * eps * Rational(k + 2 * k * l);
  Rational den = Rational(2) * Rational(1 + l) * Rational(1 + 2 * l + k);
  return num / den;
}

}  // namespace tuplesieve::asymptotics
