#include "tuplesieve/tuples.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace tuplesieve {

Tuple::Tuple(std::vector<int64_t> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw std::invalid_argument("Tuple: need k >= 1 elements");
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
    throw std::invalid_argument("Tuple: elements must be distinct");
  delta_ = 1;
  for (size_t i = 0; i < elems_.size(); ++i)
    for (size_t j = i + 1; j < elems_.size(); ++j)
      delta_ *= BigInt(elems_[j] - elems_[i]);
}

bool Tuple::contains(int64_t h) const {
  return std::binary_search(elems_.begin(), elems_.end(), h);
}

Tuple Tuple::translated(int64_t c) const {
  std::vector<int64_t> shifted(elems_);
  for (auto& h : shifted) h += c;
  return Tuple(std::move(shifted));
}

Tuple Tuple::with(int64_t h0) const {
  std::vector<int64_t> ext(elems_);
  ext.push_back(h0);
  return Tuple(std::move(ext));
}

Tuple Tuple::without(int64_t h0) const {
  std::vector<int64_t> rest;
  for (int64_t h : elems_)
    if (h != h0) rest.push_back(h);
  if (rest.size() == elems_.size())
    throw std::invalid_argument("Tuple::without: element not present");
  return Tuple(std::move(rest));
}

std::string Tuple::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

namespace {
// nonnegative residue of h mod m
inline uint64_t mod_pos(int64_t h, uint64_t m) {
  int64_t r = h % static_cast<int64_t>(m);
  return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(m) : r);
}
}  // namespace

int nu_p(const Tuple& H, uint64_t p) {
  if (p < 2) throw std::invalid_argument("nu_p: p must be prime");
  if (p <= 64) {
    uint64_t mask = 0;
    for (int64_t h : H.elements()) mask |= uint64_t{1} << mod_pos(h, p);
    return static_cast<int>(std::popcount(mask));
  }
  std::set<uint64_t> residues;
  for (int64_t h : H.elements()) residues.insert(mod_pos(h, p));
  return static_cast<int>(residues.size());
}

std::vector<uint64_t> omega_d(const Tuple& H, uint64_t d, const PrimeTable& t) {
  if (d == 0) throw std::invalid_argument("omega_d: d must be positive");
  if (d == 1) return {0};
  if (!t.is_squarefree(d)) throw std::invalid_argument("omega_d: d must be squarefree");
  std::vector<uint32_t> ps;
  t.factor_distinct(d, ps);
  // CRT: fold Omega_p = {-h mod p} into residues mod the running modulus
  std::vector<uint64_t> acc{0};
  uint64_t m = 1;
  for (uint32_t p : ps) {
    std::set<uint64_t> omega_p;
    for (int64_t h : H.elements()) omega_p.insert(mod_pos(-h, p));
    std::vector<uint64_t> next;
    next.reserve(acc.size() * omega_p.size());
    uint64_t pm = m * p;
    for (uint64_t a : acc)
      for (uint64_t b : omega_p) {
        // unique x mod pm with x = a (m), x = b (p)
        uint64_t x = a;
        while (x % p != b) x += m;
        next.push_back(x);
      }
    acc = std::move(next);
    m = pm;
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

bool is_admissible(const Tuple& H, const PrimeTable& t) {
  // nu_p <= k < p for p > k, so only small primes can obstruct
  for (uint32_t p : t.primes()) {
    if (p > static_cast<uint64_t>(H.k())) break;
    if (nu_p(H, p) == static_cast<int>(p)) return false;
  }
  return true;
}

std::vector<uint32_t> delta_prime_support(const Tuple& H, const PrimeTable& t) {
  std::set<uint32_t> support;
  const auto& hs = H.elements();
  std::vector<uint32_t> f;
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j) {
      uint64_t diff = static_cast<uint64_t>(hs[j] - hs[i]);
      f.clear();
      t.factor_distinct(diff, f);
      support.insert(f.begin(), f.end());
    }
  return {support.begin(), support.end()};
}

SingularSeriesValue singular_series(const Tuple& H, uint64_t P, const PrimeTable& t) {
  const int k = H.k();
  if (P < static_cast<uint64_t>(k))
    throw std::invalid_argument("singular_series: truncation prime below k");
  if (P > t.limit())
    throw std::invalid_argument("singular_series: table does not cover truncation");

  if (k == 1) return {1.0, P, 0.0};  // every factor is exactly 1

  double value = 1.0;
  for (uint32_t p : t.primes()) {
    if (p > P) break;
    int nu = nu_p(H, p);
    if (nu == static_cast<int>(p)) return {0.0, P, 0.0};
    double dp = static_cast<double>(p);
    value *= (1.0 - nu / dp) * std::pow(1.0 - 1.0 / dp, -k);
  }

  // Tail over p > P. Beyond T = max(P, diameter, 2k) every factor has
  // nu_p = k and |log (1 - k/p)(1 - 1/p)^(-k)| <= 2 k^2 / p^2, so the sum of
  // logs past T is below 2k^2/T. Primes caught in (P, T] get their exact
  // |log factor| added (those factors never vanish: p > P >= k forces
  // nu_p <= k < p), keeping the bracket rigorous.
  uint64_t tail_start = std::max<uint64_t>({P, static_cast<uint64_t>(H.diameter()),
                                            2 * static_cast<uint64_t>(k)});
  double tail_log = 2.0 * k * k / static_cast<double>(tail_start);
  if (tail_start > P) {
    if (tail_start > t.limit())
      throw std::invalid_argument(
          "singular_series: table must cover max(P, diameter, 2k)");
    for (uint32_t p : t.primes()) {
      if (p <= P) continue;
      if (p > tail_start) break;
      int nu = nu_p(H, p);
      double dp = static_cast<double>(p);
      tail_log += std::abs(std::log1p(-nu / dp) - k * std::log1p(-1.0 / dp));
    }
  }
  double tail_bound = std::expm1(tail_log);
  return {value, P, tail_bound};
}

double singular_series_star(const Tuple& H, uint64_t P, const PrimeTable& t) {
  const int k = H.k();
  if (!H.contains(0))
    throw std::invalid_argument("singular_series_star: requires 0 in H");
  if (P < static_cast<uint64_t>(k))
    throw std::invalid_argument("singular_series_star: truncation prime below k");
  if (P > t.limit())
    throw std::invalid_argument("singular_series_star: table does not cover truncation");
  double value = 1.0;
  for (uint32_t p : t.primes()) {
    if (p > P) break;
    int nu_star = nu_p(H, p) - 1;
    double dp = static_cast<double>(p);
    value *= (1.0 - nu_star / (dp - 1.0)) * std::pow(1.0 - 1.0 / dp, -(k - 1));
  }
  return value;
}

double beta(const Tuple& H, const PrimeTable& t) {
  const int k = H.k();
  double sum = 0.0;
  for (uint32_t p : delta_prime_support(H, t)) {
    int nu = nu_p(H, p);
    sum += (k - nu) * std::log(static_cast<double>(p)) / static_cast<double>(p);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// search_admissible: depth-first extension over candidates in [1, h_max] with
// residue-cover pruning mod each prime p <= k. A partial tuple that already
// occupies all residue classes mod some such p cannot be completed.
// ---------------------------------------------------------------------------
namespace {

struct SearchState {
  int k;
  int64_t h_max;
  std::vector<uint32_t> small_primes;          // primes <= k
  std::vector<std::vector<int>> residue_count; // per prime, counts per class
  std::vector<int> classes_used;               // per prime
  std::vector<int64_t> current;
  std::vector<std::vector<int64_t>> found;
};

void dfs(SearchState& st, int64_t next_min) {
  if (static_cast<int>(st.current.size()) == st.k) {
    st.found.push_back(st.current);
    return;
  }
  int need = st.k - static_cast<int>(st.current.size());
  for (int64_t h = next_min; h + need - 1 <= st.h_max; ++h) {
    bool dead = false;
    for (size_t i = 0; i < st.small_primes.size(); ++i) {
      uint32_t p = st.small_primes[i];
      int cls = static_cast<int>(h % p);
      if (st.residue_count[i][cls] == 0 && st.classes_used[i] + 1 == static_cast<int>(p)) {
        // h would cover the last free residue class mod p
        dead = true;
        break;
      }
    }
    if (dead) continue;
    st.current.push_back(h);
    for (size_t i = 0; i < st.small_primes.size(); ++i) {
      int cls = static_cast<int>(h % st.small_primes[i]);
      if (st.residue_count[i][cls]++ == 0) st.classes_used[i]++;
    }
    dfs(st, h + 1);
    st.current.pop_back();
    for (size_t i = 0; i < st.small_primes.size(); ++i) {
      int cls = static_cast<int>(h % st.small_primes[i]);
      if (--st.residue_count[i][cls] == 0) st.classes_used[i]--;
    }
  }
}

}  // namespace

std::vector<Tuple> search_admissible(int k, int64_t h_max, const PrimeTable& t,
                                     std::optional<size_t> max_results) {
  if (k < 1) throw std::invalid_argument("search_admissible: k must be >= 1");
  if (h_max < k) throw std::invalid_argument("search_admissible: h_max must be >= k");
  SearchState st;
  st.k = k;
  st.h_max = h_max;
  for (uint32_t p : t.primes()) {
    if (p > static_cast<uint64_t>(k)) break;
    st.small_primes.push_back(p);
    st.residue_count.emplace_back(p, 0);
    st.classes_used.push_back(0);
  }
  dfs(st, 1);
  std::sort(st.found.begin(), st.found.end(),
            [](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
              int64_t da = a.back() - a.front(), db = b.back() - b.front();
              if (da != db) return da < db;
              return a < b;
            });
  if (max_results && st.found.size() > *max_results) st.found.resize(*max_results);
  std::vector<Tuple> out;
  out.reserve(st.found.size());
  for (auto& v : st.found) out.emplace_back(std::move(v));
  return out;
}

}  // namespace tuplesieve
