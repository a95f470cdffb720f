#include "tuplesieve/e2gaps.hpp"

#include <algorithm>

namespace tuplesieve::e2gaps {

E2Stream enumerate_e2(uint64_t limit, const PrimeTable& t, bool include_squares) {
  E2Stream out;
  out.limit = limit;
  out.includes_squares = include_squares;
  if (limit < 4) return out;
  for_two_prime_numbers(0, static_cast<size_t>(limit), t,
                        [&](uint64_t n, uint64_t p, uint64_t q) {
                          if (p == q && !include_squares) return;
                          out.values.push_back(n);
                        });
  return out;
}

GapStats gap_stats(const E2Stream& stream) {
  if (stream.values.empty())
    throw std::invalid_argument("gap_stats: empty stream");
  GapStats st;
  st.min_gap = UINT64_MAX;
  for (size_t i = 1; i < stream.values.size(); ++i) {
    uint64_t gap = stream.values[i] - stream.values[i - 1];
    st.histogram[gap]++;
    st.total_gaps++;
    st.min_gap = std::min(st.min_gap, gap);
    if (gap <= 6) st.count_le_6++;
    if (gap <= 26) st.count_le_26++;
  }
  if (st.total_gaps == 0) st.min_gap = 0;  // single-element stream
  return st;
}

std::vector<uint64_t> shifted_e2_pattern(const Tuple& H, uint64_t limit,
                                         const PrimeTable& t) {
  int64_t hmax = H.elements().back();
  // membership flags for the window of values n + h actually touches
  uint64_t span_hi = limit + static_cast<uint64_t>(std::max<int64_t>(hmax, 0)) + 1;
  std::vector<uint8_t> is_e2(span_hi + 1, 0);
  for_two_prime_numbers(0, static_cast<size_t>(span_hi), t,
                        [&](uint64_t n, uint64_t p, uint64_t q) {
                          if (p != q) is_e2[n] = 1;
                        });
  std::vector<uint64_t> hits;
  for (uint64_t n = 1; n <= limit; ++n) {
    int count = 0;
    for (int64_t h : H.elements()) {
      int64_t v = static_cast<int64_t>(n) + h;
      if (v >= 0 && static_cast<uint64_t>(v) <= span_hi && is_e2[v]) ++count;
      if (count >= 2) break;
    }
    if (count >= 2) hits.push_back(n);
  }
  return hits;
}

}  // namespace tuplesieve::e2gaps
