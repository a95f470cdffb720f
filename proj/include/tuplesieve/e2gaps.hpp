// e2gaps.hpp
//
// Enumeration of E2 numbers (products of exactly two distinct primes) and
// their consecutive-gap statistics. The default excludes prime squares;
// include_squares widens membership to everything supported by the
// varpi*varpi convolution (semiprimes plus squares of primes).

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tuplesieve/arith.hpp"
#include "tuplesieve/tuples.hpp"

namespace tuplesieve::e2gaps {

struct E2Stream {
  uint64_t limit = 0;
  bool includes_squares = false;
  std::vector<uint64_t> values;  // ascending, complete up to limit
};

E2Stream enumerate_e2(uint64_t limit, const PrimeTable& t, bool include_squares = false);

struct GapStats {
  uint64_t min_gap = 0;
  uint64_t count_le_6 = 0;
  uint64_t count_le_26 = 0;
  uint64_t total_gaps = 0;
  std::map<uint64_t, uint64_t> histogram;
};

GapStats gap_stats(const E2Stream& stream);

// all n <= limit such that n + h is an E2 number for at least two h in H
std::vector<uint64_t> shifted_e2_pattern(const Tuple& H, uint64_t limit,
                                         const PrimeTable& t);

}  // namespace tuplesieve::e2gaps
