// parallel.hpp
//
// Block-parallel map over an integer window with deterministic ordered
// reduction: worker threads fill a result slot per block, the caller reduces
// the slots in block order, so the outcome never depends on the worker count.

#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace tuplesieve {

int default_thread_count();
void set_thread_cap(int cap);

// fn(block_index, block_lo, block_len) -> T over consecutive blocks covering
// (lo, hi]; block i covers (lo + i*block, ...]
template <class T, class Fn>
std::vector<T> map_blocks(uint64_t lo, uint64_t hi, uint64_t block, Fn&& fn) {
  size_t nblocks = static_cast<size_t>((hi - lo + block - 1) / block);
  std::vector<T> results(nblocks);
  int workers = std::min<int>(default_thread_count(), static_cast<int>(nblocks));
  if (workers <= 1) {
    for (size_t i = 0; i < nblocks; ++i) {
      uint64_t blo = lo + i * block;
      uint64_t blen = std::min<uint64_t>(block, hi - blo);
      results[i] = fn(i, blo, blen);
    }
    return results;
  }
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= nblocks) break;
      uint64_t blo = lo + i * block;
      uint64_t blen = std::min<uint64_t>(block, hi - blo);
      results[i] = fn(i, blo, blen);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace tuplesieve
