#include "tuplesieve/parallel.hpp"

#include <cstdlib>

namespace tuplesieve {

namespace {
std::atomic<int> g_thread_cap{0};  // 0: unset, fall back to env / hardware
}

void set_thread_cap(int cap) { g_thread_cap.store(cap > 0 ? cap : 0); }

int default_thread_count() {
  int cap = g_thread_cap.load();
  if (cap > 0) return cap;
  if (const char* env = std::getenv("TUPLESIEVE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace tuplesieve
