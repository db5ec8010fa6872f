#include "pst/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace pst {

namespace {

int initial_limit() {
  if (const char* env = std::getenv("PST_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

std::atomic<int>& limit_storage() {
  static std::atomic<int> limit{initial_limit()};
  return limit;
}

}  // namespace

int thread_limit() { return limit_storage().load(std::memory_order_relaxed); }

void set_thread_limit(int threads) {
  limit_storage().store(threads < 1 ? 1 : threads, std::memory_order_relaxed);
}

ThreadLimitGuard::ThreadLimitGuard(int threads) : previous_(thread_limit()) {
  set_thread_limit(threads);
}

ThreadLimitGuard::~ThreadLimitGuard() { set_thread_limit(previous_); }

}  // namespace pst
