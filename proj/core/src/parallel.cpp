#include "sll/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sll {

namespace {

std::atomic<int> g_override{0};

int env_cap() {
  static const int cap = [] {
    const char* v = std::getenv("SLL_THREADS");
    if (!v) return 0;
    int n = std::atoi(v);
    return n > 0 ? n : 0;
  }();
  return cap;
}

}  // namespace

int worker_count() {
  int n = g_override.load(std::memory_order_relaxed);
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (int cap = env_cap(); cap > 0 && n > cap) n = cap;
  return n;
}

void set_worker_count(int n) { g_override.store(n, std::memory_order_relaxed); }

void parallel_for(int n, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  int workers = worker_count();
  if (workers > n) workers = n;
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int t = 0; t < workers; ++t) {
    // Static partition: worker t owns [t*n/w, (t+1)*n/w).
    int begin = static_cast<int>(static_cast<long long>(t) * n / workers);
    int end = static_cast<int>(static_cast<long long>(t + 1) * n / workers);
    pool.emplace_back([begin, end, &fn, &first_error, &error_mutex] {
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sll
