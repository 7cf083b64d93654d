#include "dressian/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace dressian {

namespace {
std::atomic<int> g_workers{1};
}

void set_worker_threads(int count) { g_workers = std::max(1, count); }

int worker_threads() { return g_workers; }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(worker_threads());
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

}  // namespace dressian
