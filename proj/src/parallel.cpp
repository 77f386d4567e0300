#include "cw/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cw {

namespace {

std::size_t read_max_threads() {
  std::size_t hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CONSTWIDTH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      hw = std::min<std::size_t>(hw, static_cast<std::size_t>(v));
    }
  }
  return hw;
}

thread_local bool t_in_parallel = false;

}  // namespace

std::size_t max_threads() {
  static const std::size_t n = read_max_threads();
  return n;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  const std::size_t workers =
      t_in_parallel ? 1 : std::min(max_threads(), count);
  if (workers <= 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t b = std::min(count, w * chunk);
    const std::size_t e = std::min(count, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e] {
      t_in_parallel = true;
      fn(b, e);
      t_in_parallel = false;
    });
  }
  {
    t_in_parallel = true;
    fn(0, std::min(count, chunk));
    t_in_parallel = false;
  }
  for (auto& t : threads) t.join();
}

}  // namespace cw
