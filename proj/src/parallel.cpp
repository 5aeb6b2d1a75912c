#include "casimir/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <charconv>
#include <cstdlib>

namespace casimir::parallel {

namespace {
std::atomic<int> g_override{0};
}

std::optional<int> parse_thread_cap(const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value <= 0) return std::nullopt;
  return value;
}

int thread_cap() {
  int threads = omp_get_max_threads();
  if (const int o = g_override.load(); o > 0) return o < threads ? o : threads;
  if (const char* env = std::getenv(kThreadsEnv)) {
    if (auto cap = parse_thread_cap(env); cap && *cap < threads) threads = *cap;
  }
  return threads;
}

void set_thread_cap(int threads) { g_override.store(threads > 0 ? threads : 0); }

}  // namespace casimir::parallel
