#pragma once

#include <optional>
#include <string>

namespace casimir {

/// Serial keeps the reference evaluation order; Parallel distributes
/// independent evaluations over OpenMP threads with identical results.
enum class Execution { Serial, Parallel };

namespace parallel {

inline constexpr const char* kThreadsEnv = "CASIMIR_ANISO_THREADS";

/// Parses a positive integer thread cap. Empty optional on malformed input.
std::optional<int> parse_thread_cap(const std::string& text);

/// Thread count for parallel regions: min(omp max threads, CASIMIR_ANISO_THREADS if set and valid).
int thread_cap();

/// Overrides the environment-derived cap for this process (0 clears the override).
void set_thread_cap(int threads);

}  // namespace parallel
}  // namespace casimir
