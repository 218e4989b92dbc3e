#pragma once

namespace revlex {

/// Environment variable holding the default worker count.
inline constexpr const char* kThreadsEnv = "REVLEX_THREADS";

/// Worker count for the OpenMP kernels. `threads == 1` selects the serial
/// code paths; 0 means REVLEX_THREADS, or the OpenMP default when unset.
struct Parallelism {
  int threads = 0;

  static Parallelism serial() { return Parallelism{1}; }
  int resolved() const;
  bool is_serial() const { return resolved() == 1; }
};

}  // namespace revlex
