#pragma once

namespace varbench {

// Optimization barrier: forces the compiler to materialize `value` so timed
// loops and micro-benchmark bodies cannot be dead-code eliminated.
#if defined(__GNUC__) || defined(__clang__)
template <class T>
inline void do_not_optimize(T& value) {
  asm volatile("" : "+m,r"(value) : : "memory");
}
template <class T>
inline void do_not_optimize(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}
#else
#include <atomic>
template <class T>
inline void do_not_optimize(const T& value) {
  std::atomic_signal_fence(std::memory_order_acq_rel);
  volatile const T* sink = &value;
  (void)sink;
}
#endif

}  // namespace varbench
