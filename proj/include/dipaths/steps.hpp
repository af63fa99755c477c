#ifndef DIPATHS_STEPS_HPP
#define DIPATHS_STEPS_HPP

#include <cstdint>

// Elementary-step counter used by the complexity tests. The solvers bump it
// once per constant-work unit (edge scan, proposal, chain hop, ...), so the
// totals can be compared against the analytic per-star budgets.
namespace dipaths::steps {

inline thread_local std::uint64_t counter = 0;

inline void add(std::uint64_t k = 1) { counter += k; }
inline void reset() { counter = 0; }
inline std::uint64_t total() { return counter; }

}  // namespace dipaths::steps

#endif
