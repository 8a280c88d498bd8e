#ifndef TPERIOD_CYCLE_HPP
#define TPERIOD_CYCLE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tperiod {

struct TailCycle {
  std::size_t index = 0;
  std::size_t period = 0;
};

/// Exact transient and period of x_1, x_2, ... given that x_m = x_{m+period}
/// for every m >= index. `terms` holds x_1 .. x_{index+period-1} (terms[k]
/// is x_{k+1}).
///
/// The result has period dividing `period` and the smallest index from which
/// that period holds for every later term.
template <typename T>
TailCycle tail_cycle(const std::vector<T>& terms, std::size_t index,
                     std::size_t period) {
  if (index < 1 || period < 1 || terms.size() + 1 < index + period)
    throw std::invalid_argument("tail_cycle: not enough terms");

  auto term = [&](std::size_t m) -> const T& {
    if (m >= index) m = index + (m - index) % period;
    return terms[m - 1];
  };

  std::size_t best = period;
  for (std::size_t r = 1; r < period; ++r) {
    if (period % r) continue;
    bool ok = true;
    for (std::size_t m = index; m < index + period && ok; ++m)
      ok = term(m) == term(m + r);
    if (ok) {
      best = r;
      break;
    }
  }

  std::size_t q = index;
  while (q > 1 && term(q - 1) == term(q - 1 + best)) --q;
  return {q, best};
}

}  // namespace tperiod

#endif  // TPERIOD_CYCLE_HPP
