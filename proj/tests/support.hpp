// Conversions between library types and the dense oracle representation.
#ifndef TPERIOD_TESTS_SUPPORT_HPP
#define TPERIOD_TESTS_SUPPORT_HPP

#include <set>
#include <vector>

#include "oracles.hpp"
#include "tperiod/boolmat.hpp"

namespace support {

inline oracle::Dense to_dense(const tperiod::BoolMatrix& m) {
  oracle::Dense out = oracle::zeros(m.order());
  for (std::size_t i = 1; i <= m.order(); ++i)
    for (std::size_t j = 1; j <= m.order(); ++j) out[i - 1][j - 1] = m.at(i, j);
  return out;
}

inline tperiod::BoolMatrix from_dense(const oracle::Dense& d) {
  return tperiod::BoolMatrix::from_predicate(
      d.size(), [&](std::size_t i, std::size_t j) { return d[i - 1][j - 1] != 0; });
}

inline std::vector<int> sorted(const std::set<int>& xs) { return {xs.begin(), xs.end()}; }

inline std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

}  // namespace support

#endif  // TPERIOD_TESTS_SUPPORT_HPP
