#ifndef TPERIOD_WALKSETS_HPP
#define TPERIOD_WALKSETS_HPP

#include <cstddef>
#include <vector>

#include "tperiod/boolmat.hpp"
#include "tperiod/spec.hpp"

namespace tperiod {

// Sorted, duplicate-free displacements v - u, each in [-n+1, n-1].
using OffsetSet = std::vector<int>;

inline constexpr std::size_t kDefaultQBound = 64;

/// Displacement sets for walks of a fixed length i.
///
///   P: offsets congruent to i * min S modulo gcd(S + T)
///   Q: offsets that are a sum of exactly i terms from S u (-T)
///   R: offsets l such that every (u, u + l) pair has a length-i walk
///
/// R is contained in Q, which is contained in P.
struct WalkSets {
  std::size_t i = 0;
  OffsetSet P;
  OffsetSet Q;
  OffsetSet R;
};

OffsetSet compute_P(const ToeplitzSpec& spec, std::size_t i);

/// Dynamic program over the full partial-sum range [-i*max T, i*max S];
/// only the final sums are restricted to [-n+1, n-1]. Throws
/// std::out_of_range when i is 0 or above `bound`.
OffsetSet compute_Q(const ToeplitzSpec& spec, std::size_t i,
                    std::size_t bound = kDefaultQBound);

// Q_1 .. Q_max_i from a single forward pass of the same dynamic program.
std::vector<OffsetSet> compute_Q_sequence(const ToeplitzSpec& spec,
                                          std::size_t max_i,
                                          std::size_t bound = kDefaultQBound);

// Offsets whose whole diagonal of `a_power_i` is set.
OffsetSet compute_R(const BoolMatrix& a_power_i);

WalkSets walk_sets(const ToeplitzSpec& spec, std::size_t i,
                   PowerSequence& powers, std::size_t q_bound = kDefaultQBound);

bool is_subset(const OffsetSet& inner, const OffsetSet& outer);
bool disjoint(const OffsetSet& a, const OffsetSet& b);

/// Long-run behaviour of the walk sets.
///
/// P_i depends only on i modulo d_plus/d. R_i is periodic from `transient`
/// on with period `period` (taken from the matrix power cycle and reduced to
/// the minimal period of the R sequence itself).
struct StableWalkSets {
  std::size_t transient = 0;
  std::size_t period = 0;
  std::size_t p_period = 0;
  std::vector<OffsetSet> p_cycle;  // p_cycle[i % p_period] = P_i
  std::vector<OffsetSet> r_cycle;  // r_cycle[i % period] = R_i, i >= transient

  const OffsetSet& P(std::size_t i) const { return p_cycle[i % p_period]; }
  const OffsetSet& R(std::size_t i) const;

  // P_i = R_i for every i >= transient.
  bool stabilized_equal() const;
};

StableWalkSets stable_walksets(const ToeplitzSpec& spec, std::size_t cap = 0);

}  // namespace tperiod

#endif  // TPERIOD_WALKSETS_HPP
