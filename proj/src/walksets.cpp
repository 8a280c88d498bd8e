#include "tperiod/walksets.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tperiod/cycle.hpp"
#include "tperiod/toeplitz.hpp"

namespace tperiod {

namespace {

// Non-negative representative of x mod m.
long mod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

OffsetSet compute_P(const ToeplitzSpec& spec, std::size_t i) {
  if (i == 0) throw std::out_of_range("walk length must be positive");
  const GcdProfile g = gcd_profile(spec);
  const long target = mod(static_cast<long>(i) * g.s1, g.d_plus);
  OffsetSet out;
  for (int l = -spec.n() + 1; l <= spec.n() - 1; ++l)
    if (mod(l, g.d_plus) == target) out.push_back(l);
  return out;
}

OffsetSet compute_Q(const ToeplitzSpec& spec, std::size_t i,
                    std::size_t bound) {
  if (i == 0) throw std::out_of_range("Q length must be positive");
  return compute_Q_sequence(spec, i, bound).back();
}

std::vector<OffsetSet> compute_Q_sequence(const ToeplitzSpec& spec,
                                          std::size_t max_i,
                                          std::size_t bound) {
  if (max_i > bound)
    throw std::out_of_range("Q length " + std::to_string(max_i) +
                            " above bound " + std::to_string(bound));
  const int s_max = spec.S().empty() ? 0 : spec.S().back();
  const int t_max = spec.T().empty() ? 0 : spec.T().back();
  std::vector<int> steps(spec.S().begin(), spec.S().end());
  for (int t : spec.T()) steps.push_back(-t);

  // reach[x - lo] marks the partial sums x reachable in `len` steps; the
  // window covers every partial sum up to max_i steps.
  const long lo = -static_cast<long>(max_i) * t_max;
  const long hi = static_cast<long>(max_i) * s_max;
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<char> reach(width, 0), next(width, 0);
  reach[static_cast<std::size_t>(-lo)] = 1;

  std::vector<OffsetSet> out;
  out.reserve(max_i);
  for (std::size_t len = 1; len <= max_i; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t x = 0; x < width; ++x) {
      if (!reach[x]) continue;
      for (int step : steps) {
        const long y = static_cast<long>(x) + step;
        if (y >= 0 && y < static_cast<long>(width))
          next[static_cast<std::size_t>(y)] = 1;
      }
    }
    reach.swap(next);

    OffsetSet q;
    for (int l = -spec.n() + 1; l <= spec.n() - 1; ++l) {
      const long x = l - lo;
      if (x >= 0 && x < static_cast<long>(width) &&
          reach[static_cast<std::size_t>(x)])
        q.push_back(l);
    }
    out.push_back(std::move(q));
  }
  return out;
}

OffsetSet compute_R(const BoolMatrix& a_power_i) {
  const auto n = static_cast<int>(a_power_i.order());
  OffsetSet out;
  for (int l = -n + 1; l <= n - 1; ++l) {
    bool full = true;
    for (int u = std::max(1, 1 - l); full && u <= std::min(n, n - l); ++u)
      full = a_power_i.at(static_cast<std::size_t>(u),
                          static_cast<std::size_t>(u + l));
    if (full) out.push_back(l);
  }
  return out;
}

WalkSets walk_sets(const ToeplitzSpec& spec, std::size_t i,
                   PowerSequence& powers, std::size_t q_bound) {
  return {i, compute_P(spec, i), compute_Q(spec, i, q_bound),
          compute_R(powers.at(i))};
}

bool is_subset(const OffsetSet& inner, const OffsetSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool disjoint(const OffsetSet& a, const OffsetSet& b) {
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(both));
  return both.empty();
}

const OffsetSet& StableWalkSets::R(std::size_t i) const {
  if (i < transient) throw std::out_of_range("R requested before transient");
  return r_cycle[i % period];
}

bool StableWalkSets::stabilized_equal() const {
  const std::size_t span = std::lcm(period, p_period);
  for (std::size_t i = transient; i < transient + span; ++i)
    if (P(i) != R(i)) return false;
  return true;
}

StableWalkSets stable_walksets(const ToeplitzSpec& spec, std::size_t cap) {
  const GcdProfile g = gcd_profile(spec);
  PowerSequence powers(BoolMatrix::from_toeplitz(spec));
  const auto n = static_cast<std::size_t>(spec.n());
  const PowerCycle cycle =
      find_power_cycle(powers, cap ? cap : default_power_cap(n));

  std::vector<OffsetSet> r_terms;
  for (std::size_t m = 1; m < cycle.index + cycle.period; ++m)
    r_terms.push_back(compute_R(powers.at(m)));
  const TailCycle r_cycle = tail_cycle(r_terms, cycle.index, cycle.period);

  StableWalkSets out;
  out.transient = r_cycle.index;
  out.period = r_cycle.period;
  out.p_period = static_cast<std::size_t>(g.ratio());
  out.p_cycle.resize(out.p_period);
  for (std::size_t i = 1; i <= out.p_period; ++i)
    out.p_cycle[i % out.p_period] = compute_P(spec, i);
  out.r_cycle.resize(out.period);
  for (std::size_t i = out.transient; i < out.transient + out.period; ++i) {
    // Terms past the stored window repeat with the power cycle.
    std::size_t m = i;
    if (m >= cycle.index) m = cycle.index + (m - cycle.index) % cycle.period;
    out.r_cycle[i % out.period] = r_terms[m - 1];
  }
  return out;
}

}  // namespace tperiod
