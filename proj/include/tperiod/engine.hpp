#ifndef TPERIOD_ENGINE_HPP
#define TPERIOD_ENGINE_HPP

#include <cstddef>
#include <optional>

#include "tperiod/boolmat.hpp"
#include "tperiod/spec.hpp"
#include "tperiod/toeplitz.hpp"

namespace tperiod {

// A cap of 0 selects default_power_cap(n) throughout this header.

/// Matrix index and period: A^m = A^(m+period) for all m >= index, both
/// minimal, with m ranging over positive powers.
PowerCycle matrix_period(const BoolMatrix& a, std::size_t cap = 0);

/// Transient and period of B_m = A^m (A^T)^m.
///
/// The B sequence is not a recurrence on its own, so it is read off the
/// power cycle of A: B_m repeats with period dividing the matrix period from
/// the matrix index on, and the exact tail cycle is extracted from there.
struct CompetitionResult {
  std::size_t index = 0;
  std::size_t period = 0;
  std::optional<BoolMatrix> limit;  // present iff period == 1
};

CompetitionResult competition_analysis(const BoolMatrix& a,
                                       std::size_t cap = 0);

/// Congruence-class matrix: (x, y) = 1 iff x = y mod d_plus, diagonal
/// included. nullopt when d_plus > n.
std::optional<BoolMatrix> predicted_limit(const ToeplitzSpec& spec);

enum class LimitComparison { Full, OffDiagonal };

bool limit_matches(const BoolMatrix& observed, const BoolMatrix& predicted,
                   LimitComparison mode = LimitComparison::Full);

struct ExactDecision {
  bool walk_ensured = false;
  std::size_t threshold = 0;  // M with P_i = R_i for i >= M; valid if walk_ensured
  PowerCycle cycle;
};

/// Decides walk-ensuredness exactly. R_i is periodic from the matrix index a
/// with the matrix period p, and P_i has period d_plus/d, so comparing the
/// two over [a, a + lcm(p, d_plus/d)) settles every later i.
/// `window` multiplies the scan length (1 is already complete).
ExactDecision decide_walk_ensured_exact(const ToeplitzSpec& spec,
                                        std::size_t cap = 0,
                                        std::size_t window = 1);
ExactDecision decide_walk_ensured_exact(const ToeplitzSpec& spec,
                                        PowerSequence& powers,
                                        const PowerCycle& cycle,
                                        std::size_t window = 1);

// Sufficient rules first, then the exact decision.
Certificate full_certificate(const ToeplitzSpec& spec, std::size_t cap = 0);

struct TheoremPeriod {
  std::size_t period;
  Certificate certificate{};
};

// d_plus/d when the spec is walk-ensured; nullopt otherwise.
std::optional<TheoremPeriod> period_via_theorem(const ToeplitzSpec& spec,
                                                std::size_t cap = 0);

/// Period of T_n<S*;T*> predicted from a walk-ensured base T_n<S;T> with
/// S <= S*, T <= T* and equal gcd of sums. Throws std::invalid_argument if
/// the subset relation fails.
std::optional<std::size_t> superset_same_period(const ToeplitzSpec& base,
                                                const ToeplitzSpec& extended,
                                                std::size_t cap = 0);

/// Period of B predicted from a walk-ensured T_n<S;T> = A <= B: when the
/// quotient of D(B - A) by gcd(S u T) has a source or a sink, B shares the
/// period d_plus/d of A. Throws std::invalid_argument unless A <= B.
std::optional<std::size_t> sink_source_same_period(const ToeplitzSpec& base,
                                                   const BoolMatrix& b,
                                                   std::size_t cap = 0);

struct PeriodReport {
  ToeplitzSpec spec;
  std::optional<GcdProfile> gcd{};  // absent for one-sided specs
  std::size_t matrix_index = 0;
  std::size_t matrix_period = 0;
  std::size_t competition_index = 0;
  std::size_t competition_period = 0;
  std::optional<BoolMatrix> limit_matrix{};
  std::optional<BoolMatrix> predicted{};
  Certificate certificate{};

  bool walk_ensured() const noexcept { return certificate.proven(); }
  std::optional<bool> limit_matches_prediction() const;
};

PeriodReport analyze(const ToeplitzSpec& spec, std::size_t cap = 0);

}  // namespace tperiod

#endif  // TPERIOD_ENGINE_HPP
