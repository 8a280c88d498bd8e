#ifndef TPERIOD_ORACLE_HPP
#define TPERIOD_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tperiod/spec.hpp"

namespace tperiod {

// Brute-force cross-validation harness.
//
// Ground truth is always direct matrix iteration: power cycles, R sets read
// off the powers, and the exact walk-ensured decision built on them. Every
// closed-form prediction is checked against that, never the reverse.

enum class Status { Pass, Violation, Observation };

std::string to_string(Status s);

/// One evaluated prediction. Violations can be replayed with run_check on
/// the same spec and check name.
struct Finding {
  ToeplitzSpec spec;
  std::string check;
  std::string expected;
  std::string actual;
  Status status = Status::Pass;
};

/// Check names, in report order.
///
///   period-formula         walk-ensured => matrix period = d+/d
///   competition-limit      walk-ensured, d+ <= n => limit is the
///                          congruence-class matrix
///   competition-divides    competition period divides matrix period
///                          (observation only)
///   certificate-soundness  each sufficient rule => exact decision true
///   star-implies-chain     star condition => extension chain exists
///   gcd-identities         d | d+, d = gcd(d+, min S) = gcd(d+, gcd S)
///   gcd-update             incremental gcds after adding one offset
///   set-chain              R_i <= Q_i <= P_i
///   p-periodicity          P_i = P_{i+d+/d}
///   p-disjoint             P_i .. P_{i-1+d+/d} pairwise disjoint
///   p-recurrence           P_i from P_{i-1} via -s1 / +t1 shifts
///   pqr-agreement          walk-ensured => P_i = Q_i = R_i past the index
///   residue-congruence     signed sums = (term count) * s1 mod d+
///   walk-representable     (A^m)(u,v) = 1 => v-u in Q_m
///   same-residue-walks     walk-ensured, u = v mod d => some (u,v)-walk
///   superset-period        equal gcd of sums => superset keeps the period
///   sink-source-period     quotient source/sink => extension keeps period
///   tail-extension         offset s* in (n-d, n) keeps the period
///   extension-closure      s* <= n-d keeps walk-ensuredness
///   contraction-walks      s*-arc walks project onto the quotient
///   contraction-identity   T_n<s;> / Z_d = T_d<r; d-r> for d !| s, s <= n-d
///   contraction-cycles     that quotient is a union of directed cycles
///   circulant-cycles       T_n<s; n-s> splits into gcd(n,s) residue cycles
const std::vector<std::string>& all_checks();

/// Largest n each check is evaluated at. Checks past their limit are
/// skipped silently.
int check_n_limit(const std::string& check);

inline constexpr std::size_t kSetLawMaxLength = 30;
inline constexpr std::size_t kRepresentableMaxLength = 12;
inline constexpr std::size_t kLabeledWalkMaxLength = 10;

enum class SweepMode { Exhaustive, Random };

struct SweepConfig {
  int n_min = 2;
  int n_max = 7;
  SweepMode mode = SweepMode::Exhaustive;
  std::size_t samples = 0;  // per order, random mode
  std::uint64_t seed = 0;
  std::set<std::string> checks;  // empty: every check
  std::size_t max_power = 0;     // 0: default cap
  std::size_t workers = 1;

  // Throws std::invalid_argument when out of range.
  void validate() const;
};

struct CheckTally {
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  std::size_t observations = 0;
};

struct SweepResult {
  SweepConfig config;
  std::size_t specs = 0;
  std::vector<Finding> findings;  // non-passing outcomes, enumeration order
  std::map<std::string, CheckTally> tally;

  std::size_t violations() const;
  std::size_t observations() const;
};

/// All (2^(n-1) - 1)^2 pairs of nonempty S, T in [n-1]; S outer, T inner,
/// each ascending by bitmask.
std::vector<ToeplitzSpec> enumerate_specs(int n);

// Calls `visit` on each spec in enumeration order without materializing.
void for_each_spec(int n, const std::function<void(const ToeplitzSpec&)>& visit);

/// Seeded sample of two-sided specs of order n. Identical (n, count, seed)
/// gives an identical sample on every platform.
std::vector<ToeplitzSpec> sample_specs(int n, std::size_t count,
                                       std::uint64_t seed);

/// Every outcome (including passes) of one check on one spec.
std::vector<Finding> run_check(const std::string& check,
                               const ToeplitzSpec& spec,
                               std::size_t max_power = 0);

SweepResult run_sweep(const SweepConfig& config);

/// Extension closure alone: for every exactly walk-ensured spec of order
/// 2..n_max and every s* <= n - d, both one-offset extensions must be
/// exactly walk-ensured. Returns the failing outcomes.
std::vector<Finding> extension_closure_sweep(int n_max);

/// Tab-separated report: a "#" header with the configuration, one line per
/// finding (check, spec, expected, actual, severity), and "#" summary lines.
void write_report(std::ostream& os, const SweepResult& result);

}  // namespace tperiod

#endif  // TPERIOD_ORACLE_HPP
