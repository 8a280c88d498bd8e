#include "tperiod/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tperiod/cycle.hpp"
#include "tperiod/digraph.hpp"
#include "tperiod/walksets.hpp"

namespace tperiod {

namespace {

std::size_t resolve_cap(std::size_t cap, std::size_t n) {
  return cap ? cap : default_power_cap(n);
}

std::vector<BoolMatrix> competition_terms(PowerSequence& powers,
                                          const PowerCycle& cycle) {
  std::vector<BoolMatrix> terms;
  for (std::size_t m = 1; m < cycle.index + cycle.period; ++m) {
    const BoolMatrix& am = powers.at(m);
    terms.push_back(am * am.transpose());
  }
  return terms;
}

CompetitionResult competition_from(PowerSequence& powers,
                                   const PowerCycle& cycle) {
  const auto terms = competition_terms(powers, cycle);
  const TailCycle tail = tail_cycle(terms, cycle.index, cycle.period);
  CompetitionResult out{tail.index, tail.period, std::nullopt};
  if (tail.period == 1) out.limit = terms[tail.index - 1];
  return out;
}

bool subset(const std::vector<int>& inner, const std::vector<int>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

PowerCycle matrix_period(const BoolMatrix& a, std::size_t cap) {
  return find_power_cycle(a, resolve_cap(cap, a.order()));
}

CompetitionResult competition_analysis(const BoolMatrix& a, std::size_t cap) {
  PowerSequence powers(a);
  const PowerCycle cycle = find_power_cycle(powers, resolve_cap(cap, a.order()));
  return competition_from(powers, cycle);
}

std::optional<BoolMatrix> predicted_limit(const ToeplitzSpec& spec) {
  const GcdProfile g = gcd_profile(spec);
  const auto n = static_cast<std::size_t>(spec.n());
  const auto dp = static_cast<std::size_t>(g.d_plus);
  if (dp > n) return std::nullopt;
  return BoolMatrix::from_predicate(n, [dp](std::size_t x, std::size_t y) {
    return (x > y ? x - y : y - x) % dp == 0;
  });
}

bool limit_matches(const BoolMatrix& observed, const BoolMatrix& predicted,
                   LimitComparison mode) {
  if (observed.order() != predicted.order()) return false;
  if (mode == LimitComparison::Full) return observed == predicted;
  const std::size_t n = observed.order();
  for (std::size_t x = 1; x <= n; ++x)
    for (std::size_t y = 1; y <= n; ++y)
      if (x != y && observed.at(x, y) != predicted.at(x, y)) return false;
  return true;
}

ExactDecision decide_walk_ensured_exact(const ToeplitzSpec& spec,
                                        PowerSequence& powers,
                                        const PowerCycle& cycle,
                                        std::size_t window) {
  const GcdProfile g = gcd_profile(spec);
  const std::size_t span =
      std::lcm(cycle.period, static_cast<std::size_t>(g.ratio())) *
      std::max<std::size_t>(window, 1);
  ExactDecision out{true, cycle.index, cycle};
  for (std::size_t i = cycle.index; i < cycle.index + span; ++i) {
    if (compute_P(spec, i) != compute_R(powers.at(i))) {
      out.walk_ensured = false;
      out.threshold = 0;
      break;
    }
  }
  return out;
}

ExactDecision decide_walk_ensured_exact(const ToeplitzSpec& spec,
                                        std::size_t cap, std::size_t window) {
  PowerSequence powers(BoolMatrix::from_toeplitz(spec));
  const PowerCycle cycle =
      find_power_cycle(powers, resolve_cap(cap, static_cast<std::size_t>(spec.n())));
  return decide_walk_ensured_exact(spec, powers, cycle, window);
}

namespace {

Certificate certificate_with(const ToeplitzSpec& spec,
                             const auto& decide_exact) {
  Certificate cert = certify_walk_ensured(spec);
  if (cert.verdict != Verdict::Unknown) return cert;
  const ExactDecision exact = decide_exact();
  if (exact.walk_ensured) {
    return {Verdict::ProvenByExactDecision, Rule::ExactDecision,
            ThresholdWitness{exact.threshold}};
  }
  return {Verdict::NotWalkEnsured, Rule::ExactDecision, std::monostate{}};
}

}  // namespace

Certificate full_certificate(const ToeplitzSpec& spec, std::size_t cap) {
  return certificate_with(
      spec, [&] { return decide_walk_ensured_exact(spec, cap); });
}

std::optional<TheoremPeriod> period_via_theorem(const ToeplitzSpec& spec,
                                                std::size_t cap) {
  Certificate cert = full_certificate(spec, cap);
  if (!cert.proven()) return std::nullopt;
  const GcdProfile g = gcd_profile(spec);
  return TheoremPeriod{static_cast<std::size_t>(g.ratio()), std::move(cert)};
}

std::optional<std::size_t> superset_same_period(const ToeplitzSpec& base,
                                                const ToeplitzSpec& extended,
                                                std::size_t cap) {
  if (base.n() != extended.n() || !subset(base.S(), extended.S()) ||
      !subset(base.T(), extended.T()))
    throw std::invalid_argument("superset_same_period: " + to_string(base) +
                                " is not contained in " + to_string(extended));
  const GcdProfile g = gcd_profile(base);
  if (g.d_plus != gcd_profile(extended).d_plus) return std::nullopt;
  if (!full_certificate(base, cap).proven()) return std::nullopt;
  return static_cast<std::size_t>(g.ratio());
}

std::optional<std::size_t> sink_source_same_period(const ToeplitzSpec& base,
                                                   const BoolMatrix& b,
                                                   std::size_t cap) {
  const BoolMatrix a = BoolMatrix::from_toeplitz(base);
  if (a.order() != b.order() || !a.is_below(b))
    throw std::invalid_argument("sink_source_same_period: A is not below B");
  const GcdProfile g = gcd_profile(base);
  const Digraph quotient =
      contract(Digraph(b.minus(a)), static_cast<std::size_t>(g.d));
  if (!has_source_or_sink(quotient)) return std::nullopt;
  if (!full_certificate(base, cap).proven()) return std::nullopt;
  return static_cast<std::size_t>(g.ratio());
}

std::optional<bool> PeriodReport::limit_matches_prediction() const {
  if (!predicted) return std::nullopt;
  return limit_matrix && limit_matches(*limit_matrix, *predicted);
}

PeriodReport analyze(const ToeplitzSpec& spec, std::size_t cap) {
  const auto n = static_cast<std::size_t>(spec.n());
  PowerSequence powers(BoolMatrix::from_toeplitz(spec));
  const PowerCycle cycle = find_power_cycle(powers, resolve_cap(cap, n));
  CompetitionResult comp = competition_from(powers, cycle);

  PeriodReport report{.spec = spec};
  report.matrix_index = cycle.index;
  report.matrix_period = cycle.period;
  report.competition_index = comp.index;
  report.competition_period = comp.period;
  report.limit_matrix = std::move(comp.limit);
  if (spec.two_sided()) {
    report.gcd = gcd_profile(spec);
    report.predicted = predicted_limit(spec);
    report.certificate = certificate_with(spec, [&] {
      return decide_walk_ensured_exact(spec, powers, cycle);
    });
  }
  return report;
}

}  // namespace tperiod
