#include "tperiod/toeplitz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tperiod {

namespace {

void require_two_sided(const ToeplitzSpec& spec) {
  if (!spec.two_sided())
    throw std::invalid_argument("S and T must both be nonempty: " +
                                to_string(spec));
}

}  // namespace

GcdProfile gcd_profile(const ToeplitzSpec& spec) {
  require_two_sided(spec);
  GcdProfile p;
  for (int x : spec.S()) p.d = std::gcd(p.d, x);
  for (int x : spec.T()) p.d = std::gcd(p.d, x);
  for (int s : spec.S())
    for (int t : spec.T()) p.d_plus = std::gcd(p.d_plus, s + t);
  p.s1 = spec.S().front();
  p.t1 = spec.T().front();
  p.s_max = spec.S().back();
  p.t_max = spec.T().back();
  return p;
}

bool check_star(const ToeplitzSpec& spec) {
  require_two_sided(spec);
  const int n = spec.n();
  return spec.S().front() + spec.T().back() <= n &&
         spec.S().back() + spec.T().front() <= n;
}

std::optional<std::pair<int, int>> check_coprime_pair(
    const ToeplitzSpec& spec) {
  require_two_sided(spec);
  for (int s : spec.S())
    for (int t : spec.T())
      if (s + t <= spec.n() && std::gcd(s, t) == 1) return std::pair{s, t};
  return std::nullopt;
}

bool check_main1(const ToeplitzSpec& spec) {
  require_two_sided(spec);
  const int n = spec.n();
  const int s1 = spec.S().front();
  const int t1 = spec.T().front();
  return s1 + t1 <= n &&
         std::max(spec.S().back(), spec.T().back()) <= n - std::gcd(s1, t1);
}

std::pair<int, int> gcd_after_extension(const GcdProfile& profile, int added,
                                        int ref) {
  const int diff = added - ref;
  return {std::gcd(profile.d, diff), std::gcd(profile.d_plus, diff)};
}

bool tail_extension_applicable(int n, int d, int s_star) {
  return n - d < s_star && s_star < n;
}

bool tail_extension_applicable(const ToeplitzSpec& spec, int s_star) {
  return tail_extension_applicable(spec.n(), gcd_profile(spec).d, s_star);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvenWalkEnsured: return "ProvenWalkEnsured";
    case Verdict::ProvenByExactDecision: return "ProvenByExactDecision";
    case Verdict::NotWalkEnsured: return "NotWalkEnsured";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::Star: return "Star";
    case Rule::CoprimePair: return "CoprimePair";
    case Rule::Main1: return "Main1";
    case Rule::ExtensionChain: return "ExtensionChain";
    case Rule::ExactDecision: return "ExactDecision";
  }
  return "?";
}

std::string describe(const Certificate& cert) {
  std::ostringstream os;
  os << to_string(cert.verdict);
  if (cert.rule) os << " by " << to_string(*cert.rule);
  std::visit(
      [&os](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, StarWitness>) {
          os << " (min S + max T = " << w.min_s_plus_max_t
             << ", max S + min T = " << w.max_s_plus_min_t << ")";
        } else if constexpr (std::is_same_v<W, PairWitness>) {
          os << " (s=" << w.s << ", t=" << w.t << ")";
        } else if constexpr (std::is_same_v<W, Main1Witness>) {
          os << " (s1+t1 = " << w.s1_plus_t1 << ", max = " << w.max_offset
             << ", gcd(s1,t1) = " << w.gcd_s1_t1 << ")";
        } else if constexpr (std::is_same_v<W, ChainWitness>) {
          os << " (base s=" << w.s << ", t=" << w.t;
          for (const auto& step : w.steps)
            os << ", +" << (step.side == Side::S ? "S" : "T") << step.offset;
          os << ")";
        } else if constexpr (std::is_same_v<W, ThresholdWitness>) {
          os << " (M=" << w.threshold << ")";
        }
      },
      cert.witness);
  return os.str();
}

std::optional<ChainWitness> find_extension_chain(const ToeplitzSpec& spec) {
  require_two_sided(spec);
  const int n = spec.n();

  struct Pending {
    int offset;
    Side side;
  };

  for (int s : spec.S()) {
    for (int t : spec.T()) {
      if (s + t > n) continue;

      std::vector<Pending> pending;
      for (int x : spec.S())
        if (x != s) pending.push_back({x, Side::S});
      for (int x : spec.T())
        if (x != t) pending.push_back({x, Side::T});
      std::stable_sort(pending.begin(), pending.end(),
                       [](const Pending& a, const Pending& b) {
                         return a.offset < b.offset;
                       });

      GcdProfile current;
      current.d = std::gcd(s, t);
      current.d_plus = s + t;
      ChainWitness chain{s, t, {}};

      bool progressed = true;
      while (!pending.empty() && progressed) {
        progressed = false;
        std::vector<Pending> deferred;
        for (const Pending& p : pending) {
          if (p.offset > n - current.d) {
            deferred.push_back(p);
            continue;
          }
          const int ref = p.side == Side::S ? s : t;
          auto [d, d_plus] = gcd_after_extension(current, p.offset, ref);
          current.d = d;
          current.d_plus = d_plus;
          chain.steps.push_back({p.side, p.offset, d, d_plus});
          progressed = true;
        }
        pending = std::move(deferred);
      }
      if (pending.empty()) return chain;
    }
  }
  return std::nullopt;
}

Certificate certify_walk_ensured(const ToeplitzSpec& spec) {
  require_two_sided(spec);
  const int s1 = spec.S().front();
  const int t1 = spec.T().front();

  if (check_star(spec)) {
    return {Verdict::ProvenWalkEnsured, Rule::Star,
            StarWitness{s1 + spec.T().back(), spec.S().back() + t1}};
  }
  if (auto pair = check_coprime_pair(spec)) {
    return {Verdict::ProvenWalkEnsured, Rule::CoprimePair,
            PairWitness{pair->first, pair->second}};
  }
  if (check_main1(spec)) {
    return {Verdict::ProvenWalkEnsured, Rule::Main1,
            Main1Witness{s1 + t1, std::max(spec.S().back(), spec.T().back()),
                         std::gcd(s1, t1)}};
  }
  if (auto chain = find_extension_chain(spec)) {
    return {Verdict::ProvenWalkEnsured, Rule::ExtensionChain,
            std::move(*chain)};
  }
  return {};
}

}  // namespace tperiod
