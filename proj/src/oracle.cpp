#include "tperiod/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tperiod/boolmat.hpp"
#include "tperiod/digraph.hpp"
#include "tperiod/engine.hpp"
#include "tperiod/toeplitz.hpp"
#include "tperiod/walksets.hpp"

namespace tperiod {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Violation: return "violation";
    case Status::Observation: return "observation";
  }
  return "?";
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names = {
      "period-formula",       "competition-limit",    "competition-divides",
      "certificate-soundness", "star-implies-chain",  "gcd-identities",
      "gcd-update",           "set-chain",            "p-periodicity",
      "p-disjoint",           "p-recurrence",         "pqr-agreement",
      "residue-congruence",   "walk-representable",   "same-residue-walks",
      "superset-period",      "sink-source-period",   "tail-extension",
      "extension-closure",    "contraction-walks",    "contraction-identity",
      "contraction-cycles",   "circulant-cycles",
  };
  return names;
}

int check_n_limit(const std::string& check) {
  static const std::map<std::string, int> limits = {
      {"gcd-update", 7},          {"set-chain", 7},
      {"p-periodicity", 7},       {"p-disjoint", 7},
      {"p-recurrence", 7},        {"pqr-agreement", 7},
      {"walk-representable", 6},  {"same-residue-walks", 7},
      {"superset-period", 6},     {"sink-source-period", 7},
      {"extension-closure", 7},   {"contraction-walks", 6},
  };
  auto it = limits.find(check);
  return it == limits.end() ? 16 : it->second;
}

namespace {

constexpr int kTableMaxN = 7;

bool is_structural(const std::string& check) {
  return check == "contraction-identity" || check == "contraction-cycles" ||
         check == "circulant-cycles";
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string set_str(const OffsetSet& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? "," : "") << xs[k];
  os << '}';
  return os.str();
}

std::string list_str(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? " " : "") << xs[k];
  os << ')';
  return os.str();
}

std::size_t mask_count(int n) { return (std::size_t{1} << (n - 1)) - 1; }

// Brute-force facts about one spec.
struct Ground {
  PowerCycle cycle;
  bool walk_ensured = false;
  std::size_t threshold = 0;
};

Ground compute_ground(const ToeplitzSpec& spec, std::size_t cap) {
  PowerSequence powers(BoolMatrix::from_toeplitz(spec));
  const PowerCycle cycle = find_power_cycle(
      powers, cap ? cap : default_power_cap(static_cast<std::size_t>(spec.n())));
  Ground g{cycle, false, 0};
  if (spec.two_sided()) {
    const ExactDecision exact = decide_walk_ensured_exact(spec, powers, cycle);
    g.walk_ensured = exact.walk_ensured;
    g.threshold = exact.threshold;
  }
  return g;
}

/// Ground facts for every two-sided spec of one order, indexed by masks.
class GroundTable {
 public:
  GroundTable(int n, std::size_t cap) : n_(n), width_(mask_count(n)) {
    entries_.resize(width_ * width_);
    for (std::uint64_t s = 1; s <= width_; ++s)
      for (std::uint64_t t = 1; t <= width_; ++t) {
        try {
          entries_[slot(s, t)] =
              compute_ground(ToeplitzSpec::from_masks(n, s, t), cap);
        } catch (const CapExceeded&) {
          entries_[slot(s, t)] = std::nullopt;
        }
      }
  }

  // nullopt when the power cap was hit for this spec.
  const std::optional<Ground>& at(const ToeplitzSpec& spec) const {
    return entries_[slot(spec.s_mask(), spec.t_mask())];
  }

  int n() const noexcept { return n_; }

 private:
  std::size_t slot(std::uint64_t s, std::uint64_t t) const {
    return (s - 1) * width_ + (t - 1);
  }

  int n_;
  std::size_t width_;
  std::vector<std::optional<Ground>> entries_;
};

/// Outcome sink for the checks.
class Recorder {
 public:
  explicit Recorder(bool keep_passes) : keep_passes_(keep_passes) {}

  void expect(const std::string& check, const ToeplitzSpec& spec,
              std::string expected, std::string actual, bool ok) {
    add(check, spec, std::move(expected), std::move(actual),
        ok ? Status::Pass : Status::Violation);
  }

  void observe(const std::string& check, const ToeplitzSpec& spec,
               std::string expected, std::string actual, bool as_expected) {
    add(check, spec, std::move(expected), std::move(actual),
        as_expected ? Status::Pass : Status::Observation);
  }

  void add(const std::string& check, const ToeplitzSpec& spec,
           std::string expected, std::string actual, Status status) {
    CheckTally& t = tally_[check];
    ++t.evaluated;
    if (status == Status::Violation) ++t.violations;
    if (status == Status::Observation) ++t.observations;
    if (status != Status::Pass || keep_passes_)
      findings_.push_back(
          {spec, check, std::move(expected), std::move(actual), status});
  }

  std::vector<Finding>& findings() { return findings_; }
  std::map<std::string, CheckTally>& tally() { return tally_; }

 private:
  bool keep_passes_;
  std::vector<Finding> findings_;
  std::map<std::string, CheckTally> tally_;
};

/// Lazily computed facts about one spec, shared by the checks.
class SpecContext {
 public:
  SpecContext(const ToeplitzSpec& spec, std::size_t cap,
              const std::map<int, GroundTable>& tables)
      : spec_(spec),
        cap_(cap),
        tables_(tables),
        powers_(BoolMatrix::from_toeplitz(spec)) {}

  const ToeplitzSpec& spec() const { return spec_; }
  std::size_t cap() const { return cap_; }
  int n() const { return spec_.n(); }
  PowerSequence& powers() { return powers_; }

  const GcdProfile& gcd() {
    if (!gcd_) gcd_ = gcd_profile(spec_);
    return *gcd_;
  }

  const Ground& ground() {
    if (!ground_) ground_ = ground_of(spec_);
    return *ground_;
  }

  // Ground facts for any other spec of the same order.
  Ground ground_of(const ToeplitzSpec& other) const {
    auto it = tables_.find(other.n());
    if (it != tables_.end()) {
      const auto& entry = it->second.at(other);
      if (!entry) throw CapExceeded("power cap exceeded for " + to_string(other));
      return *entry;
    }
    return compute_ground(other, cap_);
  }

  const std::vector<OffsetSet>& q_sequence(std::size_t max_i) {
    if (q_.size() < max_i) q_ = compute_Q_sequence(spec_, max_i);
    return q_;
  }

  const CompetitionResult& competition() {
    if (!competition_)
      competition_ = competition_analysis(powers_.base(), cap_);
    return *competition_;
  }

 private:
  ToeplitzSpec spec_;
  std::size_t cap_;
  const std::map<int, GroundTable>& tables_;
  PowerSequence powers_;
  std::optional<GcdProfile> gcd_;
  std::optional<Ground> ground_;
  std::optional<CompetitionResult> competition_;
  std::vector<OffsetSet> q_;
};

using CheckFn = void (*)(SpecContext&, Recorder&);

// --- period and competition -------------------------------------------

void check_period_formula(SpecContext& ctx, Recorder& rec) {
  const auto& g = ctx.gcd();
  const Ground& gr = ctx.ground();
  const std::size_t predicted = static_cast<std::size_t>(g.ratio());
  const std::string expected = str(predicted);
  const std::string actual = str(gr.cycle.period);
  if (gr.walk_ensured) {
    rec.expect("period-formula", ctx.spec(), expected, actual,
               gr.cycle.period == predicted);
  } else {
    // No claim for specs that are not walk-ensured.
    rec.observe("period-formula", ctx.spec(), expected + " (no claim)", actual,
                gr.cycle.period == predicted);
  }
}

void check_competition_limit(SpecContext& ctx, Recorder& rec) {
  const auto& g = ctx.gcd();
  if (!ctx.ground().walk_ensured || g.d_plus > ctx.n()) return;
  const CompetitionResult& comp = ctx.competition();
  const auto predicted = predicted_limit(ctx.spec());
  const bool matches = comp.limit && predicted && *comp.limit == *predicted;
  rec.expect("competition-limit", ctx.spec(),
             "period 1, limit = congruence mod " + str(g.d_plus),
             "period " + str(comp.period) +
                 (matches ? ", limit matches" : ", limit differs"),
             comp.period == 1 && matches);
}

void check_competition_divides(SpecContext& ctx, Recorder& rec) {
  const CompetitionResult& comp = ctx.competition();
  const std::size_t p = ctx.ground().cycle.period;
  rec.observe("competition-divides", ctx.spec(),
              "divides matrix period " + str(p),
              "competition period " + str(comp.period), p % comp.period == 0);
}

// --- certificates ------------------------------------------------------

void check_certificate_soundness(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  std::vector<std::string> fired;
  if (check_star(spec)) fired.push_back("Star");
  if (check_coprime_pair(spec)) fired.push_back("CoprimePair");
  if (check_main1(spec)) fired.push_back("Main1");
  if (find_extension_chain(spec)) fired.push_back("ExtensionChain");
  if (fired.empty()) return;
  std::string rules;
  for (const auto& r : fired) rules += (rules.empty() ? "" : "+") + r;
  const bool we = ctx.ground().walk_ensured;
  rec.expect("certificate-soundness", spec, "walk-ensured (" + rules + ")",
             we ? "walk-ensured" : "not walk-ensured", we);
}

void check_star_implies_chain(SpecContext& ctx, Recorder& rec) {
  if (!check_star(ctx.spec())) return;
  const bool found = find_extension_chain(ctx.spec()).has_value();
  rec.expect("star-implies-chain", ctx.spec(), "chain", found ? "chain" : "none",
             found);
}

// --- gcd arithmetic ----------------------------------------------------

void check_gcd_identities(SpecContext& ctx, Recorder& rec) {
  const auto& g = ctx.gcd();
  int gcd_s = 0;
  for (int s : ctx.spec().S()) gcd_s = std::gcd(gcd_s, s);
  const bool ok = g.d_plus % g.d == 0 && std::gcd(g.d_plus, g.s1) == g.d &&
                  std::gcd(g.d_plus, gcd_s) == g.d;
  rec.expect("gcd-identities", ctx.spec(), "d=" + str(g.d),
             "gcd(d+,s1)=" + str(std::gcd(g.d_plus, g.s1)) +
                 " gcd(d+,gcd S)=" + str(std::gcd(g.d_plus, gcd_s)) +
                 " d+=" + str(g.d_plus),
             ok);
}

void check_gcd_update(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  const auto& g = ctx.gcd();
  std::string failure;
  for (int added = 1; added < spec.n() && failure.empty(); ++added) {
    const GcdProfile into_s = gcd_profile(spec.with_s(added));
    const GcdProfile into_t = gcd_profile(spec.with_t(added));
    for (int ref : spec.S()) {
      auto [d, dp] = gcd_after_extension(g, added, ref);
      if (d != into_s.d || dp != into_s.d_plus)
        failure = "S+" + str(added) + " ref " + str(ref);
    }
    for (int ref : spec.T()) {
      auto [d, dp] = gcd_after_extension(g, added, ref);
      if (d != into_t.d || dp != into_t.d_plus)
        failure = "T+" + str(added) + " ref " + str(ref);
    }
  }
  rec.expect("gcd-update", spec, "matches recomputation",
             failure.empty() ? "matches" : "differs at " + failure,
             failure.empty());
}

// --- walk sets -----------------------------------------------------------

void check_set_chain(SpecContext& ctx, Recorder& rec) {
  const auto& q = ctx.q_sequence(kSetLawMaxLength);
  for (std::size_t i = 1; i <= kSetLawMaxLength; ++i) {
    const OffsetSet p = compute_P(ctx.spec(), i);
    const OffsetSet r = compute_R(ctx.powers().at(i));
    if (!is_subset(r, q[i - 1]) || !is_subset(q[i - 1], p)) {
      rec.expect("set-chain", ctx.spec(), "R <= Q <= P for i <= 30",
                 "fails at i=" + str(i) + ": R=" + set_str(r) +
                     " Q=" + set_str(q[i - 1]) + " P=" + set_str(p),
                 false);
      return;
    }
  }
  rec.expect("set-chain", ctx.spec(), "R <= Q <= P for i <= 30", "holds", true);
}

void check_p_periodicity(SpecContext& ctx, Recorder& rec) {
  const auto ratio = static_cast<std::size_t>(ctx.gcd().ratio());
  for (std::size_t i = 1; i <= kSetLawMaxLength; ++i) {
    if (compute_P(ctx.spec(), i) != compute_P(ctx.spec(), i + ratio)) {
      rec.expect("p-periodicity", ctx.spec(), "P_i = P_{i+" + str(ratio) + "}",
                 "fails at i=" + str(i), false);
      return;
    }
  }
  rec.expect("p-periodicity", ctx.spec(), "P_i = P_{i+" + str(ratio) + "}",
             "holds", true);
}

void check_p_disjoint(SpecContext& ctx, Recorder& rec) {
  const auto ratio = static_cast<std::size_t>(ctx.gcd().ratio());
  std::vector<OffsetSet> p(kSetLawMaxLength + ratio);
  for (std::size_t i = 1; i < p.size(); ++i) p[i] = compute_P(ctx.spec(), i);
  for (std::size_t i = 1; i <= kSetLawMaxLength; ++i)
    for (std::size_t a = i; a < i + ratio; ++a)
      for (std::size_t b = a + 1; b < i + ratio; ++b)
        if (!disjoint(p[a], p[b])) {
          rec.expect("p-disjoint", ctx.spec(), "disjoint window",
                     "P_" + str(a) + " meets P_" + str(b), false);
          return;
        }
  rec.expect("p-disjoint", ctx.spec(), "disjoint window", "holds", true);
}

void check_p_recurrence(SpecContext& ctx, Recorder& rec) {
  const auto& g = ctx.gcd();
  const int n = ctx.n();
  OffsetSet prev = compute_P(ctx.spec(), 1);
  for (std::size_t i = 2; i <= kSetLawMaxLength; ++i) {
    OffsetSet built;
    for (int l = -n + 1; l <= n - 1; ++l)
      if (std::binary_search(prev.begin(), prev.end(), l - g.s1) ||
          std::binary_search(prev.begin(), prev.end(), l + g.t1))
        built.push_back(l);
    OffsetSet current = compute_P(ctx.spec(), i);
    if (built != current) {
      rec.expect("p-recurrence", ctx.spec(), set_str(current),
                 "i=" + str(i) + " built " + set_str(built), false);
      return;
    }
    prev = std::move(current);
  }
  rec.expect("p-recurrence", ctx.spec(), "recurrence", "holds", true);
}

void check_pqr_agreement(SpecContext& ctx, Recorder& rec) {
  const Ground& gr = ctx.ground();
  if (!gr.walk_ensured) return;
  const auto ratio = static_cast<std::size_t>(ctx.gcd().ratio());
  const std::size_t span = std::lcm(gr.cycle.period, ratio);
  const std::size_t last = gr.threshold + span - 1;
  if (last > kDefaultQBound) return;
  const auto& q = ctx.q_sequence(last);
  for (std::size_t i = gr.threshold; i <= last; ++i) {
    const OffsetSet p = compute_P(ctx.spec(), i);
    const OffsetSet r = compute_R(ctx.powers().at(i));
    if (p != q[i - 1] || q[i - 1] != r) {
      rec.expect("pqr-agreement", ctx.spec(), "P = Q = R from i=" + str(gr.threshold),
                 "differs at i=" + str(i), false);
      return;
    }
  }
  rec.expect("pqr-agreement", ctx.spec(), "P = Q = R from i=" + str(gr.threshold),
             "holds", true);
}

void check_residue_congruence(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  const auto& g = ctx.gcd();
  std::mt19937_64 rng(spec.s_mask() * 0x9e3779b97f4a7c15ULL ^ spec.t_mask() ^
                      static_cast<std::uint64_t>(spec.n()) << 56);
  auto coeff = [&rng] { return static_cast<long>(rng() % 11) - 5; };
  for (int trial = 0; trial < 16; ++trial) {
    long sum = 0, terms = 0;
    for (int s : spec.S()) {
      const long a = coeff();
      sum += a * s;
      terms += a;
    }
    for (int t : spec.T()) {
      const long b = coeff();
      sum -= b * t;
      terms += b;
    }
    const long lhs = ((sum % g.d_plus) + g.d_plus) % g.d_plus;
    const long rhs = ((terms * g.s1 % g.d_plus) + g.d_plus) % g.d_plus;
    if (lhs != rhs) {
      rec.expect("residue-congruence", spec, str(rhs), str(lhs), false);
      return;
    }
  }
  rec.expect("residue-congruence", spec, "congruent", "congruent", true);
}

void check_walk_representable(SpecContext& ctx, Recorder& rec) {
  const auto& q = ctx.q_sequence(kRepresentableMaxLength);
  const auto n = static_cast<std::size_t>(ctx.n());
  for (std::size_t m = 1; m <= kRepresentableMaxLength; ++m) {
    const BoolMatrix& am = ctx.powers().at(m);
    for (std::size_t u = 1; u <= n; ++u)
      for (std::size_t v = 1; v <= n; ++v) {
        if (!am.at(u, v)) continue;
        const int l = static_cast<int>(v) - static_cast<int>(u);
        if (!std::binary_search(q[m - 1].begin(), q[m - 1].end(), l)) {
          rec.expect("walk-representable", ctx.spec(), "v-u in Q_m",
                     "m=" + str(m) + " u=" + str(u) + " v=" + str(v), false);
          return;
        }
      }
  }
  rec.expect("walk-representable", ctx.spec(), "v-u in Q_m", "holds", true);
}

// --- digraph structure ---------------------------------------------------

void check_same_residue_walks(SpecContext& ctx, Recorder& rec) {
  const Ground& gr = ctx.ground();
  if (!gr.walk_ensured) return;
  const auto n = static_cast<std::size_t>(ctx.n());
  const auto d = static_cast<std::size_t>(ctx.gcd().d);
  const std::size_t longest = gr.cycle.index + gr.cycle.period;
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u % d == 0 ? d : u % d; v <= n; v += d) {
      bool found = false;
      for (std::size_t len = 0; len <= longest && !found; ++len)
        found = walk_exists(ctx.powers(), u, v, len);
      if (!found) {
        rec.expect("same-residue-walks", ctx.spec(), "walk for u = v mod " + str(d),
                   "none from " + str(u) + " to " + str(v), false);
        return;
      }
    }
  rec.expect("same-residue-walks", ctx.spec(), "walk for u = v mod " + str(d),
             "holds", true);
}

void check_contraction_walks(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  const auto n = static_cast<std::size_t>(spec.n());
  const auto d = static_cast<std::size_t>(ctx.gcd().d);
  const std::size_t max_len = kLabeledWalkMaxLength;
  const BoolMatrix& base = ctx.powers().base();
  auto residue = [d](std::size_t v) { return (v - 1) % d + 1; };

  for (int s_star = 1; s_star < spec.n(); ++s_star) {
    const auto step = static_cast<std::size_t>(s_star);
    PowerSequence quotient(
        contract(Digraph::of(ToeplitzSpec(spec.n(), {s_star}, {})), d)
            .adjacency());
    for (std::size_t u = 1; u <= n; ++u) {
      // frontier[v][l]: some walk of the current length from u to v uses l
      // s*-arcs.
      std::vector<std::vector<char>> frontier(
          n + 1, std::vector<char>(max_len + 1, 0));
      frontier[u][0] = 1;
      for (std::size_t len = 0; len <= max_len; ++len) {
        for (std::size_t v = 1; v <= n; ++v)
          for (std::size_t l = 0; l <= len; ++l) {
            if (!frontier[v][l]) continue;
            if (!walk_exists(quotient, residue(u), residue(v), l)) {
              rec.expect("contraction-walks", spec,
                         "quotient walk of length " + str(l),
                         "none for s*=" + str(s_star) + " u=" + str(u) +
                             " v=" + str(v),
                         false);
              return;
            }
          }
        if (len == max_len) break;
        std::vector<std::vector<char>> next(n + 1,
                                            std::vector<char>(max_len + 1, 0));
        for (std::size_t v = 1; v <= n; ++v)
          for (std::size_t l = 0; l <= len; ++l) {
            if (!frontier[v][l]) continue;
            for (std::size_t w = 1; w <= n; ++w)
              if (base.at(v, w)) next[w][l] = 1;
            if (v + step <= n) next[v + step][l + 1] = 1;
          }
        frontier = std::move(next);
      }
    }
  }
  rec.expect("contraction-walks", spec, "every labeled walk projects", "holds",
             true);
}

// --- period transfer -----------------------------------------------------

void check_superset_period(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  if (!certify_walk_ensured(spec).proven()) return;
  const auto& g = ctx.gcd();
  const std::uint64_t width = mask_count(spec.n());
  const std::uint64_t s0 = spec.s_mask(), t0 = spec.t_mask();
  std::size_t compared = 0;
  for (std::uint64_t s = s0; s <= width; s = (s + 1) | s0) {
    for (std::uint64_t t = t0; t <= width; t = (t + 1) | t0) {
      const ToeplitzSpec sup = ToeplitzSpec::from_masks(spec.n(), s, t);
      const auto predicted = superset_same_period(spec, sup, ctx.cap());
      const bool equal_sums = gcd_profile(sup).d_plus == g.d_plus;
      if (!equal_sums) {
        if (predicted) {
          rec.expect("superset-period", spec, "no prediction", to_string(sup),
                     false);
          return;
        }
        continue;
      }
      const std::size_t brute = ctx.ground_of(sup).cycle.period;
      ++compared;
      if (!predicted || *predicted != brute ||
          brute != static_cast<std::size_t>(g.ratio())) {
        rec.expect("superset-period", spec, str(g.ratio()),
                   to_string(sup) + " has period " + str(brute), false);
        return;
      }
    }
  }
  rec.expect("superset-period", spec, "period " + str(g.ratio()),
             "holds on " + str(compared) + " supersets", true);
}

void check_sink_source_period(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  if (!ctx.ground().walk_ensured) return;
  std::size_t applied = 0;
  for (int added = 1; added < spec.n(); ++added) {
    for (const ToeplitzSpec& ext : {spec.with_s(added), spec.with_t(added)}) {
      if (ext == spec) continue;
      const auto predicted = sink_source_same_period(
          spec, BoolMatrix::from_toeplitz(ext), ctx.cap());
      if (!predicted) continue;
      ++applied;
      const std::size_t brute = ctx.ground_of(ext).cycle.period;
      if (brute != *predicted) {
        rec.expect("sink-source-period", spec, str(*predicted),
                   to_string(ext) + " has period " + str(brute), false);
        return;
      }
    }
  }
  if (applied == 0) return;
  rec.expect("sink-source-period", spec, "period kept",
             "holds on " + str(applied) + " extensions", true);
}

void check_tail_extension(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  const Ground& gr = ctx.ground();
  const int d = ctx.gcd().d;
  if (!gr.walk_ensured || d < 2) return;
  for (int s_star = spec.n() - d + 1; s_star < spec.n(); ++s_star) {
    const ToeplitzSpec ext = spec.with_s(s_star);
    const std::size_t brute = ctx.ground_of(ext).cycle.period;
    const auto predicted = sink_source_same_period(
        spec, BoolMatrix::from_toeplitz(ext), ctx.cap());
    const bool ok = tail_extension_applicable(spec, s_star) && predicted &&
                    *predicted == gr.cycle.period && brute == gr.cycle.period;
    rec.expect("tail-extension", spec, "period " + str(gr.cycle.period),
               to_string(ext) + " period " + str(brute) +
                   (predicted ? "" : ", no source/sink"),
               ok);
  }
}

void check_extension_closure(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  if (!ctx.ground().walk_ensured) return;
  const int d = ctx.gcd().d;
  for (int s_star = 1; s_star <= spec.n() - d; ++s_star) {
    for (const ToeplitzSpec& ext : {spec.with_s(s_star), spec.with_t(s_star)}) {
      const bool we = ctx.ground_of(ext).walk_ensured;
      rec.expect("extension-closure", spec, to_string(ext) + " walk-ensured",
                 we ? "walk-ensured" : "not walk-ensured", we);
    }
  }
}

// --- one-sided structural specs -----------------------------------------

// Spec T_n<s;> with S = {s}, T empty.
void check_contraction_identity(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  if (spec.S().size() != 1 || !spec.T().empty()) return;
  const int n = spec.n(), s = spec.S().front();
  const Digraph g = Digraph::of(spec);
  for (int d = 2; d <= n - s; ++d) {
    if (s % d == 0) continue;
    const int r = s % d;
    const Digraph expected = Digraph::of(ToeplitzSpec(d, {r}, {d - r}));
    const Digraph actual = contract(g, static_cast<std::size_t>(d));
    rec.expect("contraction-identity", spec,
               "d=" + str(d) + " T_" + str(d) + "<" + str(r) + ";" + str(d - r) + ">",
               actual == expected ? "equal" : "differs", actual == expected);
  }
}

void check_contraction_cycles(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  if (spec.S().size() != 1 || !spec.T().empty()) return;
  const int n = spec.n(), s = spec.S().front();
  const Digraph g = Digraph::of(spec);
  for (int d = 2; d <= n - s; ++d) {
    if (s % d == 0) continue;
    const bool ok =
        cycle_decomposition(contract(g, static_cast<std::size_t>(d))).has_value();
    rec.expect("contraction-cycles", spec, "d=" + str(d) + " cycle union",
               ok ? "cycle union" : "not a cycle union", ok);
  }
}

// Spec T_n<s; n-s>.
void check_circulant_cycles(SpecContext& ctx, Recorder& rec) {
  const ToeplitzSpec& spec = ctx.spec();
  if (spec.S().size() != 1 || spec.T().size() != 1 ||
      spec.S().front() + spec.T().front() != spec.n())
    return;
  const auto n = static_cast<std::size_t>(spec.n());
  const auto s = static_cast<std::size_t>(spec.S().front());
  const std::size_t g = std::gcd(n, s);
  std::vector<std::vector<std::size_t>> expected;
  for (std::size_t i = 1; i <= g; ++i) {
    std::vector<std::size_t> cls;
    for (std::size_t v = i; v <= n; v += g) cls.push_back(v);
    expected.push_back(std::move(cls));
  }
  auto cycles = cycle_decomposition(Digraph::of(spec));
  std::string actual = "not a cycle union";
  bool ok = false;
  if (cycles) {
    std::vector<std::vector<std::size_t>> sets = *cycles;
    for (auto& c : sets) std::sort(c.begin(), c.end());
    std::sort(sets.begin(), sets.end());
    ok = sets == expected;
    actual.clear();
    for (const auto& c : sets) actual += list_str(c);
  }
  std::string want;
  for (const auto& c : expected) want += list_str(c);
  rec.expect("circulant-cycles", spec, want, actual, ok);
}

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> fns = {
      {"period-formula", check_period_formula},
      {"competition-limit", check_competition_limit},
      {"competition-divides", check_competition_divides},
      {"certificate-soundness", check_certificate_soundness},
      {"star-implies-chain", check_star_implies_chain},
      {"gcd-identities", check_gcd_identities},
      {"gcd-update", check_gcd_update},
      {"set-chain", check_set_chain},
      {"p-periodicity", check_p_periodicity},
      {"p-disjoint", check_p_disjoint},
      {"p-recurrence", check_p_recurrence},
      {"pqr-agreement", check_pqr_agreement},
      {"residue-congruence", check_residue_congruence},
      {"walk-representable", check_walk_representable},
      {"same-residue-walks", check_same_residue_walks},
      {"superset-period", check_superset_period},
      {"sink-source-period", check_sink_source_period},
      {"tail-extension", check_tail_extension},
      {"extension-closure", check_extension_closure},
      {"contraction-walks", check_contraction_walks},
      {"contraction-identity", check_contraction_identity},
      {"contraction-cycles", check_contraction_cycles},
      {"circulant-cycles", check_circulant_cycles},
  };
  return fns;
}

void run_one(const std::string& name, SpecContext& ctx, Recorder& rec) {
  if (ctx.n() > check_n_limit(name)) return;
  if (!is_structural(name) && !ctx.spec().two_sided()) return;
  try {
    registry().at(name)(ctx, rec);
  } catch (const CapExceeded& e) {
    rec.expect(name, ctx.spec(), "cycle within cap", e.what(), false);
  }
}

std::vector<std::string> active_checks(const SweepConfig& config) {
  std::vector<std::string> out;
  for (const auto& name : all_checks())
    if (config.checks.empty() || config.checks.count(name)) out.push_back(name);
  return out;
}

// The structural checks run on these one-sided and circulant specs for
// every order in range, on top of the enumerated or sampled specs.
std::vector<ToeplitzSpec> structural_specs(int n) {
  std::vector<ToeplitzSpec> out;
  for (int s = 1; s < n; ++s) out.emplace_back(n, std::vector<int>{s}, std::vector<int>{});
  for (int s = 1; s < n; ++s)
    out.emplace_back(n, std::vector<int>{s}, std::vector<int>{n - s});
  return out;
}

struct Chunk {
  std::vector<Finding> findings;
  std::map<std::string, CheckTally> tally;
};

Chunk run_specs(const std::vector<ToeplitzSpec>& specs,
                const std::vector<std::string>& checks, std::size_t cap,
                const std::map<int, GroundTable>& tables) {
  Recorder rec(false);
  for (const auto& spec : specs) {
    SpecContext ctx(spec, cap, tables);
    for (const auto& name : checks) run_one(name, ctx, rec);
  }
  return {std::move(rec.findings()), std::move(rec.tally())};
}

void merge(SweepResult& into, Chunk&& chunk) {
  for (auto& f : chunk.findings) into.findings.push_back(std::move(f));
  for (const auto& [name, t] : chunk.tally) {
    CheckTally& acc = into.tally[name];
    acc.evaluated += t.evaluated;
    acc.violations += t.violations;
    acc.observations += t.observations;
  }
}

}  // namespace

void SweepConfig::validate() const {
  if (n_min < 2 || n_max > 16 || n_min > n_max)
    throw std::invalid_argument("order range must lie within [2, 16]");
  if (mode == SweepMode::Exhaustive && n_max > 8)
    throw std::invalid_argument("exhaustive mode needs n <= 8");
  if (workers == 0) throw std::invalid_argument("need at least one worker");
  for (const auto& name : checks)
    if (!registry().count(name))
      throw std::invalid_argument("unknown check '" + name + "'");
}

std::size_t SweepResult::violations() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [](const Finding& f) { return f.status == Status::Violation; }));
}

std::size_t SweepResult::observations() const {
  return findings.size() - violations();
}

std::vector<ToeplitzSpec> enumerate_specs(int n) {
  std::vector<ToeplitzSpec> out;
  for_each_spec(n, [&out](const ToeplitzSpec& s) { out.push_back(s); });
  return out;
}

void for_each_spec(int n,
                   const std::function<void(const ToeplitzSpec&)>& visit) {
  if (n < 2 || n > 64) throw std::invalid_argument("order outside [2, 64]");
  const std::uint64_t width = n - 1 >= 64 ? ~std::uint64_t{0} : mask_count(n);
  for (std::uint64_t s = 1; s <= width; ++s)
    for (std::uint64_t t = 1; t <= width; ++t)
      visit(ToeplitzSpec::from_masks(n, s, t));
}

std::vector<ToeplitzSpec> sample_specs(int n, std::size_t count,
                                       std::uint64_t seed) {
  if (n < 2 || n > 64) throw std::invalid_argument("order outside [2, 64]");
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
  const std::uint64_t mask = mask_count(n);
  auto draw = [&] {
    std::uint64_t m = 0;
    while (m == 0) m = rng() & mask;
    return m;
  };
  std::vector<ToeplitzSpec> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t s = draw();
    const std::uint64_t t = draw();
    out.push_back(ToeplitzSpec::from_masks(n, s, t));
  }
  return out;
}

std::vector<Finding> run_check(const std::string& check,
                               const ToeplitzSpec& spec,
                               std::size_t max_power) {
  if (!registry().count(check))
    throw std::invalid_argument("unknown check '" + check + "'");
  const std::map<int, GroundTable> no_tables;
  Recorder rec(true);
  SpecContext ctx(spec, max_power, no_tables);
  run_one(check, ctx, rec);
  return std::move(rec.findings());
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  const auto checks = active_checks(config);

  std::vector<std::string> spec_checks, structural;
  for (const auto& c : checks) (is_structural(c) ? structural : spec_checks).push_back(c);

  // Periods and exact decisions of neighbouring specs are looked up often
  // enough that small orders get a full table up front.
  std::map<int, GroundTable> tables;
  const bool needs_table = std::any_of(
      spec_checks.begin(), spec_checks.end(), [](const std::string& c) {
        return c == "superset-period" || c == "sink-source-period" ||
               c == "extension-closure" || c == "tail-extension";
      });
  if (needs_table)
    for (int n = config.n_min; n <= std::min(config.n_max, kTableMaxN); ++n)
      tables.emplace(n, GroundTable(n, config.max_power));

  SweepResult result;
  result.config = config;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    std::vector<ToeplitzSpec> specs =
        config.mode == SweepMode::Exhaustive
            ? enumerate_specs(n)
            : sample_specs(n, config.samples, config.seed);
    result.specs += specs.size();

    const std::size_t workers =
        std::max<std::size_t>(1, std::min(config.workers, specs.size()));
    if (workers == 1) {
      merge(result, run_specs(specs, spec_checks, config.max_power, tables));
    } else {
      std::vector<Chunk> chunks(workers);
      std::vector<std::thread> threads;
      const std::size_t per = (specs.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          const std::size_t lo = std::min(specs.size(), w * per);
          const std::size_t hi = std::min(specs.size(), lo + per);
          std::vector<ToeplitzSpec> part(specs.begin() + static_cast<long>(lo),
                                         specs.begin() + static_cast<long>(hi));
          chunks[w] = run_specs(part, spec_checks, config.max_power, tables);
        });
      }
      for (auto& t : threads) t.join();
      for (auto& c : chunks) merge(result, std::move(c));
    }

    if (!structural.empty())
      merge(result, run_specs(structural_specs(n), structural,
                              config.max_power, tables));
  }
  return result;
}

std::vector<Finding> extension_closure_sweep(int n_max) {
  SweepConfig config;
  config.n_min = 2;
  config.n_max = n_max;
  config.checks = {"extension-closure"};
  return run_sweep(config).findings;
}

void write_report(std::ostream& os, const SweepResult& result) {
  const SweepConfig& c = result.config;
  os << "# sweep\tmode=" << (c.mode == SweepMode::Exhaustive ? "exhaustive" : "random")
     << "\tn=" << c.n_min << ".." << c.n_max << "\tsamples=" << c.samples
     << "\tseed=" << c.seed << "\tmax_power=";
  if (c.max_power) os << c.max_power; else os << "default";
  os << "\tchecks=";
  if (c.checks.empty()) {
    os << "all";
  } else {
    bool first = true;
    for (const auto& name : c.checks) {
      os << (first ? "" : ",") << name;
      first = false;
    }
  }
  os << '\n';
  for (const auto& f : result.findings)
    os << f.check << '\t' << to_string(f.spec) << '\t' << f.expected << '\t'
       << f.actual << '\t' << to_string(f.status) << '\n';
  std::size_t evaluated = 0;
  for (const auto& name : all_checks()) {
    auto it = result.tally.find(name);
    if (it == result.tally.end()) continue;
    evaluated += it->second.evaluated;
    os << "# check\t" << name << "\tevaluated=" << it->second.evaluated
       << "\tviolations=" << it->second.violations
       << "\tobservations=" << it->second.observations << '\n';
  }
  os << "# summary\tspecs=" << result.specs << "\tevaluated=" << evaluated
     << "\tviolations=" << result.violations()
     << "\tobservations=" << result.observations() << '\n';
}

}  // namespace tperiod
