#ifndef TPERIOD_TOEPLITZ_HPP
#define TPERIOD_TOEPLITZ_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tperiod/spec.hpp"

namespace tperiod {

/// gcd constants of a two-sided spec.
///
/// d = gcd(S u T) and d_plus = gcd(s + t : s in S, t in T). Every d divides
/// d_plus and d = gcd(d_plus, min S).
struct GcdProfile {
  int d = 0;
  int d_plus = 0;
  int s1 = 0;
  int t1 = 0;
  int s_max = 0;
  int t_max = 0;

  // Length of the cycle of residues i*s1 mod d_plus.
  int ratio() const noexcept { return d_plus / d; }
};

// Throws std::invalid_argument if S or T is empty.
GcdProfile gcd_profile(const ToeplitzSpec& spec);

bool check_star(const ToeplitzSpec& spec);

// Lexicographically smallest (s, t) with s + t <= n and gcd(s, t) = 1.
std::optional<std::pair<int, int>> check_coprime_pair(const ToeplitzSpec& spec);

bool check_main1(const ToeplitzSpec& spec);

/// (gcd(d, added - ref), gcd(d_plus, added - ref)): the pair (d, d_plus)
/// after inserting `added` into S, where `ref` is any element already in S.
/// The same formula covers insertion into T with `ref` taken from T.
std::pair<int, int> gcd_after_extension(const GcdProfile& profile, int added,
                                        int ref);

// n - gcd(S u T) < s_star < n.
bool tail_extension_applicable(int n, int d, int s_star);
bool tail_extension_applicable(const ToeplitzSpec& spec, int s_star);

enum class Verdict { ProvenWalkEnsured, ProvenByExactDecision, NotWalkEnsured, Unknown };
enum class Rule { Star, CoprimePair, Main1, ExtensionChain, ExactDecision };

std::string to_string(Verdict v);
std::string to_string(Rule r);

enum class Side { S, T };

struct ChainStep {
  Side side;
  int offset;
  int d_after;
  int d_plus_after;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct StarWitness {
  int min_s_plus_max_t;
  int max_s_plus_min_t;
};
struct PairWitness {
  int s;
  int t;
};
struct Main1Witness {
  int s1_plus_t1;
  int max_offset;
  int gcd_s1_t1;
};
/// Base pair (s, t) with s + t <= n followed by the order in which the
/// remaining offsets were added.
struct ChainWitness {
  int s;
  int t;
  std::vector<ChainStep> steps;
};
// Index from which P_i = R_i holds.
struct ThresholdWitness {
  std::size_t threshold;
};

using Witness = std::variant<std::monostate, StarWitness, PairWitness,
                             Main1Witness, ChainWitness, ThresholdWitness>;

struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::optional<Rule> rule;
  Witness witness;

  bool proven() const noexcept {
    return verdict == Verdict::ProvenWalkEnsured ||
           verdict == Verdict::ProvenByExactDecision;
  }
};

std::string describe(const Certificate& cert);

/// Extension-chain search on its own: tries every base pair with s + t <= n
/// and greedily adds the remaining offsets in ascending order (S before T on
/// ties), each legal once it is <= n - d of the offsets taken so far.
std::optional<ChainWitness> find_extension_chain(const ToeplitzSpec& spec);

/// Sufficient-condition certifier. Rules are tried in order: star, coprime
/// pair, main1, extension chain. Returns Unknown when none applies; it never
/// proves a negative.
Certificate certify_walk_ensured(const ToeplitzSpec& spec);

}  // namespace tperiod

#endif  // TPERIOD_TOEPLITZ_HPP
