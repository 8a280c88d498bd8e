#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "tperiod/toeplitz.hpp"

using namespace tperiod;

namespace {

template <typename Fn>
void for_each_two_sided(int n_max, Fn fn) {
  for (int n = 2; n <= n_max; ++n) {
    const std::uint64_t full = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t s = 1; s <= full; ++s)
      for (std::uint64_t t = 1; t <= full; ++t) fn(ToeplitzSpec::from_masks(n, s, t));
  }
}

std::vector<int> union_of(const ToeplitzSpec& spec) {
  std::vector<int> u = spec.S();
  u.insert(u.end(), spec.T().begin(), spec.T().end());
  return u;
}

}  // namespace

TEST_CASE("gcd profile examples") {
  const GcdProfile a = gcd_profile(ToeplitzSpec(6, {2, 4}, {5}));
  CHECK(a.d == 1);
  CHECK(a.d_plus == 1);
  const GcdProfile b = gcd_profile(ToeplitzSpec(4, {1}, {1}));
  CHECK(b.d == 1);
  CHECK(b.d_plus == 2);
  CHECK(b.ratio() == 2);
  const GcdProfile c = gcd_profile(ToeplitzSpec(6, {2, 4}, {2}));
  CHECK(c.d == 2);
  CHECK(c.d_plus == 2);
  CHECK_THROWS_AS(gcd_profile(ToeplitzSpec(6, {2}, {})), std::invalid_argument);
}

TEST_CASE("gcd profile against direct gcds") {
  for_each_two_sided(9, [](const ToeplitzSpec& spec) {
    const GcdProfile g = gcd_profile(spec);
    CHECK(g.d == oracle::gcd_all(union_of(spec)));
    CHECK(g.d_plus == oracle::gcd_sums(spec.S(), spec.T()));
    CHECK(g.s1 == spec.S().front());
    CHECK(g.t1 == spec.T().front());
    CHECK(g.s_max == spec.S().back());
    CHECK(g.t_max == spec.T().back());
  });
}

TEST_CASE("star condition") {
  CHECK(check_star(ToeplitzSpec(4, {1}, {1})));
  CHECK_FALSE(check_star(ToeplitzSpec(6, {2, 4}, {5})));
  CHECK_FALSE(check_star(ToeplitzSpec(5, {1, 4}, {2, 3})));
  for_each_two_sided(8, [](const ToeplitzSpec& spec) {
    const int n = spec.n();
    const bool star = spec.S().front() + spec.T().back() <= n &&
                      spec.S().back() + spec.T().front() <= n;
    CHECK(check_star(spec) == star);
  });
}

TEST_CASE("coprime pair") {
  CHECK(check_coprime_pair(ToeplitzSpec(5, {1, 4}, {2, 3})) == std::pair{1, 2});
  CHECK_FALSE(check_coprime_pair(ToeplitzSpec(6, {2, 4}, {5})));
  CHECK_FALSE(check_coprime_pair(ToeplitzSpec(4, {2}, {2})));
  for_each_two_sided(8, [](const ToeplitzSpec& spec) {
    std::optional<std::pair<int, int>> want;
    for (int s : spec.S()) {
      for (int t : spec.T())
        if (s + t <= spec.n() && std::gcd(s, t) == 1) {
          want = std::pair{s, t};
          break;
        }
      if (want) break;
    }
    CHECK(check_coprime_pair(spec) == want);
  });
}

TEST_CASE("main1 rule") {
  CHECK(check_main1(ToeplitzSpec(5, {1, 4}, {2, 3})));
  CHECK(check_main1(ToeplitzSpec(4, {2}, {2})));
  CHECK_FALSE(check_main1(ToeplitzSpec(3, {2}, {2})));
  for_each_two_sided(8, [](const ToeplitzSpec& spec) {
    const int n = spec.n();
    const int s1 = spec.S().front(), t1 = spec.T().front();
    const bool want = s1 + t1 <= n &&
                      std::max(spec.S().back(), spec.T().back()) <= n - std::gcd(s1, t1);
    CHECK(check_main1(spec) == want);
  });
}

TEST_CASE("gcd after extension") {
  GcdProfile p;
  p.d = 2;
  p.d_plus = 4;
  CHECK(gcd_after_extension(p, 3, 2) == std::pair{1, 1});
  p.d = p.d_plus = 3;
  CHECK(gcd_after_extension(p, 7, 4) == std::pair{3, 3});

  const ToeplitzSpec base(6, {2, 4}, {2});
  const GcdProfile g = gcd_profile(base);
  CHECK(gcd_after_extension(g, 5, 2) == std::pair{1, 1});
  const GcdProfile fresh = gcd_profile(base.with_s(5));
  CHECK(fresh.d == 1);
  CHECK(fresh.d_plus == 1);

  // Adding s* to S with reference s1, and to T with reference t1, against
  // recomputation from scratch.
  for_each_two_sided(8, [](const ToeplitzSpec& spec) {
    const GcdProfile g0 = gcd_profile(spec);
    for (int x = 1; x < spec.n(); ++x) {
      const GcdProfile gs = gcd_profile(spec.with_s(x));
      CHECK(gcd_after_extension(g0, x, g0.s1) == std::pair{gs.d, gs.d_plus});
      const GcdProfile gt = gcd_profile(spec.with_t(x));
      CHECK(gcd_after_extension(g0, x, g0.t1) == std::pair{gt.d, gt.d_plus});
    }
  });
}

TEST_CASE("tail extension range") {
  CHECK(tail_extension_applicable(10, 4, 7));
  CHECK_FALSE(tail_extension_applicable(10, 4, 6));
  for (int s = 1; s < 10; ++s) CHECK_FALSE(tail_extension_applicable(10, 1, s));
  CHECK(tail_extension_applicable(ToeplitzSpec(10, {4}, {8}), 9));
}

TEST_CASE("certificate examples") {
  const Certificate a = certify_walk_ensured(ToeplitzSpec(5, {1, 4}, {2, 3}));
  CHECK(a.verdict == Verdict::ProvenWalkEnsured);
  REQUIRE(a.rule);
  CHECK(*a.rule == Rule::CoprimePair);
  CHECK(std::get<PairWitness>(a.witness).s == 1);
  CHECK(std::get<PairWitness>(a.witness).t == 2);

  const Certificate b = certify_walk_ensured(ToeplitzSpec(4, {1}, {1}));
  CHECK(b.proven());
  CHECK(*b.rule == Rule::Star);

  const Certificate c = certify_walk_ensured(ToeplitzSpec(6, {2, 4}, {5}));
  CHECK(c.verdict == Verdict::Unknown);
  CHECK_FALSE(c.rule);
  CHECK_FALSE(find_extension_chain(ToeplitzSpec(6, {2, 4}, {5})));
  CHECK(describe(c) == "Unknown");
}

TEST_CASE("extension chains respect the step bound") {
  for_each_two_sided(8, [](const ToeplitzSpec& spec) {
    const auto chain = find_extension_chain(spec);
    if (!chain) return;
    const int n = spec.n();
    CHECK(chain->s + chain->t <= n);
    std::vector<int> s{chain->s}, t{chain->t};
    for (const ChainStep& step : chain->steps) {
      const int d_now = oracle::gcd_all([&] {
        auto u = s;
        u.insert(u.end(), t.begin(), t.end());
        return u;
      }());
      CHECK(step.offset <= n - d_now);
      (step.side == Side::S ? s : t).push_back(step.offset);
      auto u = s;
      u.insert(u.end(), t.begin(), t.end());
      CHECK(step.d_after == oracle::gcd_all(u));
      CHECK(step.d_plus_after == oracle::gcd_sums(s, t));
    }
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    CHECK(s == spec.S());
    CHECK(t == spec.T());
  });
}

TEST_CASE("certificates are sound against the walk-set definition") {
  for_each_two_sided(6, [](const ToeplitzSpec& spec) {
    const Certificate cert = certify_walk_ensured(spec);
    if (!cert.proven()) return;
    CAPTURE(to_string(spec));
    REQUIRE(oracle::power_cycle(oracle::toeplitz(spec)).index < 60);
    CHECK(oracle::walk_ensured_window(spec, 60, 120));
  });
}
