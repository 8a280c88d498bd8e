#include "doctest.h"

#include <random>
#include <sstream>

#include "support.hpp"
#include "tperiod/boolmat.hpp"

using tperiod::BoolMatrix;
using tperiod::ToeplitzSpec;
using support::from_dense;
using support::to_dense;

TEST_CASE("from_toeplitz places the diagonals") {
  const BoolMatrix a = BoolMatrix::from_toeplitz(ToeplitzSpec(6, {2, 4}, {5}));
  for (std::size_t i = 1; i <= 6; ++i)
    for (std::size_t j = 1; j <= 6; ++j) {
      const int diff = static_cast<int>(j) - static_cast<int>(i);
      CHECK(a.at(i, j) == (diff == 2 || diff == 4 || diff == -5));
    }
  CHECK(a.count() == 4 + 2 + 1);
  CHECK(BoolMatrix::from_toeplitz(ToeplitzSpec(3, {}, {})).is_zero());

  const BoolMatrix path = BoolMatrix::from_toeplitz(ToeplitzSpec(4, {1}, {1}));
  std::ostringstream os;
  os << path;
  CHECK(os.str() == "0100\n1010\n0101\n0010\n");
}

TEST_CASE("at is bounds checked") {
  const BoolMatrix z = BoolMatrix::zero(3);
  CHECK_THROWS_AS((void)z.at(0, 1), std::out_of_range);
  CHECK_THROWS_AS((void)z.at(1, 4), std::out_of_range);
}

TEST_CASE("identity and zero laws") {
  const BoolMatrix a = BoolMatrix::from_toeplitz(ToeplitzSpec(6, {2, 4}, {5}));
  CHECK(a * BoolMatrix::identity(6) == a);
  CHECK(BoolMatrix::identity(6) * a == a);
  CHECK((BoolMatrix::zero(6) * a).is_zero());
  CHECK_THROWS_AS(a * BoolMatrix::identity(5), std::invalid_argument);
}

TEST_CASE("square of T_6<2,4;5> against the reference multiply") {
  const BoolMatrix a = BoolMatrix::from_toeplitz(ToeplitzSpec(6, {2, 4}, {5}));
  const BoolMatrix a2 = a * a;
  CHECK(to_dense(a2) == oracle::multiply(to_dense(a), to_dense(a)));
  CHECK(a2.at(1, 5));
  CHECK_FALSE(a2.at(5, 2));
  CHECK_FALSE(a2.at(3, 2));
}

TEST_CASE("bit-parallel multiply matches the triple loop on random matrices") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 140;  // crosses word boundaries
    const int density = static_cast<int>(rng() % 60);
    const auto x = oracle::random_dense(n, rng, density);
    const auto y = oracle::random_dense(n, rng, density);
    const BoolMatrix got = from_dense(x) * from_dense(y);
    REQUIRE(to_dense(got) == oracle::multiply(x, y));
  }
}

TEST_CASE("transpose") {
  const ToeplitzSpec spec(6, {2, 4}, {5});
  const BoolMatrix a = BoolMatrix::from_toeplitz(spec);
  CHECK(a.transpose() == BoolMatrix::from_toeplitz(spec.transposed()));
  CHECK(a.transpose().transpose() == a);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const auto x = oracle::random_dense(n, rng);
    const auto y = oracle::random_dense(n, rng);
    CHECK(to_dense(from_dense(x).transpose()) == oracle::transpose(x));
    // (XY)^T = Y^T X^T
    CHECK((from_dense(x) * from_dense(y)).transpose() ==
          from_dense(y).transpose() * from_dense(x).transpose());
  }
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 80;
    const BoolMatrix x = from_dense(oracle::random_dense(n, rng, 10));
    const BoolMatrix y = from_dense(oracle::random_dense(n, rng, 10));
    const BoolMatrix z = from_dense(oracle::random_dense(n, rng, 10));
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("power") {
  const BoolMatrix a = BoolMatrix::from_toeplitz(ToeplitzSpec(6, {2, 4}, {5}));
  CHECK(tperiod::power(a, 0) == BoolMatrix::identity(6));
  CHECK(tperiod::power(a, 1) == a);
  CHECK_FALSE(tperiod::power(a, 2).at(5, 2));
  CHECK(tperiod::power(BoolMatrix::from_toeplitz(ToeplitzSpec(4, {1}, {})), 4).is_zero());

  tperiod::PowerSequence seq(a);
  oracle::Dense naive = oracle::identity(6);
  for (std::size_t m = 0; m <= 40; ++m) {
    CHECK(to_dense(seq.at(m)) == naive);
    CHECK(tperiod::power(a, m) == seq.at(m));
    naive = oracle::multiply(naive, to_dense(a));
  }
}

TEST_CASE("fingerprint and partial order helpers") {
  const BoolMatrix a = BoolMatrix::from_toeplitz(ToeplitzSpec(6, {2, 4}, {5}));
  const BoolMatrix copy = a;
  CHECK(copy.fingerprint() == a.fingerprint());
  const BoolMatrix b = BoolMatrix::from_toeplitz(ToeplitzSpec(6, {2, 4}, {3, 5}));
  CHECK(a.is_below(b));
  CHECK_FALSE(b.is_below(a));
  CHECK(b.minus(a) == BoolMatrix::from_toeplitz(ToeplitzSpec(6, {}, {3})));
  CHECK(a.minus(a).is_zero());
}

TEST_CASE("power cycle agrees with a linear-search reference") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const auto x = oracle::random_dense(n, rng, static_cast<int>(5 + rng() % 40));
    const oracle::Cycle want = oracle::power_cycle(x);
    const tperiod::PowerCycle got = tperiod::find_power_cycle(from_dense(x), 5000);
    CHECK(got.index == want.index);
    CHECK(got.period == want.period);
  }
}

TEST_CASE("power cycle cap") {
  CHECK(tperiod::default_power_cap(6) == 25 + 2 + 6);
  const BoolMatrix a = BoolMatrix::from_toeplitz(ToeplitzSpec(6, {2, 4}, {5}));
  CHECK_THROWS_AS(tperiod::find_power_cycle(a, 3), tperiod::CapExceeded);
  const auto c = tperiod::find_power_cycle(a, tperiod::default_power_cap(6));
  CHECK(c.index == 6);
  CHECK(c.period == 1);
}
