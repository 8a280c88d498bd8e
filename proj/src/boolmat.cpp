#include "tperiod/boolmat.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace tperiod {

namespace {

constexpr std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_index(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) {
    std::ostringstream msg;
    msg << "index " << i << " outside [1, " << n << "]";
    throw std::out_of_range(msg.str());
  }
}

}  // namespace

BoolMatrix::BoolMatrix(std::size_t n)
    : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n_ * words_, 0) {
  if (n == 0) throw std::invalid_argument("matrix order must be positive");
}

BoolMatrix BoolMatrix::zero(std::size_t n) { return BoolMatrix(n); }

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::all_ones(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) m.set(i, j);
  return m;
}

BoolMatrix BoolMatrix::from_predicate(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& pred) {
  BoolMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (pred(i, j)) m.set(i, j);
  return m;
}

BoolMatrix BoolMatrix::from_toeplitz(const ToeplitzSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.n());
  BoolMatrix m(n);
  for (int s : spec.S())
    for (std::size_t i = 1; i + s <= n; ++i) m.set(i, i + s);
  for (int t : spec.T())
    for (std::size_t j = 1; j + t <= n; ++j) m.set(j + t, j);
  return m;
}

bool BoolMatrix::at(std::size_t i, std::size_t j) const {
  check_index(i, n_);
  check_index(j, n_);
  return bits_[(i - 1) * words_ + (j - 1) / kWordBits] >>
             ((j - 1) % kWordBits) &
         1;
}

std::span<const BoolMatrix::Word> BoolMatrix::row(std::size_t i) const {
  check_index(i, n_);
  return {bits_.data() + (i - 1) * words_, words_};
}

std::size_t BoolMatrix::count() const {
  std::size_t c = 0;
  for (Word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BoolMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](Word w) { return w == 0; });
}

bool BoolMatrix::is_below(const BoolMatrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("order mismatch");
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

BoolMatrix BoolMatrix::minus(const BoolMatrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("order mismatch");
  BoolMatrix out(n_);
  for (std::size_t k = 0; k < bits_.size(); ++k)
    out.bits_[k] = bits_[k] & ~other.bits_[k];
  return out;
}

BoolMatrix BoolMatrix::transpose() const {
  BoolMatrix out(n_);
  for (std::size_t i = 1; i <= n_; ++i) {
    const Word* r = bits_.data() + (i - 1) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      for (Word bits = r[w]; bits; bits &= bits - 1) {
        const std::size_t j = w * kWordBits +
                              static_cast<std::size_t>(std::countr_zero(bits)) +
                              1;
        out.set(j, i);
      }
    }
  }
  return out;
}

std::uint64_t BoolMatrix::fingerprint() const noexcept {
  std::uint64_t h = splitmix(n_);
  for (Word w : bits_) h = splitmix(h ^ w);
  return h;
}

BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("order mismatch in multiply");
  const std::size_t words = a.words_;
  BoolMatrix out(a.n_);
  // Row i of the product is the OR of the rows of b selected by row i of a.
  for (std::size_t i = 0; i < a.n_; ++i) {
    const BoolMatrix::Word* ar = a.bits_.data() + i * words;
    BoolMatrix::Word* dst = out.bits_.data() + i * words;
    for (std::size_t w = 0; w < words; ++w) {
      for (BoolMatrix::Word bits = ar[w]; bits; bits &= bits - 1) {
        const std::size_t k =
            w * BoolMatrix::kWordBits +
            static_cast<std::size_t>(std::countr_zero(bits));
        const BoolMatrix::Word* br = b.bits_.data() + k * words;
        for (std::size_t x = 0; x < words; ++x) dst[x] |= br[x];
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BoolMatrix& m) {
  for (std::size_t i = 1; i <= m.order(); ++i) {
    for (std::size_t j = 1; j <= m.order(); ++j) os << (m.at(i, j) ? '1' : '0');
    os << '\n';
  }
  return os;
}

BoolMatrix power(const BoolMatrix& a, std::size_t m) {
  BoolMatrix result = BoolMatrix::identity(a.order());
  BoolMatrix square = a;
  while (m) {
    if (m & 1) result = result * square;
    m >>= 1;
    if (m) square = square * square;
  }
  return result;
}

PowerSequence::PowerSequence(BoolMatrix base) {
  powers_.push_back(BoolMatrix::identity(base.order()));
  powers_.push_back(std::move(base));
}

const BoolMatrix& PowerSequence::at(std::size_t m) {
  while (powers_.size() <= m) {
    // Reallocation would invalidate the operands, so build first.
    BoolMatrix next = powers_.back() * powers_[1];
    powers_.push_back(std::move(next));
  }
  return powers_[m];
}

std::size_t default_power_cap(std::size_t n) {
  return (n - 1) * (n - 1) + 2 + n;
}

PowerCycle find_power_cycle(PowerSequence& powers, std::size_t cap) {
  std::unordered_multimap<std::uint64_t, std::size_t> seen;
  for (std::size_t m = 1; m <= cap; ++m) {
    const BoolMatrix& current = powers.at(m);
    const std::uint64_t key = current.fingerprint();
    auto [lo, hi] = seen.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (powers.at(it->second) == current) {
        return {it->second, m - it->second};
      }
    }
    seen.emplace(key, m);
  }
  std::ostringstream msg;
  msg << "no repeated power of an order-" << powers.base().order()
      << " matrix within " << cap << " steps";
  throw CapExceeded(msg.str());
}

PowerCycle find_power_cycle(const BoolMatrix& a, std::size_t cap) {
  PowerSequence powers(a);
  return find_power_cycle(powers, cap);
}

}  // namespace tperiod
