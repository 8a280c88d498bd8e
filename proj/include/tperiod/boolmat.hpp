#ifndef TPERIOD_BOOLMAT_HPP
#define TPERIOD_BOOLMAT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "tperiod/spec.hpp"

namespace tperiod {

/// Square Boolean matrix with bit-packed rows.
///
/// Indices at the public API are 1-based, matching vertex labels of the
/// associated digraph: entry (i, j) lives in row i-1, bit j-1. Bits past
/// column n are always zero, so whole-word comparison and hashing are exact.
///
/// Values are immutable once built; every operation returns a new matrix.
class BoolMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  static BoolMatrix zero(std::size_t n);
  static BoolMatrix identity(std::size_t n);
  static BoolMatrix all_ones(std::size_t n);

  /// Entry (i, j) = pred(i, j), both 1-based.
  static BoolMatrix from_predicate(
      std::size_t n, const std::function<bool(std::size_t, std::size_t)>& pred);

  /// Entry (i, j) = 1 iff j-i is in S or i-j is in T.
  static BoolMatrix from_toeplitz(const ToeplitzSpec& spec);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool at(std::size_t i, std::size_t j) const;

  std::span<const Word> row(std::size_t i) const;

  std::size_t count() const;
  bool is_zero() const;

  /// Entrywise A <= B.
  bool is_below(const BoolMatrix& other) const;

  /// Entrywise AND-NOT: entries of *this that are not in `other`.
  BoolMatrix minus(const BoolMatrix& other) const;

  BoolMatrix transpose() const;

  /// 64-bit digest of the packed rows. Equal matrices share a fingerprint;
  /// the converse is not guaranteed, so callers must still compare.
  std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

  friend BoolMatrix operator*(const BoolMatrix& a, const BoolMatrix& b);

 private:
  explicit BoolMatrix(std::size_t n);

  Word* mutable_row(std::size_t i) { return bits_.data() + (i - 1) * words_; }
  void set(std::size_t i, std::size_t j) {
    bits_[(i - 1) * words_ + (j - 1) / kWordBits] |=
        Word{1} << ((j - 1) % kWordBits);
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

std::ostream& operator<<(std::ostream& os, const BoolMatrix& m);

// A^m, computed by repeated squaring. A^0 is the identity.
BoolMatrix power(const BoolMatrix& a, std::size_t m);

/// Memoized A^0, A^1, A^2, ... computed one multiplication at a time.
///
/// Not synchronized; keep an instance inside one computation.
class PowerSequence {
 public:
  explicit PowerSequence(BoolMatrix base);

  const BoolMatrix& base() const noexcept { return powers_[1]; }

  /// A^m; extends the cache as needed.
  const BoolMatrix& at(std::size_t m);

  std::size_t cached() const noexcept { return powers_.size(); }

 private:
  std::vector<BoolMatrix> powers_;
};

// Raised when a power or matrix sequence fails to cycle within the
// configured number of steps.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Transient and period of the sequence A^1, A^2, ...: A^index is the first
/// matrix that recurs, and A^index = A^(index+period) with period minimal.
struct PowerCycle {
  std::size_t index = 0;
  std::size_t period = 0;
};

// Default iteration budget for an order-n matrix: (n-1)^2 + 2 + n.
std::size_t default_power_cap(std::size_t n);

/// Forward scan for the first repeated power. Fingerprints pick candidates;
/// equality is decided on the full matrix. Throws CapExceeded if no repeat
/// shows up among A^1 .. A^cap.
PowerCycle find_power_cycle(PowerSequence& powers, std::size_t cap);
PowerCycle find_power_cycle(const BoolMatrix& a, std::size_t cap);

}  // namespace tperiod

#endif  // TPERIOD_BOOLMAT_HPP
