#ifndef TPERIOD_SPEC_HPP
#define TPERIOD_SPEC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tperiod {

// Raised on malformed spec strings and out-of-range offsets.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Descriptor of the Boolean Toeplitz matrix T_n<S;T>: entry (i,j) is 1 iff
/// j-i is in S or i-j is in T.
///
/// Both offset sets are kept sorted ascending and duplicate-free, with every
/// element in [1, n-1]. Either set may be empty at this level; layers that
/// need nonempty sets check for themselves.
class ToeplitzSpec {
 public:
  ToeplitzSpec(int n, std::vector<int> s, std::vector<int> t);

  /// Bit k-1 of `s_mask` selects offset k of S (same for T). n <= 64.
  static ToeplitzSpec from_masks(int n, std::uint64_t s_mask,
                                 std::uint64_t t_mask);

  int n() const noexcept { return n_; }
  const std::vector<int>& S() const noexcept { return s_; }
  const std::vector<int>& T() const noexcept { return t_; }

  bool two_sided() const noexcept { return !s_.empty() && !t_.empty(); }

  std::uint64_t s_mask() const;
  std::uint64_t t_mask() const;

  /// Spec with `offset` added to S (or T). Adding an existing element is a
  /// no-op.
  ToeplitzSpec with_s(int offset) const;
  ToeplitzSpec with_t(int offset) const;

  /// Swap the roles of S and T (the transpose matrix).
  ToeplitzSpec transposed() const { return ToeplitzSpec(n_, t_, s_); }

  friend bool operator==(const ToeplitzSpec&, const ToeplitzSpec&) = default;

 private:
  int n_;
  std::vector<int> s_;
  std::vector<int> t_;
};

// "n=<int>;S=<a,b,...>;T=<c,...>", whitespace ignored, keys in any order.
// Empty lists are written "S=" / "T=".
ToeplitzSpec parse_spec(std::string_view text);

// Canonical form: "n=6;S=2,4;T=5".
std::string to_string(const ToeplitzSpec& spec);

}  // namespace tperiod

#endif  // TPERIOD_SPEC_HPP
