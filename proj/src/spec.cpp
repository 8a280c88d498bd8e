#include "tperiod/spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace tperiod {

namespace {

void normalize(std::vector<int>& offsets, int n, char which) {
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  for (int x : offsets) {
    if (x < 1 || x >= n) {
      std::ostringstream msg;
      msg << "offset " << x << " in " << which << " outside [1, " << n - 1
          << "]";
      throw SpecError(msg.str());
    }
  }
}

std::uint64_t mask_of(const std::vector<int>& offsets) {
  std::uint64_t mask = 0;
  for (int x : offsets) mask |= std::uint64_t{1} << (x - 1);
  return mask;
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw SpecError("bad integer '" + std::string(token) + "' in " +
                    std::string(context));
  }
  return value;
}

std::vector<int> parse_list(std::string_view text, std::string_view key) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(
        start, comma == std::string_view::npos ? text.size() - start
                                               : comma - start);
    out.push_back(parse_int(token, key));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_list(std::ostream& os, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
}

}  // namespace

ToeplitzSpec::ToeplitzSpec(int n, std::vector<int> s, std::vector<int> t)
    : n_(n), s_(std::move(s)), t_(std::move(t)) {
  if (n_ < 2) throw SpecError("order n must be at least 2");
  normalize(s_, n_, 'S');
  normalize(t_, n_, 'T');
}

ToeplitzSpec ToeplitzSpec::from_masks(int n, std::uint64_t s_mask,
                                      std::uint64_t t_mask) {
  if (n < 2 || n > 64) throw SpecError("mask construction needs 2 <= n <= 64");
  std::vector<int> s, t;
  for (int k = 1; k < n; ++k) {
    if (s_mask >> (k - 1) & 1) s.push_back(k);
    if (t_mask >> (k - 1) & 1) t.push_back(k);
  }
  const std::uint64_t valid =
      n - 1 >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 1)) - 1;
  if ((s_mask | t_mask) & ~valid) throw SpecError("mask bit beyond n-1");
  return ToeplitzSpec(n, std::move(s), std::move(t));
}

std::uint64_t ToeplitzSpec::s_mask() const { return mask_of(s_); }
std::uint64_t ToeplitzSpec::t_mask() const { return mask_of(t_); }

ToeplitzSpec ToeplitzSpec::with_s(int offset) const {
  auto s = s_;
  s.push_back(offset);
  return ToeplitzSpec(n_, std::move(s), t_);
}

ToeplitzSpec ToeplitzSpec::with_t(int offset) const {
  auto t = t_;
  t.push_back(offset);
  return ToeplitzSpec(n_, s_, std::move(t));
}

ToeplitzSpec parse_spec(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }

  std::optional<int> n;
  std::optional<std::vector<int>> s, t;
  std::string_view rest = compact;
  while (!rest.empty()) {
    std::size_t semi = rest.find(';');
    std::string_view field = rest.substr(0, semi);
    rest = semi == std::string_view::npos ? std::string_view{}
                                          : rest.substr(semi + 1);
    if (field.empty()) continue;
    std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw SpecError("expected key=value, got '" + std::string(field) + "'");
    }
    std::string_view key = field.substr(0, eq);
    std::string_view value = field.substr(eq + 1);
    if (key == "n") {
      if (n) throw SpecError("duplicate key n");
      n = parse_int(value, "n");
    } else if (key == "S") {
      if (s) throw SpecError("duplicate key S");
      s = parse_list(value, "S");
    } else if (key == "T") {
      if (t) throw SpecError("duplicate key T");
      t = parse_list(value, "T");
    } else {
      throw SpecError("unknown key '" + std::string(key) + "'");
    }
  }
  if (!n || !s || !t) throw SpecError("spec needs all of n, S and T");
  return ToeplitzSpec(*n, std::move(*s), std::move(*t));
}

std::string to_string(const ToeplitzSpec& spec) {
  std::ostringstream os;
  os << "n=" << spec.n() << ";S=";
  write_list(os, spec.S());
  os << ";T=";
  write_list(os, spec.T());
  return os.str();
}

}  // namespace tperiod
