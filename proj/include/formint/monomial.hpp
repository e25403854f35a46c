#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace formint {

/// Hard upper bound on the number of ring variables; exponents live inline.
inline constexpr std::size_t kMaxVars = 12;

using Var = int;

/// Ordered list of variable names shared by every polynomial of one ring.
///
/// Two conventional names are recognised: the creative-telescoping parameter
/// `t` and the auxiliary root variable `_c` used by logarithmic terms.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Var v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of `name`, or -1 if absent.
  Var index_of(std::string_view name) const;

  Var param() const { return param_; }
  Var root() const { return root_; }

  bool operator==(const Ring& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  Var param_ = -1;
  Var root_ = -1;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

/// Ring used by the form algorithms: the form variables first, then the
/// parameter `t`, then the root variable `_c`.
RingPtr make_form_ring(const std::vector<std::string>& form_vars);

inline constexpr std::string_view kParamName = "t";
inline constexpr std::string_view kRootName = "_c";

/// Exponent vector with cached total degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t total = 0;

  static Monomial var(Var v, unsigned power = 1);

  unsigned operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }

  bool operator==(const Monomial& o) const { return total == o.total && exp == o.exp; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool is_one() const { return total == 0; }
  /// Index of the single variable if this is a pure power x_v^k with k > 0, else -1.
  Var pure_power_var() const;
};

/// Graded reverse lexicographic order: true iff a > b.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.total != b.total) return a.total > b.total;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  }
  return false;
}

}  // namespace formint
