#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace baire {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Arithmetic is carried out in 128-bit intermediates; a result that does not
/// fit back into 64-bit numerator/denominator throws std::overflow_error.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t value) : num_(value) {}  // NOLINT: integers convert freely
  Rat(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  /// Parses the canonical form produced by str(). "2/4", "3/1", "+1", "-0"
  /// and the like are rejected with std::invalid_argument.
  static Rat parse(std::string_view text);

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rat from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rat abs(const Rat& r);
/// Largest integer not exceeding r.
std::int64_t floor(const Rat& r);
/// Smallest integer not below r.
std::int64_t ceil(const Rat& r);

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace baire

template <>
struct std::hash<baire::Rat> {
  std::size_t operator()(const baire::Rat& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 31u ^ std::hash<std::int64_t>{}(r.den());
  }
};
