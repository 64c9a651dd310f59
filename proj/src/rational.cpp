#include "baire/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace baire {
namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rat Rat::from_wide(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational overflow");
  Rat r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rat Rat::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rat& Rat::operator+=(const Rat& o) {
  *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  *this = from_wide(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  *this = from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  *this = from_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    if (part.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::size_t i = 0;
    if (allow_sign && part[0] == '-') i = 1;
    if (i == part.size()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (part[i] == '0' && part.size() > i + 1) {
      throw std::invalid_argument("leading zero in '" + std::string(text) + "'");
    }
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
    }
  };
  auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  check_digits(num_part, true);
  if (num_part == "-0") throw std::invalid_argument("non-canonical rational '-0'");
  std::int64_t num = parse_int(num_part);
  if (slash == std::string_view::npos) return Rat(num);
  std::string_view den_part = text.substr(slash + 1);
  check_digits(den_part, false);
  std::int64_t den = parse_int(den_part);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (den == 1 || std::gcd(num, den) != 1) {
    throw std::invalid_argument("non-canonical rational '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::int64_t floor(const Rat& r) {
  std::int64_t q = r.num() / r.den();
  if (r.num() % r.den() != 0 && r.num() < 0) --q;
  return q;
}

std::int64_t ceil(const Rat& r) { return -floor(-r); }

}  // namespace baire
