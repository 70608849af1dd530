#include "dit/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "dit/error.hpp"

namespace dit {
namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rat Rat::from_wide(Wide num, Wide den) {
  if (den == 0) throw ArithmeticError("rational division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw ArithmeticError("rational overflow");
  Rat r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rat::Rat(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

Rat Rat::operator-() const { return from_wide(-static_cast<Wide>(num_), den_); }

Rat& Rat::operator+=(const Rat& o) {
  *this = from_wide(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
                    static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  *this = from_wide(static_cast<Wide>(num_) * o.den_ - static_cast<Wide>(o.num_) * den_,
                    static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  *this = from_wide(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw ArithmeticError("rational division by zero");
  *this = from_wide(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rat::to_fraction() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::string Rat::to_string() const {
  return den_ == 1 ? std::to_string(num_) : to_fraction();
}

Rat Rat::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InputError("malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw InputError("rational denominator must be positive in '" + std::string(text) + "'");
  return Rat(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace dit
