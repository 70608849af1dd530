#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dit {

/// Exact rational number over 64-bit integers, always in lowest terms with a
/// positive denominator. Every operation that would overflow throws
/// ArithmeticError instead of wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  Rat(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept;

  /// "p/q" always, including "p/1" for integers. This is the report form.
  std::string to_fraction() const;
  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Accepts "p", "-p", "p/q", "-p/q" (q > 0, surrounding spaces ignored).
  static Rat parse(std::string_view text);

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  static Rat from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace dit
