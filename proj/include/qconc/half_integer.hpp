#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace qconc {

/// Exact rational with denominator 1 or 2. Every root and weight component
/// of the A_{N-1} fundamental representation is of this form.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr HalfInteger(int value) : twice_(2 * value) {}  // NOLINT(implicit)

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger half() { return from_twice(1); }

  constexpr int twice() const { return twice_; }
  constexpr int numerator() const { return twice_ % 2 == 0 ? twice_ / 2 : twice_; }
  constexpr int denominator() const { return twice_ % 2 == 0 ? 1 : 2; }
  constexpr double value() const { return 0.5 * twice_; }

  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  constexpr HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInteger& operator-=(HalfInteger o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return a -= b; }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

  std::string str() const {
    if (denominator() == 1) return std::to_string(numerator());
    return std::to_string(numerator()) + "/2";
  }
  friend std::ostream& operator<<(std::ostream& os, HalfInteger h) { return os << h.str(); }

 private:
  int twice_ = 0;
};

}  // namespace qconc
