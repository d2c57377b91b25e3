#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "jordan/rational.hpp"

namespace jordan {

// Spin/weight label stored as twice its value so that all label
// arithmetic stays in integers.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int t) {
    HalfInt x;
    x.twice_ = t;
    return x;
  }
  static constexpr HalfInt whole(int n) { return from_twice(2 * n); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_whole() const { return twice_ % 2 == 0; }

  // Only meaningful for whole values; throws otherwise.
  int whole_value() const {
    if (!is_whole()) throw std::domain_error("HalfInt: not a whole number");
    return twice_ / 2;
  }

  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

 private:
  int twice_ = 0;
};

constexpr HalfInt half(int twice) { return HalfInt::from_twice(twice); }

constexpr HalfInt operator+(HalfInt a, int n) { return a + HalfInt::whole(n); }
constexpr HalfInt operator-(HalfInt a, int n) { return a - HalfInt::whole(n); }
constexpr HalfInt operator+(int n, HalfInt a) { return HalfInt::whole(n) + a; }

constexpr HalfInt abs(HalfInt a) { return a.twice() < 0 ? -a : a; }

inline int whole_of(HalfInt x) { return x.whole_value(); }

// x! for whole x >= 0; throws otherwise.
Int factorial(HalfInt x);

std::ostream& operator<<(std::ostream& os, HalfInt x);

}  // namespace jordan
