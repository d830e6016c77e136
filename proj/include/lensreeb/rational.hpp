#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lensreeb {

/// Arbitrary-precision integer; expression templates off so `auto` and `.str()` behave.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Exact fraction num/den kept in canonical form: den > 0 and gcd(|num|, den) = 1.
/// Equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t value) : num_(value), den_(1) {}        // NOLINT(google-explicit-constructor)
  Rational(int value) : num_(value), den_(1) {}                 // NOLINT(google-explicit-constructor)
  Rational(Integer num, Integer den);

  /// Accepts "a", "a/b" and "-a/b". Throws std::invalid_argument on malformed text or zero denominator.
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// "num/den"; zero is "0/1".
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  void canonicalize();

  Integer num_;
  Integer den_;
};

}  // namespace lensreeb
