#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace pargroup {

using Int = boost::multiprecision::cpp_int;
using BoostRat = boost::multiprecision::cpp_rational;

// Exact rational scalar used for all matrix arithmetic. Wraps
// boost::multiprecision::cpp_rational with constructors restricted to
// integral and rational sources so that Eigen's scalar-argument promotion
// probes (is_convertible on arbitrary expression types) stay well-formed.
class Rat {
 public:
  Rat() = default;
  template <class T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
  Rat(T v) : v_(v) {}
  Rat(const Int& v) : v_(v) {}
  Rat(const Int& num, const Int& den) : v_(BoostRat(num, den)) {}
  explicit Rat(const BoostRat& v) : v_(v) {}

  const BoostRat& value() const { return v_; }
  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend Rat operator-(const Rat& a) { return Rat(BoostRat(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& a);

 private:
  BoostRat v_;
};

inline Rat abs(const Rat& a) { return a < Rat(0) ? -a : a; }

// "p/q" with q > 0; a bare "p" is accepted on input.
std::string format_rat(const Rat& r);
Rat parse_rat(std::string_view text);

}  // namespace pargroup
