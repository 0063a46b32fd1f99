#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vstr {

using Rational = boost::multiprecision::cpp_rational;
std::string to_string(const Rational& q);  // "p/q" or "p"
Rational parse_rational(const std::string& s);

// sparse polynomial in t over Z
class IntPoly {
 public:
  IntPoly() = default;
  static IntPoly monomial(int exp, long long coeff);

  const std::map<int, long long>& terms() const { return terms_; }
  long long coeff(int exp) const;
  int degree() const;  // -1 for zero
  bool is_zero() const { return terms_.empty(); }

  void add_term(int exp, long long c);
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(long long k) const;
  IntPoly& operator+=(const IntPoly& o);
  bool operator==(const IntPoly&) const = default;

  IntPoly substitute_power(int r) const;  // p(t^r)
  long long value_at_zero() const { return coeff(0); }
  long long derivative_at_one() const;

  std::string to_string() const;
  static IntPoly parse(const std::string& text);
  std::vector<std::pair<int, long long>> to_pairs() const;

 private:
  std::map<int, long long> terms_;
};

// sparse polynomial in z and t over Q, keyed by (z-exp, t-exp)
class RatPoly2 {
 public:
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  void add_term(int zexp, int texp, const Rational& c);
  RatPoly2 operator+(const RatPoly2& o) const;
  RatPoly2 operator-(const RatPoly2& o) const;
  RatPoly2 operator*(const RatPoly2& o) const;
  RatPoly2& operator+=(const RatPoly2& o);
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const RatPoly2&) const = default;
  static RatPoly2 constant(const Rational& c);
  static RatPoly2 from_t(const IntPoly& p);
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

}  // namespace vstr
