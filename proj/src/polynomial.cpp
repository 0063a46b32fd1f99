#include "virtstring/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "virtstring/string_core.hpp"

namespace vstr {

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) return Rational(cpp_int(s));
  return Rational(cpp_int(s.substr(0, slash)), cpp_int(s.substr(slash + 1)));
}

IntPoly IntPoly::monomial(int exp, long long coeff) {
  IntPoly p;
  p.add_term(exp, coeff);
  return p;
}

long long IntPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

int IntPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

void IntPoly::add_term(int exp, long long c) {
  if (exp < 0) throw PreconditionError("negative exponent");
  if (c == 0) return;
  long long& v = terms_[exp];
  v += c;
  if (v == 0) terms_.erase(exp);
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r = *this;
  r += o;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPoly IntPoly::operator-() const { return scaled(-1); }
IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

IntPoly IntPoly::scaled(long long k) const {
  IntPoly r;
  for (auto [e, c] : terms_) r.add_term(e, c * k);
  return r;
}

IntPoly IntPoly::substitute_power(int r) const {
  IntPoly out;
  for (auto [e, c] : terms_) out.add_term(e * r, c);
  return out;
}

long long IntPoly::derivative_at_one() const {
  long long s = 0;
  for (auto [e, c] : terms_) s += e * c;
  return s;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    long long a = c < 0 ? -c : c;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (a != 1 || e == 0) out += std::to_string(a);
    if (e >= 1) out += "t";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

IntPoly IntPoly::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  IntPoly p;
  if (s.empty()) throw ParseError("empty polynomial");
  size_t i = 0;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    long long c = i > st ? std::stoll(s.substr(st, i - st)) : 1;
    int e = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es) throw ParseError("missing exponent in '" + text + "'");
        e = std::stoi(s.substr(es, i - es));
      }
    } else if (i == st) {
      throw ParseError("bad polynomial term in '" + text + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw ParseError("unexpected '" + std::string(1, s[i]) + "' in polynomial");
    p.add_term(e, sign * c);
  }
  return p;
}

std::vector<std::pair<int, long long>> IntPoly::to_pairs() const {
  std::vector<std::pair<int, long long>> v;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) v.push_back(*it);
  return v;
}

void RatPoly2::add_term(int zexp, int texp, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(zexp, texp);
  Rational& v = terms_[key];
  v += c;
  if (v == 0) terms_.erase(key);
}

RatPoly2& RatPoly2::operator+=(const RatPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

RatPoly2 RatPoly2::operator+(const RatPoly2& o) const {
  RatPoly2 r = *this;
  r += o;
  return r;
}

RatPoly2 RatPoly2::operator-(const RatPoly2& o) const {
  RatPoly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

RatPoly2 RatPoly2::operator*(const RatPoly2& o) const {
  RatPoly2 r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

RatPoly2 RatPoly2::constant(const Rational& c) {
  RatPoly2 r;
  r.add_term(0, 0, c);
  return r;
}

RatPoly2 RatPoly2::from_t(const IntPoly& p) {
  RatPoly2 r;
  for (auto [e, c] : p.terms()) r.add_term(0, e, Rational(c));
  return r;
}

std::string RatPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // z-major, descending
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational a = c < 0 ? Rational(-c) : c;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    bool mono = k.first || k.second;
    if (a != 1 || !mono) out += vstr::to_string(a);
    if (k.first) out += k.first == 1 ? "z" : "z^" + std::to_string(k.first);
    if (k.second) out += k.second == 1 ? "t" : "t^" + std::to_string(k.second);
  }
  return out;
}

}  // namespace vstr
