#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "cellalg/errors.hpp"

namespace cellalg {

// Arbitrary-precision rational number. Always canonical: lowest terms,
// positive denominator (maintained by mpq). Value-semantic and immutable in
// spirit; arithmetic never overflows.
class Rational {
 public:
  Rational() : v_(0) {}
  explicit Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
  }

  static Rational parse(const std::string& text) {
    if (!looks_like_rational(text))
      throw ParseError("not a rational literal: '" + text + "'");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw ParseError("not a rational literal: '" + text + "'");
    if (q.get_den() == 0)
      throw ParseError("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  // Field protocol shared with Fp: constants and integer lifts are derived
  // from an existing element so code generic over the scalar never needs a
  // global field context.
  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inverse() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

  // Canonical text form: "n" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  static bool looks_like_rational(const std::string& s) {
    std::size_t i = 0;
    auto digits = [&](std::size_t& k) {
      std::size_t start = k;
      while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
      return k > start;
    };
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (!digits(i)) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    if (!digits(i)) return false;
    return i == s.size();
  }

  mpq_class v_;
};

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace cellalg
