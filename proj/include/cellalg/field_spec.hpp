#pragma once

#include <cstdint>
#include <string>

#include "cellalg/errors.hpp"
#include "cellalg/prime_field.hpp"
#include "cellalg/rational.hpp"

namespace cellalg {

// Runtime description of the coefficient field: the rationals or GF(p) with
// p a verified prime.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }

  static FieldSpec gf(std::uint64_t p) {
    if (!detail::is_prime_u64(p))
      throw UnsupportedField("GF(p): modulus " + std::to_string(p) +
                             " is not prime");
    return FieldSpec(Kind::prime, p);
  }

  // Accepts "Q", "rationals", "gf:<p>", or a bare prime "<p>".
  static FieldSpec parse(const std::string& text) {
    if (text == "Q" || text == "q" || text == "rationals")
      return rationals();
    std::string digits = text;
    if (text.rfind("gf:", 0) == 0 || text.rfind("GF:", 0) == 0)
      digits = text.substr(3);
    if (digits.empty()) throw ParseError("bad field spec: '" + text + "'");
    std::uint64_t p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("bad field spec: '" + text + "'");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return gf(p);
  }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  std::uint64_t modulus() const { return modulus_; }

  std::string str() const {
    return is_rationals() ? "Q" : "gf:" + std::to_string(modulus_);
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) {
    return !(a == b);
  }

 private:
  FieldSpec(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}

  Kind kind_;
  std::uint64_t modulus_;
};

// Zero element of the described field as a typed scalar; the bridge from the
// runtime FieldSpec into code templated on the scalar type.
template <class K>
K zero_of(const FieldSpec& fs);

template <>
inline Rational zero_of<Rational>(const FieldSpec& fs) {
  if (!fs.is_rationals())
    throw FieldMismatch("expected rationals, got " + fs.str());
  return Rational();
}

template <>
inline Fp zero_of<Fp>(const FieldSpec& fs) {
  if (fs.is_rationals()) throw FieldMismatch("expected GF(p), got Q");
  return Fp::zero_of(fs.modulus());
}

// Calls fn with the zero element of the described field, selecting the
// scalar type at runtime.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.is_rationals()) return fn(Rational());
  return fn(Fp::zero_of(fs.modulus()));
}

template <class K>
K parse_scalar(const std::string& text, const FieldSpec& fs);

template <>
inline Rational parse_scalar<Rational>(const std::string& text,
                                       const FieldSpec&) {
  return Rational::parse(text);
}

template <>
inline Fp parse_scalar<Fp>(const std::string& text, const FieldSpec& fs) {
  return Fp::parse(text, fs.modulus());
}

}  // namespace cellalg
