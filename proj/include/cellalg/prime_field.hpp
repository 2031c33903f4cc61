#pragma once

#include <cstdint>
#include <string>

#include "cellalg/errors.hpp"

namespace cellalg {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

// Element of GF(p) for a runtime prime modulus. Each element carries its
// modulus; mixing moduli is a FieldMismatch. Residues canonical in [0, p).
class Fp {
 public:
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {
    if (p < 2) throw UnsupportedField("GF(p): modulus must be >= 2");
  }

  static Fp zero_of(std::uint64_t p) { return Fp(0, p); }

  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1 % p_, p_); }
  Fp from_int(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return Fp(static_cast<std::uint64_t>(r), p_);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1 % p_; }

  Fp inverse() const {
    if (v_ == 0) throw Error("GF(p): inverse of zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_),
                 nr = static_cast<std::int64_t>(v_);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = detail::mulmod_u64(v_, o.v_, p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

  static Fp parse(const std::string& text, std::uint64_t p) {
    if (text.empty()) throw ParseError("empty GF(p) literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw ParseError("bad GF(p) literal: '" + text + "'");
    long long mag = 0;
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9')
        throw ParseError("bad GF(p) literal: '" + text + "'");
      mag = mag * 10 + (text[i] - '0');
      mag %= static_cast<long long>(p);
    }
    Fp r(static_cast<std::uint64_t>(mag), p);
    return text[0] == '-' ? -r : r;
  }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_)
      throw FieldMismatch("GF(p) elements from different fields: p=" +
                          std::to_string(p_) + " vs p=" +
                          std::to_string(o.p_));
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

inline std::string to_string(const Fp& x) { return x.str(); }

}  // namespace cellalg
