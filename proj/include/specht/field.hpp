#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "specht/common.hpp"

namespace specht {

/// Exact rational coefficient backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
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

  /// Multiplicative identity with the same field context as sample.
  static Rational one_like(const Rational&) { return Rational(1); }

  std::string str() const { return v_.get_str(); }
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }
  static Rational parse(const std::string& s) { return Rational(mpq_class(s)); }

  static constexpr const char* field_name() { return "rational"; }

 private:
  mpq_class v_;
};

/// Element of F_p for a runtime prime p. Each element carries its modulus so
/// mixed-modulus arithmetic can be rejected instead of silently wrapping.
class PrimeField {
 public:
  static constexpr uint32_t kDefaultPrime = 32749;  // largest prime below 2^15

  PrimeField() : v_(0), p_(kDefaultPrime) {}
  PrimeField(long n, uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 2) throw Error("modulus must be a prime >= 2");
    long r = n % static_cast<long>(p);
    if (r < 0) r += p;
    v_ = static_cast<uint32_t>(r);
  }
  PrimeField(long num, long den, uint32_t p) : PrimeField(num, p) {
    *this /= PrimeField(den, p);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }

  PrimeField operator-() const {
    PrimeField r = *this;
    if (r.v_) r.v_ = p_ - r.v_;
    return r;
  }
  PrimeField& operator+=(const PrimeField& o) {
    check(o);
    v_ = (v_ + static_cast<uint64_t>(o.v_)) % p_;
    return *this;
  }
  PrimeField& operator-=(const PrimeField& o) {
    check(o);
    v_ = (v_ + static_cast<uint64_t>(p_) - o.v_) % p_;
    return *this;
  }
  PrimeField& operator*=(const PrimeField& o) {
    check(o);
    v_ = static_cast<uint32_t>((static_cast<uint64_t>(v_) * o.v_) % p_);
    return *this;
  }
  PrimeField& operator/=(const PrimeField& o) {
    check(o);
    if (o.v_ == 0) throw Error("division by zero");
    return *this *= o.inverse();
  }
  PrimeField inverse() const {
    if (v_ == 0) throw Error("division by zero");
    // Fermat: v^(p-2) mod p.
    uint64_t base = v_, acc = 1, e = p_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    PrimeField r = *this;
    r.v_ = static_cast<uint32_t>(acc);
    return r;
  }
  friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
  friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }
  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }

  static PrimeField one_like(const PrimeField& sample) {
    return PrimeField(1, sample.p_);
  }

  std::string str() const { return std::to_string(v_); }
  static constexpr const char* field_name() { return "prime"; }

 private:
  void check(const PrimeField& o) const {
    if (p_ != o.p_) throw Error("mixed prime moduli");
  }
  uint32_t v_;
  uint32_t p_;
};

}  // namespace specht
