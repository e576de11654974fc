#pragma once

// Exact rational arithmetic and negative continued fractions.
//
// Everything downstream (Euler invariants, class sums, lcm deficits) is
// compared for exact equality, so no floating point is used anywhere.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sfs {

using BigInt = mpz_class;

/// Thrown for malformed textual input; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : num_(n), den_(1) {}  // NOLINT
  Rational(const BigInt& n, const BigInt& d);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }

  BigInt floor() const;
  BigInt ceil() const;
  Rational frac() const { return *this - Rational(floor()); }
  Rational reciprocal() const;
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "n" when the denominator is 1.
  std::string str() const;

  /// Accepts "n", "p/q", with an optional sign and surrounding whitespace.
  /// A zero denominator is rejected.
  static Rational parse(std::string_view text, std::size_t base_offset = 0);

 private:
  void normalize();
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// [a_1, ..., a_n]^- with every a_i >= 2.
struct NegCFrac {
  std::vector<BigInt> terms;
  friend bool operator==(const NegCFrac&, const NegCFrac&) = default;
};

/// Unique expansion r = a_1 - 1/(a_2 - 1/(...)); requires r > 1.
NegCFrac neg_cfrac_expand(const Rational& r);

/// Right-to-left fold; requires nonempty terms, each >= 2.
Rational neg_cfrac_eval(const NegCFrac& c);

/// p/q -> p/(p-q) for r = p/q > 1. Involutive.
Rational complement(const Rational& r);

BigInt lcm_of(std::span<const BigInt> values);
BigInt gcd_of(std::span<const BigInt> values);

/// p-adic valuation of a nonzero rational (may be negative).
long valuation(const Rational& r, unsigned long prime);
long valuation(const BigInt& n, unsigned long prime);

std::string to_string(const BigInt& n);

}  // namespace sfs
