#include "sfs/exactq.hpp"

#include <cctype>
#include <ostream>

namespace sfs {

Rational::Rational(const BigInt& n, const BigInt& d) : num_(n), den_(d) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
  if (num_ == 0) den_ = 1;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(BigInt(a.num_ * b.den_), BigInt(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

namespace {

std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

BigInt parse_signed_int(std::string_view s, std::size_t& i, std::size_t base) {
  i = skip_ws(s, i);
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    i = skip_ws(s, i + 1);
  }
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParseError("expected an integer", base + start);
  BigInt v(std::string(s.substr(start, i - start)), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text, std::size_t base) {
  std::size_t i = 0;
  BigInt n = parse_signed_int(text, i, base);
  i = skip_ws(text, i);
  BigInt d = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t dpos = skip_ws(text, i);
    d = parse_signed_int(text, i, base);
    if (d == 0) throw ParseError("zero denominator", base + dpos);
    i = skip_ws(text, i);
  }
  if (i != text.size()) throw ParseError("unexpected character in rational", base + i);
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

NegCFrac neg_cfrac_expand(const Rational& r) {
  if (r <= Rational(1)) throw std::invalid_argument("neg_cfrac_expand requires r > 1, got " + r.str());
  NegCFrac out;
  Rational x = r;
  for (;;) {
    BigInt a = x.ceil();
    out.terms.push_back(a);
    Rational rest = Rational(a) - x;  // in [0, 1)
    if (rest.is_zero()) break;
    x = rest.reciprocal();
  }
  return out;
}

Rational neg_cfrac_eval(const NegCFrac& c) {
  if (c.terms.empty()) throw std::invalid_argument("empty continued fraction");
  for (const auto& a : c.terms)
    if (a < 2) throw std::invalid_argument("continued fraction term below 2");
  Rational r(c.terms.back());
  for (auto it = c.terms.rbegin() + 1; it != c.terms.rend(); ++it)
    r = Rational(*it) - r.reciprocal();
  return r;
}

Rational complement(const Rational& r) {
  if (r <= Rational(1)) throw std::invalid_argument("complement requires r > 1, got " + r.str());
  return Rational(r.num(), BigInt(r.num() - r.den()));
}

BigInt lcm_of(std::span<const BigInt> values) {
  if (values.empty()) throw std::invalid_argument("lcm of an empty sequence");
  BigInt l = 1;
  for (const auto& v : values) {
    if (v <= 0) throw std::invalid_argument("lcm_of expects positive integers");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
  }
  return l;
}

BigInt gcd_of(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

long valuation(const BigInt& n, unsigned long prime) {
  if (n == 0) throw std::domain_error("valuation of zero");
  BigInt m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), prime)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), prime);
    ++v;
  }
  return v;
}

long valuation(const Rational& r, unsigned long prime) {
  return valuation(r.num(), prime) - valuation(r.den(), prime);
}

std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace sfs
