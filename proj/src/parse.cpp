#include "sfs/parse.hpp"

#include <cctype>

namespace sfs {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void keyword(std::string_view kw) {
    ws();
    if (s_.substr(i_, kw.size()) != kw) fail("expected '" + std::string(kw) + "'");
    i_ += kw.size();
  }
  BigInt integer() {
    ws();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = start;
      fail("expected an integer");
    }
    std::string t(s_.substr(start, i_ - start));
    if (t[0] == '+') t.erase(0, 1);
    return BigInt(t, 10);
  }
  // A rational token runs up to the next ',' or ')'.
  Rational rational() {
    ws();
    std::size_t start = i_;
    while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ')') ++i_;
    if (start == i_) fail("expected a fraction");
    Rational r = Rational::parse(s_.substr(start, i_ - start), start);
    if (r.is_zero()) throw ParseError("zero fiber", start);
    return r;
  }
  void end() {
    ws();
    if (i_ != s_.size()) fail("trailing input");
  }
  std::size_t pos() {
    ws();
    return i_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

SeifertData parse_seifert(std::string_view text) {
  Cursor c(text);
  SeifertData d;
  c.keyword("SFS");
  c.expect('(');
  c.keyword("g");
  c.expect('=');
  std::size_t gpos = c.pos();
  BigInt g = c.integer();
  if (g < 0 || !g.fits_slong_p()) throw ParseError("genus must be a nonnegative machine integer", gpos);
  d.genus = g.get_si();
  c.expect(';');
  c.keyword("e");
  c.expect('=');
  d.central = c.integer();
  if (c.accept(';')) {
    if (!c.peek(')')) {
      d.fibers.push_back(c.rational());
      while (c.accept(',')) d.fibers.push_back(c.rational());
    }
  }
  c.expect(')');
  c.end();
  return d;
}

OddPretzel parse_pretzel(std::string_view text) {
  Cursor c(text);
  c.keyword("P");
  c.expect('(');
  std::vector<long> strands;
  do {
    std::size_t at = c.pos();
    BigInt v = c.integer();
    if (!v.fits_slong_p()) throw ParseError("strand out of range", at);
    if (v % 2 == 0) throw ParseError("even pretzel strand " + v.get_str(), at);
    strands.push_back(v.get_si());
  } while (c.accept(','));
  c.expect(')');
  c.end();
  return OddPretzel(strands);
}

ParsedInput parse_input(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (text.substr(i, 3) == "SFS") return parse_seifert(text);
  if (text.substr(i, 1) == "P") return parse_pretzel(text);
  throw ParseError("expected 'SFS(' or 'P('", i);
}

}  // namespace sfs
