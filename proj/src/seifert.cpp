#include "sfs/seifert.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sfs {

BigInt multiplicity(const Rational& r) { return abs(r.num()); }

BigInt fiber_q(const Rational& r) { return r.sign() < 0 ? BigInt(-r.den()) : r.den(); }

Rational euler_invariant(const SeifertData& s) {
  Rational eps(s.central);
  for (const auto& r : s.fibers) {
    if (r.is_zero()) throw std::invalid_argument("zero fiber fraction");
    eps -= r.reciprocal();
  }
  return eps;
}

Rational euler_invariant(const StandardForm& s) { return euler_invariant(s.data()); }

namespace {

StandardForm reduce_fractional(long genus, const BigInt& e, const std::vector<Rational>& fibers) {
  StandardForm out;
  out.genus = genus;
  out.central = e;
  for (const auto& r : fibers) {
    if (r.is_zero()) throw std::invalid_argument("zero fiber fraction");
    Rational beta = r.reciprocal();
    BigInt fl = beta.floor();
    out.central -= fl;
    Rational fr = beta - Rational(fl);
    if (!fr.is_zero()) out.fibers.push_back(fr.reciprocal());
  }
  return out;
}

}  // namespace

StandardForm normalize(const SeifertData& s) {
  if (s.genus < 0) throw std::invalid_argument("negative genus");
  StandardForm out = reduce_fractional(s.genus, s.central, s.fibers);
  if (euler_invariant(out).sign() < 0) {
    std::vector<Rational> neg;
    for (const auto& r : out.fibers) neg.push_back(-r);
    out = reduce_fractional(s.genus, BigInt(-out.central), neg);
    out.orientation_reversed = true;
  }
  return out;
}

StandardForm expand(const StandardForm& s, std::size_t j) {
  if (j >= s.k()) throw std::out_of_range("expansion index out of range");
  StandardForm out = s;
  out.fibers.push_back(complement(s.fibers[j]));
  out.fibers.push_back(s.fibers[j]);
  out.central += 1;
  return out;
}

std::vector<Rational> sorted_fibers(const std::vector<Rational>& f) {
  std::vector<Rational> v = f;
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<Contraction> find_contractions(const StandardForm& s) {
  std::vector<Contraction> out;
  std::set<std::vector<std::string>> seen;
  const std::size_t k = s.k();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      if (complement(s.fibers[a]) != s.fibers[b]) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == a || j == b) continue;
        if (s.fibers[j] != s.fibers[a] && s.fibers[j] != s.fibers[b]) continue;
        StandardForm c;
        c.genus = s.genus;
        c.central = s.central - 1;
        c.orientation_reversed = s.orientation_reversed;
        for (std::size_t i = 0; i < k; ++i)
          if (i != a && i != b) c.fibers.push_back(s.fibers[i]);
        std::vector<std::string> key;
        for (const auto& r : sorted_fibers(c.fibers)) key.push_back(r.str());
        if (!seen.insert(key).second) continue;
        out.push_back({j, {a, b}, std::move(c)});
      }
    }
  return out;
}

bool same_space(const StandardForm& a, const StandardForm& b) {
  return a.genus == b.genus && a.central == b.central &&
         sorted_fibers(a.fibers) == sorted_fibers(b.fibers);
}

namespace {

std::string render(long g, const BigInt& e, const std::vector<Rational>& fibers) {
  std::string s = "SFS(g=" + std::to_string(g) + "; e=" + e.get_str() + ";";
  for (std::size_t i = 0; i < fibers.size(); ++i) s += (i ? ", " : " ") + fibers[i].str();
  return s + ")";
}

}  // namespace

std::string to_string(const SeifertData& s) { return render(s.genus, s.central, s.fibers); }
std::string to_string(const StandardForm& s) { return render(s.genus, s.central, s.fibers); }

bool is_partition_of(const Partition& p, std::size_t k) {
  std::vector<bool> seen(k, false);
  std::size_t count = 0;
  for (const auto& c : p) {
    if (c.empty()) return false;
    for (auto i : c) {
      if (i >= k || seen[i]) return false;
      seen[i] = true;
      ++count;
    }
  }
  return count == k;
}

Rational class_sum(const StandardForm& s, const IndexClass& c) {
  Rational sum;
  for (auto i : c) sum += s.fibers.at(i).reciprocal();
  return sum;
}

BigInt fiber_lcm(const StandardForm& s) {
  std::vector<BigInt> ps;
  for (const auto& r : s.fibers) ps.push_back(multiplicity(r));
  if (ps.empty()) return 1;
  return lcm_of(ps);
}

}  // namespace sfs
