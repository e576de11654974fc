#include "sfs/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfs {

BigInt AbelianGroup::torsion_order() const {
  BigInt n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::string AbelianGroup::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : invariant_factors) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

AbelianGroup AbelianGroup::from_cyclic(const std::vector<BigInt>& orders, long extra_free) {
  AbelianGroup g;
  g.free_rank = extra_free;
  std::vector<BigInt> finite;
  for (const auto& d : orders) {
    if (d == 0)
      ++g.free_rank;
    else if (abs(d) != 1)
      finite.push_back(abs(d));
  }
  IntMatrix m(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) m(i, i) = finite[i];
  for (auto& d : smith_diagonal(m))
    if (d != 1) g.invariant_factors.push_back(d);
  return g;
}

AbelianGroup cokernel(const IntMatrix& m) {
  std::vector<BigInt> diag = smith_diagonal(m);
  AbelianGroup g;
  g.free_rank = static_cast<long>(m.rows() - diag.size());
  for (auto& d : diag)
    if (d != 1) g.invariant_factors.push_back(d);
  return g;
}

IntMatrix presentation_matrix(const SeifertData& s) {
  const std::size_t k = s.fibers.size();
  IntMatrix a(k + 1, k + 1);
  a(0, 0) = s.central;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.fibers[i].is_zero()) throw std::invalid_argument("zero fiber fraction");
    a(0, i + 1) = 1;
    a(i + 1, 0) = fiber_q(s.fibers[i]);
    a(i + 1, i + 1) = multiplicity(s.fibers[i]);
  }
  return IntMatrix::direct_sum(IntMatrix(2 * s.genus, 2 * s.genus), a);
}

AbelianGroup h1_oracle(const SeifertData& s) { return cokernel(presentation_matrix(s)); }

std::vector<BigInt> subset_product_gcds_naive(const std::vector<BigInt>& values) {
  const std::size_t n = values.size();
  if (n > 20) throw std::invalid_argument("subset iteration limited to 20 values");
  std::vector<BigInt> g(n + 1, 0);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    BigInt prod = 1;
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1UL) {
        prod *= values[i];
        ++t;
      }
    mpz_gcd(g[t].get_mpz_t(), g[t].get_mpz_t(), prod.get_mpz_t());
  }
  return g;
}

std::vector<BigInt> subset_product_gcds(const std::vector<BigInt>& values) {
  std::vector<BigInt> g(values.size() + 1, 0);
  g[0] = 1;
  std::size_t seen = 0;
  for (const auto& x : values) {
    ++seen;
    for (std::size_t t = seen; t >= 1; --t) {
      BigInt term = x * g[t - 1];
      mpz_gcd(g[t].get_mpz_t(), g[t].get_mpz_t(), term.get_mpz_t());
    }
  }
  return g;
}

AbelianGroup h1_formula(const SeifertData& s) { return h1_formula(normalize(s)); }

AbelianGroup h1_formula(const StandardForm& s) {
  const std::size_t k = s.k();
  const long extra = 2 * s.genus;
  if (k == 0) return AbelianGroup::from_cyclic({abs(s.central)}, extra);

  std::vector<BigInt> ps;
  BigInt prod = 1;
  for (const auto& r : s.fibers) {
    ps.push_back(multiplicity(r));
    prod *= ps.back();
  }
  auto gcds = k <= 12 ? subset_product_gcds_naive(ps) : subset_product_gcds(ps);

  // d[j] for j = 1..k+1, stored at index j.
  std::vector<BigInt> d(k + 2, 1);
  for (std::size_t j = 3; j <= k; ++j) d[j] = gcds[j - 2];
  Rational top = Rational(prod) * euler_invariant(s);
  if (!top.is_integer()) throw std::logic_error("p_1...p_k * eps is not an integer");
  d[k + 1] = abs(top.num());

  std::vector<BigInt> orders;
  for (std::size_t i = 1; i <= k; ++i) {
    if (d[i + 1] == 0) {
      orders.push_back(0);
      continue;
    }
    if (!mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()))
      throw std::logic_error("determinantal divisors fail to divide");
    orders.push_back(d[i + 1] / d[i]);
  }
  return AbelianGroup::from_cyclic(orders, extra);
}

std::vector<long> p_primary(const StandardForm& s, unsigned long prime) {
  Rational eps = euler_invariant(s);
  if (eps.is_zero()) throw std::invalid_argument("p_primary requires eps != 0");
  std::vector<long> v;
  for (const auto& r : s.fibers) v.push_back(valuation(multiplicity(r), prime));
  std::sort(v.begin(), v.end());
  while (v.size() < 2) v.insert(v.begin(), 0);
  const std::size_t k = v.size();
  long top = v[k - 1] + v[k - 2] + valuation(eps, prime);
  if (top < v[k - 2]) throw std::logic_error("p-primary exponent below v_{k-1}");
  if (v[k - 1] > v[k - 2] && top != v[k - 2])
    throw std::logic_error("p-primary exponent differs from v_{k-1}");
  std::vector<long> out(v.begin(), v.end() - 2);
  out.push_back(top);
  return out;
}

bool is_direct_double(const AbelianGroup& g) {
  const auto& d = g.invariant_factors;
  if (d.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < d.size(); i += 2)
    if (d[i] != d[i + 1]) return false;
  return true;
}

long dim_h1_z2(const StandardForm& s) {
  if (s.genus != 0) throw std::invalid_argument("dim_h1_z2 requires genus 0");
  if (euler_invariant(s).is_zero()) throw std::invalid_argument("dim_h1_z2 requires eps != 0");
  long n = 0;
  for (const auto& r : s.fibers)
    if (mpz_even_p(multiplicity(r).get_mpz_t())) ++n;
  if (n >= 1) return n - 1;
  long even = 0;
  for (const auto& d : h1_formula(s).invariant_factors)
    if (mpz_even_p(d.get_mpz_t())) ++even;
  return even;
}

std::string to_string(SumLawStatus s) {
  switch (s) {
    case SumLawStatus::Pass: return "pass";
    case SumLawStatus::InvalidPartition: return "invalid_partition";
    case SumLawStatus::EmptyClass: return "empty_class";
    case SumLawStatus::ClassSumAboveOne: return "class_sum_above_one";
    case SumLawStatus::TooManyClasses: return "too_many_classes";
    case SumLawStatus::NonPositiveEpsilon: return "non_positive_epsilon";
    case SumLawStatus::WrongClassCount: return "wrong_class_count";
    case SumLawStatus::StrictClassCount: return "strict_class_count";
    case SumLawStatus::WrongDeficit: return "wrong_deficit";
    case SumLawStatus::GcdNotOne: return "gcd_not_one";
  }
  return "unknown";
}

SumLawResult partition_sum_law(const StandardForm& s, const Partition& p) {
  SumLawResult res;
  auto fail = [&](SumLawStatus st, std::optional<std::size_t> cls, std::string detail) {
    res.status = st;
    res.offending_class = cls;
    res.detail = std::move(detail);
    return res;
  };
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i].empty()) return fail(SumLawStatus::EmptyClass, i, "class is empty");
  if (!is_partition_of(p, s.k()))
    return fail(SumLawStatus::InvalidPartition, std::nullopt, "classes do not partition the fibers");

  std::vector<Rational> sums;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sums.push_back(class_sum(s, p[i]));
    if (sums.back() > Rational(1))
      return fail(SumLawStatus::ClassSumAboveOne, i, "class sum " + sums.back().str() + " exceeds 1");
  }
  if (BigInt(p.size()) > s.central)
    return fail(SumLawStatus::TooManyClasses, std::nullopt,
                std::to_string(p.size()) + " classes but e = " + s.central.get_str());
  if (euler_invariant(s).sign() <= 0)
    return fail(SumLawStatus::NonPositiveEpsilon, std::nullopt, "eps is not positive");

  res.direct_double = is_direct_double(h1_formula(s));

  if (BigInt(p.size()) != s.central)
    return fail(SumLawStatus::WrongClassCount, std::nullopt,
                std::to_string(p.size()) + " classes but e = " + s.central.get_str());
  std::vector<std::size_t> strict;
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (sums[i] < Rational(1)) strict.push_back(i);
  if (strict.size() != 1)
    return fail(SumLawStatus::StrictClassCount, strict.empty() ? std::nullopt : std::optional(strict[1]),
                std::to_string(strict.size()) + " classes have sum below 1");
  Rational want(BigInt(1), fiber_lcm(s));
  Rational deficit = Rational(1) - sums[strict[0]];
  if (deficit != want)
    return fail(SumLawStatus::WrongDeficit, strict[0],
                "deficit " + deficit.str() + " differs from " + want.str());
  if (s.k() % 2 == 0) {
    std::vector<BigInt> ps;
    for (const auto& r : s.fibers) ps.push_back(multiplicity(r));
    if (gcd_of(ps) != 1)
      return fail(SumLawStatus::GcdNotOne, std::nullopt, "k is even but gcd of multiplicities is not 1");
  }
  return res;
}

}  // namespace sfs
