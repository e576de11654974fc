#include "sfs/pretzel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sfs/mubar.hpp"

namespace sfs {

OddPretzel::OddPretzel(std::vector<long> c) : strands(std::move(c)) {
  if (strands.empty()) throw std::invalid_argument("pretzel needs at least one strand");
  for (long x : strands)
    if (x % 2 == 0) throw std::invalid_argument("even pretzel strand " + std::to_string(x));
}

OddPretzel OddPretzel::mirror() const {
  std::vector<long> c = strands;
  for (auto& x : c) x = -x;
  return OddPretzel(c);
}

std::string OddPretzel::str() const {
  std::string s = "P(";
  for (std::size_t i = 0; i < strands.size(); ++i) s += (i ? "," : "") + std::to_string(strands[i]);
  return s + ")";
}

SeifertData double_branched_cover(const OddPretzel& k) {
  SeifertData d;
  d.genus = 0;
  d.central = 0;
  for (long c : k.strands) {
    if (c == 1 || c == -1)
      d.central -= c;
    else
      d.fibers.emplace_back(c);
  }
  return d;
}

BigInt pretzel_determinant(const OddPretzel& k) {
  BigInt total = 0;
  for (std::size_t i = 0; i < k.k(); ++i) {
    BigInt prod = 1;
    for (std::size_t j = 0; j < k.k(); ++j)
      if (j != i) prod *= k.strands[j];
    total += prod;
  }
  return abs(total);
}

PretzelNormal pretzel_normal(const OddPretzel& k) {
  PretzelNormal out;
  SeifertData d = double_branched_cover(k);
  if (euler_invariant(normalize(d)).is_zero()) throw std::invalid_argument(k.str() + " has eps = 0");
  out.form = normalize(d);
  out.reflected = out.form.orientation_reversed;
  for (const auto& r : out.form.fibers) {
    if (r.is_integer())
      ++out.n;
    else if (r.num() == r.den() + 1)
      ++out.m;
    else
      throw std::logic_error("unexpected pretzel fiber " + r.str());
  }
  out.e = out.form.central - out.m;
  return out;
}

BigInt pretzel_mubar_formula(const OddPretzel& k) {
  auto pn = pretzel_normal(k);
  return BigInt(pn.n - pn.m + 1) - pn.e;
}

BigInt pretzel_mubar(const OddPretzel& k) {
  if (!k.is_knot()) throw std::invalid_argument(k.str() + " is a link");
  auto pn = pretzel_normal(k);
  auto table = spin_mubar_table(pn.form);
  if (table.size() != 1) throw std::logic_error(k.str() + ": knot cover without a unique spin structure");
  BigInt f = BigInt(pn.n - pn.m + 1) - pn.e;
  if (table[0].mubar != f)
    throw std::logic_error(k.str() + ": solver mubar " + table[0].mubar.get_str() + " but formula " + f.get_str());
  return table[0].mubar;
}

OddPretzel cancel_unit_pairs(const OddPretzel& k) {
  long plus = 0, minus = 0;
  std::vector<long> rest;
  for (long c : k.strands) {
    if (c == 1)
      ++plus;
    else if (c == -1)
      ++minus;
    else
      rest.push_back(c);
  }
  long u = plus - minus;
  for (long i = 0; i < (u > 0 ? u : -u); ++i) rest.push_back(u > 0 ? 1 : -1);
  if (rest.empty()) rest.push_back(1);  // P(1,-1) closes to the unknot P(1)
  return OddPretzel(rest);
}

std::optional<long> pretzel_family_parameter(const std::vector<long>& strands) {
  if (strands.size() % 2 == 0) return std::nullopt;
  std::map<long, std::size_t> cnt;
  for (long c : strands) ++cnt[c];
  std::size_t m = strands.size() / 2;
  for (const auto& [a, n] : cnt) {
    if (a == 1 || a == -1 || n != m + 1) continue;
    if (m == 0 ? cnt.size() == 1 : (cnt.size() == 2 && cnt.count(-a) && cnt.at(-a) == m)) return a;
  }
  return std::nullopt;
}

DoublySliceVerdict doubly_slice_classify(const OddPretzel& k) {
  if (!k.is_knot()) throw std::invalid_argument(k.str() + " has an even number of strands");
  DoublySliceVerdict v;
  auto fail = [&](std::string what, std::string detail) {
    v.failed = std::move(what);
    v.detail = std::move(detail);
    return v;
  };

  auto pn = pretzel_normal(k);
  if (pn.form.k() == 0) {
    if (pn.form.central == 1)
      return fail("strand_multiset", "Sigma(K) is S^3 but the strands are not of the form {a x (m+1), -a x m}");
    return fail("torsion_direct_double", "H_1 = " + h1_formula(pn.form).str());
  }
  auto h1 = h1_formula(pn.form);
  if (!is_direct_double(h1)) return fail("torsion_direct_double", "H_1 = " + h1.str());
  if (pn.e < 0) return fail("partition_class_count", "e = " + pn.e.get_str() + " < 0");
  BigInt mu = pretzel_mubar(k);
  if (mu != 0) return fail("mubar", "mubar = " + mu.get_str());
  if (2 * pn.form.central > BigInt(pn.form.k() + 1))
    return fail("half_bound", to_string(pn.form) + " violates 2e <= k + 1");
  if (pn.e != 0) return fail("central_weight", "e = " + pn.e.get_str());
  auto fam = match_theorem_families(pn.form);
  if (!fam || fam->tag != FamilyTag::HalfBound)
    return fail("equality_family", to_string(pn.form) + " is not S^2((k+1)/2; a, ..., a/(a-1), ...)");
  auto a = pretzel_family_parameter(k.strands);
  if (!a)
    return fail("strand_multiset", "strands are not a permutation of {a x (m+1), -a x m}; after cancelling "
                                   "+1/-1 pairs the knot is " + cancel_unit_pairs(k).str());
  v.doubly_slice = true;
  v.a = *a;
  return v;
}

QaObstruction qa_montesinos_obstruction(const MontesinosNormal& m) {
  StandardForm s;
  s.genus = 0;
  s.central = m.central;
  s.fibers = m.fibers;
  for (const auto& r : s.fibers)
    if (r <= Rational(1)) throw std::invalid_argument("not in QA normal form: fiber " + r.str() + " <= 1");
  if (euler_invariant(s).sign() <= 0) throw std::invalid_argument("not in QA normal form: eps <= 0");
  const std::size_t k = s.k();
  QaObstruction out;
  if (k >= 1 && s.central >= BigInt(k)) {
    out.qa_case = 1;
    for (std::size_t i = 0; i < k; ++i) out.partition.push_back({i});
  } else if (k >= 2 && s.central == BigInt(k - 1) &&
             s.fibers[k - 2].reciprocal() + s.fibers[k - 1].reciprocal() < Rational(1)) {
    out.qa_case = 2;
    for (std::size_t i = 0; i + 2 < k; ++i) out.partition.push_back({i});
    out.partition.push_back({k - 2, k - 1});
  } else {
    throw std::invalid_argument("not in QA normal form");
  }
  out.sum_law = partition_sum_law(s, out.partition);
  if (out.sum_law.precondition_failed())
    throw std::logic_error("QA partition fails the sum law preconditions: " + out.sum_law.detail);
  if (out.sum_law.ok()) throw std::logic_error("QA partition satisfies the sum law");
  out.direct_double = is_direct_double(h1_formula(s));
  if (out.direct_double) throw std::logic_error("sum law violated but H_1 is a direct double");
  return out;
}

}  // namespace sfs
