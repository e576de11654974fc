#include "sfs/mubar.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfs {

bool is_characteristic(const IntMatrix& q, const CharacteristicSubset& c) {
  const std::size_t n = q.rows();
  for (std::size_t i = 0; i < n; ++i) {
    BigInt s = 0;
    for (auto v : c) {
      if (v >= n) return false;
      s += q(i, v);
    }
    s -= q(i, i);
    if (mpz_odd_p(s.get_mpz_t())) return false;
  }
  return true;
}

std::vector<CharacteristicSubset> characteristic_subsets(const PlumbingGraph& g, const IntMatrix& q) {
  const std::size_t n = q.rows();
  std::vector<std::vector<unsigned char>> a(n, std::vector<unsigned char>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpz_odd_p(q(i, j).get_mpz_t()) ? 1 : 0;
    a[i][n] = a[i][i];
  }
  std::vector<long> pivot_col_row(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && !a[p][col]) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != row && a[r][col])
        for (std::size_t c = col; c <= n; ++c) a[r][c] ^= a[row][c];
    pivot_col_row[col] = static_cast<long>(row);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (a[r][n]) throw std::logic_error("characteristic system is inconsistent");
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_col_row[c] < 0) free_cols.push_back(c);
  if (free_cols.size() > 24) throw std::invalid_argument("too many spin structures to enumerate");

  std::vector<CharacteristicSubset> out;
  auto edges = g.edges();
  for (unsigned long mask = 0; mask < (1UL << free_cols.size()); ++mask) {
    std::vector<unsigned char> w(n, 0);
    for (std::size_t i = 0; i < free_cols.size(); ++i) w[free_cols[i]] = (mask >> i) & 1UL;
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_col_row[c] < 0) continue;
      const auto& r = a[static_cast<std::size_t>(pivot_col_row[c])];
      unsigned char v = r[n];
      for (auto f : free_cols) v ^= static_cast<unsigned char>(r[f] & w[f]);
      w[c] = v;
    }
    for (auto [u, v] : edges)
      if (w[u] && w[v]) throw std::logic_error("characteristic subset is not isolated");
    CharacteristicSubset cs;
    for (std::size_t i = 0; i < n; ++i)
      if (w[i]) cs.push_back(i);
    out.push_back(std::move(cs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt mubar(const PlumbingGraph& g, const IntMatrix& q, const CharacteristicSubset& c) {
  if (!is_characteristic(q, c)) throw std::invalid_argument("subset is not characteristic");
  BigInt norm = 0;
  for (auto u : c)
    for (auto v : c) norm += q(u, v);
  return BigInt(g.vertex_count()) - norm;
}

std::vector<SpinValue> spin_mubar_table(const StandardForm& s) {
  PlumbingGraph g = build_plumbing(s);
  IntMatrix q = intersection_form(g);
  std::vector<SpinValue> out;
  for (auto& c : characteristic_subsets(g, q)) {
    BigInt m = mubar(g, q, c);
    out.push_back({std::move(c), m});
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

bool MubarConditions::obstructed() const { return first_failure() != nullptr; }

const ConditionCheck* MubarConditions::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return &c;
  return nullptr;
}

namespace {

bool even_mult(const Rational& r) { return mpz_even_p(multiplicity(r).get_mpz_t()) != 0; }

std::string class_str(const IndexClass& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i] + 1);
  return s + "}";
}

}  // namespace

std::optional<std::string> even_fiber_violation(const StandardForm& s, const Partition& p, std::size_t deficit) {
  std::size_t total_even = 0;
  for (const auto& r : s.fibers) total_even += even_mult(r);
  if (total_even == 0) return std::nullopt;
  std::size_t odd_classes = 0;
  for (const auto& c : p) {
    std::size_t n = 0;
    for (auto i : c) n += even_mult(s.fibers[i]);
    if (n % 2 == 1) {
      ++odd_classes;
      if (n != 1 && n != 3)
        return "class " + class_str(c) + " has " + std::to_string(n) + " even multiplicities";
    } else if (n != 0 && n != 2) {
      return "class " + class_str(c) + " has " + std::to_string(n) + " even multiplicities";
    }
  }
  if (odd_classes != 1)
    return std::to_string(odd_classes) + " classes have an odd number of even multiplicities";
  for (std::size_t ci = 0; ci < p.size(); ++ci) {
    if (ci == deficit) continue;
    const auto& c = p[ci];
    std::vector<std::size_t> evens;
    for (auto i : c)
      if (even_mult(s.fibers[i])) evens.push_back(i);
    if (evens.size() != 2) continue;
    for (auto f : evens) {
      BigInt bound = 1;
      for (auto i : c)
        if (i != f) bound += multiplicity(s.fibers[i]) - 1;
      BigInt ceil = s.fibers[f].ceil();
      if (ceil > bound)
        return "class " + class_str(c) + ": ceil(" + s.fibers[f].str() + ") = " + ceil.get_str() + " exceeds " +
               bound.get_str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> product_class_violation(const StandardForm& s, const Partition& p, std::size_t deficit) {
  for (std::size_t ci = 0; ci < p.size(); ++ci) {
    const auto& c = p[ci];
    if (ci == deficit || c.size() != 3) continue;
    for (std::size_t t = 0; t < 3; ++t) {
      const Rational& n = s.fibers[c[t]];
      if (!n.is_integer() || mpz_odd_p(n.num().get_mpz_t())) continue;
      const Rational& a = s.fibers[c[(t + 1) % 3]];
      const Rational& b = s.fibers[c[(t + 2) % 3]];
      if (multiplicity(a) * multiplicity(b) == n.num())
        return "class " + class_str(c) + " has the form {p/q, r/s, pr} with pr = " + n.str() + " even";
    }
  }
  return std::nullopt;
}

PartitionFilter spin_partition_filter(const StandardForm& s) {
  return [s](const Partition& p, std::size_t deficit) {
    return !even_fiber_violation(s, p, deficit) && !product_class_violation(s, p, deficit);
  };
}

MubarConditions mubar_embedding_conditions(const StandardForm& s, const std::optional<PartitionPair>& partitions) {
  if (s.genus != 0) throw std::invalid_argument("spin conditions are stated for genus 0");
  if (euler_invariant(s).sign() <= 0) throw std::invalid_argument("spin conditions require eps > 0");
  MubarConditions out;
  out.dim_h1_z2 = dim_h1_z2(s);
  auto table = spin_mubar_table(s);
  out.spin_structures = table.size();
  for (const auto& sv : table) out.vanishing += sv.mubar == 0;
  if (out.spin_structures != (1UL << out.dim_h1_z2))
    throw std::logic_error("characteristic subset count disagrees with dim H^1(Y;Z/2)");

  ConditionCheck dim{"dim_h1_z2_bound", CheckStatus::Pass,
                     "dim H^1(Y;Z/2) = " + std::to_string(out.dim_h1_z2) + ", 2e = " + BigInt(2 * s.central).get_str()};
  if (BigInt(out.dim_h1_z2) > 2 * s.central) dim.status = CheckStatus::Fail;
  out.checks.push_back(dim);

  ConditionCheck spin{"vanishing_mubar_count", CheckStatus::Pass, ""};
  if (out.dim_h1_z2 % 2 != 0) {
    spin.status = CheckStatus::Fail;
    spin.witness = std::to_string(out.spin_structures) + " spin structures is not a perfect square";
  } else {
    std::size_t need = 1UL << (out.dim_h1_z2 / 2);
    spin.witness = std::to_string(out.vanishing) + " of " + std::to_string(out.spin_structures) +
                   " spin structures have vanishing mubar, need " + std::to_string(need);
    if (out.vanishing < need) spin.status = CheckStatus::Fail;
  }
  out.checks.push_back(spin);

  ConditionCheck even{"even_fiber_classes", CheckStatus::NotApplicable, "no partition pair supplied"};
  ConditionCheck prod{"product_class_parity", CheckStatus::NotApplicable, "no partition pair supplied"};
  if (partitions) {
    bool any_even = std::any_of(s.fibers.begin(), s.fibers.end(), even_mult);
    even = {"even_fiber_classes", any_even ? CheckStatus::Pass : CheckStatus::NotApplicable,
            any_even ? "" : "no fiber has even multiplicity"};
    prod = {"product_class_parity", CheckStatus::Pass, ""};
    for (int side = 0; side < 2; ++side) {
      const Partition& p = side ? partitions->p2 : partitions->p1;
      std::size_t d = side ? partitions->deficit2 : partitions->deficit1;
      std::string tag = side ? "P2: " : "P1: ";
      if (any_even && even.status == CheckStatus::Pass)
        if (auto why = even_fiber_violation(s, p, d)) even = {even.name, CheckStatus::Fail, tag + *why};
      if (prod.status == CheckStatus::Pass)
        if (auto why = product_class_violation(s, p, d)) prod = {prod.name, CheckStatus::Fail, tag + *why};
    }
  }
  out.checks.push_back(even);
  out.checks.push_back(prod);
  return out;
}

}  // namespace sfs
