#include "sfs/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sfs {

std::string to_string(Refutation r) {
  switch (r) {
    case Refutation::None: return "none";
    case Refutation::NotDirectDouble: return "not_direct_double";
    case Refutation::NoComplementaryClass: return "no_complementary_class";
    case Refutation::NoDeficitClass: return "no_deficit_class";
    case Refutation::NoPartition: return "no_partition";
    case Refutation::NoConnectedPair: return "no_connected_pair";
    case Refutation::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

std::string to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::HalfBound: return "half_bound";
    case FamilyTag::PairBase: return "pair_base";
    case FamilyTag::PairBaseWithProduct: return "pair_base_with_product";
  }
  return "unknown";
}

namespace {

using Mask = std::uint32_t;

std::vector<std::size_t> bits_of(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1U) out.push_back(i);
  return out;
}

struct ClassTable {
  std::size_t k = 0;
  Rational deficit_sum;
  // candidates[m]: masks whose lowest element is m, with sum 1 or deficit_sum,
  // ordered as ascending index lists compared lexicographically.
  std::vector<std::vector<std::pair<Mask, bool>>> candidates;
  bool any_complementary = false;
  bool any_deficit = false;
};

ClassTable build_table(const StandardForm& s) {
  ClassTable t;
  t.k = s.k();
  if (t.k > 24) throw std::invalid_argument("class table limited to 24 fibers");
  t.deficit_sum = Rational(1) - Rational(BigInt(1), fiber_lcm(s));
  std::vector<Rational> beta;
  for (const auto& r : s.fibers) beta.push_back(r.reciprocal());
  const Mask full = t.k == 0 ? 0 : static_cast<Mask>((1ULL << t.k) - 1);
  std::vector<Rational> sum(static_cast<std::size_t>(full) + 1);
  t.candidates.assign(t.k, {});
  const Rational one(1);
  for (Mask m = 1; m <= full && m != 0; ++m) {
    unsigned low = static_cast<unsigned>(__builtin_ctz(m));
    sum[m] = sum[m & (m - 1)] + beta[low];
    bool comp = sum[m] == one;
    bool def = sum[m] == t.deficit_sum;
    if (comp) t.any_complementary = true;
    if (def) t.any_deficit = true;
    if (comp || def) t.candidates[low].emplace_back(m, def);
    if (m == full) break;
  }
  for (auto& list : t.candidates)
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return bits_of(a.first) < bits_of(b.first); });
  return t;
}

struct PartitionEnumerator {
  const ClassTable& t;
  std::size_t e;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<Mask> stack;
  std::optional<std::size_t> deficit_pos;
  std::vector<std::pair<Partition, std::size_t>> out;

  PartitionEnumerator(const ClassTable& table, std::size_t classes, std::uint64_t node_budget)
      : t(table), e(classes), budget(node_budget) {}

  void run(Mask assigned) {
    if (exhausted) return;
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    const Mask full = static_cast<Mask>((1ULL << t.k) - 1);
    if (assigned == full) {
      if (stack.size() == e && deficit_pos) {
        Partition p;
        for (Mask m : stack) p.push_back(bits_of(m));
        out.emplace_back(std::move(p), *deficit_pos);
      }
      return;
    }
    if (stack.size() >= e) return;
    std::size_t remaining = t.k - static_cast<std::size_t>(__builtin_popcount(assigned));
    if (remaining < e - stack.size()) return;
    unsigned low = static_cast<unsigned>(__builtin_ctz(~assigned));
    for (const auto& [m, def] : t.candidates[low]) {
      if (m & assigned) continue;
      if (def && deficit_pos) continue;
      stack.push_back(m);
      if (def) deficit_pos = stack.size() - 1;
      run(assigned | m);
      if (def) deficit_pos.reset();
      stack.pop_back();
      if (exhausted) return;
    }
  }
};

std::optional<std::size_t> as_count(const BigInt& e) {
  if (e < 0 || e > 1'000'000) return std::nullopt;
  return static_cast<std::size_t>(e.get_ui());
}

}  // namespace

std::optional<std::vector<std::pair<Partition, std::size_t>>> admissible_partitions(
    const StandardForm& s, std::uint64_t node_budget, std::uint64_t* nodes_used) {
  std::vector<std::pair<Partition, std::size_t>> none;
  auto e = as_count(s.central);
  if (!e || *e == 0 || *e > s.k()) {
    if (nodes_used) *nodes_used = 0;
    return none;
  }
  ClassTable t = build_table(s);
  PartitionEnumerator en(t, *e, node_budget);
  en.run(0);
  if (nodes_used) *nodes_used = en.nodes;
  if (en.exhausted) return std::nullopt;
  return std::move(en.out);
}

bool unions_disjoint_condition(const Partition& p1, const Partition& p2, std::size_t k) {
  if (k == 0) return true;
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Partition* p : {&p1, &p2})
    for (const auto& c : *p)
      for (std::size_t i = 1; i < c.size(); ++i) parent[find(c[i])] = find(c[0]);
  std::size_t root = find(0);
  for (std::size_t i = 1; i < k; ++i)
    if (find(i) != root) return false;
  return true;
}

PartitionResult is_partitionable(const StandardForm& s, const PartitionSearchOptions& opts) {
  if (euler_invariant(s).sign() <= 0) throw std::invalid_argument("partition search requires eps > 0");
  PartitionResult res;
  if (!is_direct_double(h1_formula(s))) {
    res.refutation = Refutation::NotDirectDouble;
    res.detail = "torsion of H_1 is " + h1_formula(s).str() + ", not of the form G + G";
    return res;
  }
  if (s.k() > opts.max_k) {
    res.refutation = Refutation::BudgetExceeded;
    res.detail = std::to_string(s.k()) + " fibers exceeds the search limit of " + std::to_string(opts.max_k);
    return res;
  }
  auto e = as_count(s.central);
  if (!e || *e > s.k()) {
    res.refutation = Refutation::NoPartition;
    res.detail = "e = " + s.central.get_str() + " exceeds the number of fibers";
    return res;
  }
  ClassTable t = build_table(s);
  if (*e >= 2 && !t.any_complementary) {
    res.refutation = Refutation::NoComplementaryClass;
    res.detail = "no set of fibers has reciprocal sum 1";
    return res;
  }
  if (!t.any_deficit) {
    res.refutation = Refutation::NoDeficitClass;
    res.detail = "no set of fibers has reciprocal sum " + t.deficit_sum.str();
    return res;
  }
  PartitionEnumerator en(t, *e, opts.node_budget);
  en.run(0);
  res.nodes = en.nodes;
  if (en.exhausted) {
    res.refutation = Refutation::BudgetExceeded;
    res.detail = "node budget exhausted while enumerating partitions";
    return res;
  }
  auto list = std::move(en.out);
  if (list.empty()) {
    res.refutation = Refutation::NoPartition;
    res.detail = "no partition into " + s.central.get_str() + " classes with the required sums";
    return res;
  }
  if (opts.filter) {
    std::erase_if(list, [&](const auto& pd) { return !opts.filter(pd.first, pd.second); });
    if (list.empty()) {
      res.refutation = Refutation::NoPartition;
      res.detail = "every partition with the required sums fails the parity conditions";
      return res;
    }
  }
  res.admissible_partitions = list.size();
  for (const auto& [a, da] : list)
    for (const auto& [b, db] : list) {
      if (++res.nodes > opts.node_budget) {
        res.refutation = Refutation::BudgetExceeded;
        res.detail = "node budget exhausted while pairing partitions";
        return res;
      }
      if (unions_disjoint_condition(a, b, s.k())) {
        res.witness = PartitionPair{a, b, da, db};
        return res;
      }
    }
  res.refutation = Refutation::NoConnectedPair;
  res.detail = std::to_string(list.size()) + " admissible partitions but every pair shares a proper union";
  return res;
}

bool validate_partition_pair(const StandardForm& s, const PartitionPair& w, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (euler_invariant(s).sign() <= 0) return fail("eps is not positive");
  if (!is_direct_double(h1_formula(s))) return fail("torsion is not a direct double");
  Rational deficit = Rational(1) - Rational(BigInt(1), fiber_lcm(s));
  for (const auto* pp : {&w.p1, &w.p2}) {
    const Partition& p = *pp;
    std::size_t def = pp == &w.p1 ? w.deficit1 : w.deficit2;
    if (!is_partition_of(p, s.k())) return fail("not a partition of the fiber indices");
    if (BigInt(p.size()) != s.central) return fail("class count differs from e");
    if (def >= p.size()) return fail("deficit index out of range");
    for (std::size_t i = 0; i < p.size(); ++i) {
      Rational sum = class_sum(s, p[i]);
      if (i == def && sum != deficit) return fail("deficit class sum is " + sum.str());
      if (i != def && sum != Rational(1)) return fail("complementary class sum is " + sum.str());
    }
  }
  if (!unions_disjoint_condition(w.p1, w.p2, s.k())) return fail("a proper union of classes is shared");
  return true;
}

bool bound_e(const StandardForm& s) { return BigInt(2) * s.central <= BigInt(s.k() + 1); }

namespace {

std::map<Rational, std::size_t> counts_of(const std::vector<Rational>& v) {
  std::map<Rational, std::size_t> m;
  for (const auto& r : v) ++m[r];
  return m;
}

// Decomposes a multiset into complementary pairs {x, x'} drawn from the given
// families; returns the number of pairs per family, or nullopt.
std::optional<std::vector<std::size_t>> pair_up(const std::vector<Rational>& values,
                                                const std::vector<Rational>& families) {
  auto cnt = counts_of(values);
  std::vector<std::size_t> per(families.size(), 0);
  std::map<Rational, bool> used;
  for (std::size_t f = 0; f < families.size(); ++f) {
    Rational x = families[f], y = complement(x);
    if (used[x] || used[y]) continue;
    used[x] = used[y] = true;
    std::size_t cx = cnt.count(x) ? cnt[x] : 0, cy = cnt.count(y) ? cnt[y] : 0;
    if (x == y) {
      if (cx % 2) return std::nullopt;
      per[f] = cx / 2;
    } else {
      if (cx != cy) return std::nullopt;
      per[f] = cx;
    }
    cnt.erase(x);
    cnt.erase(y);
  }
  if (!cnt.empty()) return std::nullopt;
  return per;
}

}  // namespace

std::optional<FamilyMatch> match_theorem_families(const StandardForm& s) {
  const std::size_t k = s.k();
  if (k == 0 || euler_invariant(s).sign() <= 0) return std::nullopt;
  if (k % 2 == 1 && BigInt(2) * s.central == BigInt(k + 1)) {
    std::vector<BigInt> as;
    for (const auto& r : s.fibers)
      if (r.den() == r.num() - 1) as.push_back(r.num());
    std::sort(as.begin(), as.end());
    for (const auto& a : as) {
      Rational big(a), small(a, BigInt(a - 1));
      auto cnt = counts_of(s.fibers);
      std::size_t e = (k + 1) / 2;
      std::size_t ns = cnt.count(small) ? cnt.at(small) : 0, nb = cnt.count(big) ? cnt.at(big) : 0;
      bool ok = a == 2 ? cnt.size() == 1 && nb == k : ns == e && nb == e - 1 && ns + nb == k;
      if (ok) {
        FamilyMatch m{FamilyTag::HalfBound, a, 0, 0, 0, 0};
        return m;
      }
    }
  }
  if (k % 2 == 0 && BigInt(2) * s.central == BigInt(k)) {
    std::optional<FamilyMatch> with_product;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const Rational& a = s.fibers[i];
        const Rational& b = s.fibers[j];
        BigInt pr = a.num() * b.num();
        if (a.reciprocal() + b.reciprocal() != Rational(1) - Rational(BigInt(1), pr)) continue;
        std::vector<Rational> rest;
        for (std::size_t t = 0; t < k; ++t)
          if (t != i && t != j) rest.push_back(s.fibers[t]);
        FamilyMatch m{FamilyTag::PairBase, 0, a.num(), a.den(), b.num(), b.den(), i, j, 0};
        if (pair_up(rest, {a, b})) return m;
        if (!with_product) {
          auto per = pair_up(rest, {a, b, Rational(pr)});
          if (per && (*per)[2] >= 1) {
            m.tag = FamilyTag::PairBaseWithProduct;
            m.product_pairs = (*per)[2];
            with_product = m;
          }
        }
      }
    if (with_product) return with_product;
  }
  return std::nullopt;
}

namespace {

bool is_comp_class(const PartitionPair& w, bool first, std::size_t idx) {
  return idx != (first ? w.deficit1 : w.deficit2);
}

ContractedWitness reindex(const StandardForm& s, const Partition& p1, const Partition& p2,
                          std::vector<std::size_t> removed, char used) {
  ContractedWitness cw;
  cw.used_case = used;
  std::sort(removed.begin(), removed.end());
  cw.removed = removed;
  std::vector<long> newidx(s.k(), -1);
  cw.form.genus = s.genus;
  cw.form.central = s.central - 1;
  cw.form.orientation_reversed = s.orientation_reversed;
  for (std::size_t i = 0; i < s.k(); ++i) {
    if (std::binary_search(removed.begin(), removed.end(), i)) continue;
    newidx[i] = static_cast<long>(cw.index_map.size());
    cw.index_map.push_back(i);
    cw.form.fibers.push_back(s.fibers[i]);
  }
  Rational deficit = Rational(1) - Rational(BigInt(1), fiber_lcm(cw.form));
  auto remap = [&](const Partition& p, std::size_t& def) {
    Partition out;
    for (const auto& c : p) {
      IndexClass nc;
      for (auto i : c) {
        if (newidx[i] < 0) throw std::logic_error("contracted partition references a removed fiber");
        nc.push_back(static_cast<std::size_t>(newidx[i]));
      }
      std::sort(nc.begin(), nc.end());
      out.push_back(std::move(nc));
    }
    std::sort(out.begin(), out.end());
    def = out.size();
    for (std::size_t i = 0; i < out.size(); ++i)
      if (class_sum(cw.form, out[i]) == deficit) def = i;
    return out;
  };
  cw.witness.p1 = remap(p1, cw.witness.deficit1);
  cw.witness.p2 = remap(p2, cw.witness.deficit2);
  return cw;
}

std::optional<ContractedWitness> contract_pairs(const StandardForm& s, const PartitionPair& w) {
  for (std::size_t c1 = 0; c1 < w.p1.size(); ++c1) {
    const auto& A = w.p1[c1];
    if (A.size() != 2 || !is_comp_class(w, true, c1)) continue;
    for (int o = 0; o < 2; ++o) {
      std::size_t a = A[o], b = A[1 - o];
      for (std::size_t c2 = 0; c2 < w.p2.size(); ++c2) {
        const auto& B = w.p2[c2];
        if (B.size() != 2 || !is_comp_class(w, false, c2)) continue;
        if (B[0] != b && B[1] != b) continue;
        std::size_t c = B[0] == b ? B[1] : B[0];
        if (c == a) continue;
        Partition p1, p2;
        for (std::size_t i = 0; i < w.p1.size(); ++i)
          if (i != c1) p1.push_back(w.p1[i]);
        for (std::size_t i = 0; i < w.p2.size(); ++i) {
          if (i == c2) continue;
          IndexClass cl = w.p2[i];
          for (auto& x : cl)
            if (x == a) x = c;
          p2.push_back(cl);
        }
        return reindex(s, p1, p2, {a, b}, 'p');
      }
    }
  }
  return std::nullopt;
}

std::optional<ContractedWitness> contract_singletons(const StandardForm& s, const PartitionPair& w) {
  for (std::size_t c1 = 0; c1 < w.p1.size(); ++c1) {
    if (w.p1[c1].size() != 1) continue;
    std::size_t y = w.p1[c1][0];
    for (std::size_t c2 = 0; c2 < w.p2.size(); ++c2) {
      if (w.p2[c2].size() != 1) continue;
      std::size_t x = w.p2[c2][0];
      if (x == y) continue;
      std::size_t zc = w.p1.size();
      for (std::size_t i = 0; i < w.p1.size(); ++i)
        if (std::find(w.p1[i].begin(), w.p1[i].end(), x) != w.p1[i].end()) zc = i;
      if (zc == w.p1.size() || w.p1[zc].size() != 2) continue;
      std::size_t z = w.p1[zc][0] == x ? w.p1[zc][1] : w.p1[zc][0];
      Partition p1, p2;
      for (std::size_t i = 0; i < w.p1.size(); ++i)
        if (i != zc) p1.push_back(w.p1[i]);
      for (std::size_t i = 0; i < w.p2.size(); ++i) {
        if (i == c2) continue;
        IndexClass cl;
        for (auto v : w.p2[i])
          if (v != z) cl.push_back(v);
        if (cl.empty()) throw std::logic_error("singleton contraction emptied a class");
        p2.push_back(cl);
      }
      return reindex(s, p1, p2, {z, x}, 's');
    }
  }
  return std::nullopt;
}

}  // namespace

ExpansionStructure expansion_structure(const StandardForm& s, const PartitionPair& w) {
  std::string why;
  if (!validate_partition_pair(s, w, &why)) throw std::invalid_argument("invalid witness: " + why);
  ExpansionStructure out;
  const std::size_t k = s.k();
  for (std::size_t i = 0; i < w.p1.size(); ++i)
    if (w.p1[i].size() == 2 && i != w.deficit1) ++out.m1;
  for (std::size_t i = 0; i < w.p2.size(); ++i)
    if (w.p2[i].size() == 2 && i != w.deficit2) ++out.m2;
  auto has_single = [](const Partition& p) {
    return std::any_of(p.begin(), p.end(), [](const auto& c) { return c.size() == 1; });
  };
  out.pairs_case = BigInt(out.m1 + out.m2) >= s.central;
  out.singleton_case = has_single(w.p1) && has_single(w.p2);
  out.ratio_case = BigInt(5) * s.central >= BigInt(2 * k + 3);
  if (k < 3 || !(out.pairs_case || out.singleton_case || out.ratio_case)) return out;

  if (out.pairs_case) out.reduction = contract_pairs(s, w);
  if (!out.reduction && out.singleton_case && k >= 4) out.reduction = contract_singletons(s, w);
  if (!out.reduction) throw std::logic_error("expansion hypotheses hold but no contraction was constructed");
  if (!validate_partition_pair(out.reduction->form, out.reduction->witness, &why))
    throw std::logic_error("contracted witness fails validation: " + why);
  return out;
}

}  // namespace sfs
