#include "sfs/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sfs {

std::string to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::Embeds: return "EMBEDS";
    case VerdictTag::Obstructed: return "OBSTRUCTED";
    case VerdictTag::Unknown: return "UNKNOWN";
    case VerdictTag::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

const std::vector<CitedRule>& cited_rules() {
  static const std::vector<CitedRule> rules = {
      {"torsion_direct_double",
       "If Y embeds in S^4 then the torsion of H_1(Y) splits as a direct double G + G.", "Hantzsche"},
      {"eps_zero_complementary_pairs",
       "If eps(Y) = 0 and Y embeds smoothly in S^4 then the Seifert invariants occur in complementary pairs.",
       "Donald"},
      {"eps_zero_all_odd", "F(0; p_1/q_1, -p_1/q_1, ..., p_k/q_k, -p_k/q_k) embeds when p_i is odd for all i.",
       "Crisp-Hillman"},
      {"eps_zero_one_even",
       "F(0; p_1/q_1, -p_1/q_1, ..., p_k/q_k, -p_k/q_k) embeds when p_i is even for at most one i.",
       "twist spinning and the disk subspace doubling argument"},
      {"eps_zero_even_odd", "S^2(0; a, -a, b, -b) embeds if a is even and b is odd.", "Donald"},
      {"eps_zero_furuta", "S^2(0; a, -a, b, -b) with a, b both even and a != b does not embed smoothly.",
       "Donald, via Furuta's 10/8 theorem"},
      {"cited_example", "S^2(1; 4, 4, 12/5) embeds smoothly in S^4.", "Donald"},
      {"eps_zero_disk_subspace",
       "F(0; r_1, -r_1, ..., r_m, -r_m) embeds if D^2(r_1, ..., r_m) sits inside an embedded Seifert space.",
       "disk subspace doubling of Donald's example"},
  };
  return rules;
}

const CitedRule& cited_rule(const std::string& id) {
  for (const auto& r : cited_rules())
    if (id == r.id) return r;
  throw std::out_of_range("no cited rule " + id);
}

namespace {

bool is_half_base(const Rational& r) { return r.den() == r.num() - 1; }

bool s3_pair(const Rational& a, const Rational& b) {
  return a.reciprocal() + b.reciprocal() == Rational(1) - Rational(BigInt(1), BigInt(a.num() * b.num()));
}

const std::vector<Rational>& cited_fibers() {
  static const std::vector<Rational> f = {Rational(4), Rational(4), Rational(12, 5)};
  return f;
}

std::string key_of(const StandardForm& s) {
  std::string k = s.central.get_str() + ";";
  for (const auto& r : sorted_fibers(s.fibers)) k += r.str() + ",";
  return k;
}

}  // namespace

std::optional<std::string> recognized_base(const StandardForm& s) {
  if (s.central != 1) return std::nullopt;
  if (s.k() == 0) return "s3_trivial";
  if (s.k() == 1 && is_half_base(s.fibers[0])) return "s3_single";
  if (s.k() == 2 && s3_pair(s.fibers[0], s.fibers[1])) return "s3_pair";
  if (sorted_fibers(s.fibers) == sorted_fibers(cited_fibers())) return "cited_example";
  return std::nullopt;
}

StandardForm replay(const Certificate& c) {
  if (c.doubled) {
    SeifertData d;
    d.genus = c.base.genus + c.genus_bumps;
    for (const auto& r : c.base.fibers) {
      d.fibers.push_back(r);
      d.fibers.push_back(-r);
    }
    return normalize(d);
  }
  StandardForm s = c.base;
  for (auto j : c.expansions) s = expand(s, j);
  s.genus += c.genus_bumps;
  return s;
}

bool replay_matches(const Certificate& c, const StandardForm& target) {
  if (!c.doubled) {
    auto kind = recognized_base(c.base);
    if (!kind || c.base.genus != 0) return false;
  }
  return same_space(replay(c), target);
}

EpsZeroPairing eps_zero_pairing(const std::vector<Rational>& fibers) {
  EpsZeroPairing out;
  std::map<Rational, std::size_t> cnt;
  for (const auto& r : fibers) {
    if (r <= Rational(1)) throw std::invalid_argument("pairing expects standard-form fibers");
    ++cnt[r];
  }
  for (const auto& [r, n] : cnt) {
    Rational c = complement(r);
    if (c == r) {
      if (n % 2) {
        out.witness = r.str() + " occurs an odd number of times";
        return out;
      }
      for (std::size_t i = 0; i < n / 2; ++i) out.representatives.push_back(r);
      continue;
    }
    std::size_t m = cnt.count(c) ? cnt.at(c) : 0;
    if (m != n) {
      out.witness = r.str() + " occurs " + std::to_string(n) + " times but its complement " + c.str() + " occurs " +
                    std::to_string(m) + " times";
      return out;
    }
    if (r > c)
      for (std::size_t i = 0; i < n; ++i) out.representatives.push_back(r);
  }
  std::sort(out.representatives.begin(), out.representatives.end(), std::greater<>());
  out.ok = true;
  return out;
}

namespace {

std::optional<BaseReduction> reduce_rec(const StandardForm& s, std::set<std::string>& failed) {
  if (auto kind = recognized_base(s)) return BaseReduction{s, *kind, {}};
  for (const auto& c : find_contractions(s)) {
    std::string key = key_of(c.form);
    if (failed.count(key)) continue;
    if (auto r = reduce_rec(c.form, failed)) {
      // Expansion only depends on the fiber value; locate it in the replayed list.
      StandardForm cur = r->base;
      for (auto j : r->expansions) cur = expand(cur, j);
      auto it = std::find(cur.fibers.begin(), cur.fibers.end(), s.fibers[c.j]);
      r->expansions.push_back(static_cast<std::size_t>(it - cur.fibers.begin()));
      return r;
    }
    failed.insert(key);
  }
  return std::nullopt;
}

}  // namespace

std::optional<BaseReduction> reduce_to_base(const StandardForm& s) {
  std::set<std::string> failed;
  StandardForm g0 = s;
  g0.genus = 0;
  g0.orientation_reversed = false;
  return reduce_rec(g0, failed);
}

std::vector<StandardForm> contraction_chain(const StandardForm& s) {
  std::vector<StandardForm> chain{s};
  for (;;) {
    auto cs = find_contractions(chain.back());
    if (cs.empty()) break;
    chain.push_back(cs.front().form);
  }
  return chain;
}

namespace {

struct Pipeline {
  Verdict v;
  const ClassifyOptions& opts;

  void add(std::string test, std::string result, std::string witness = "") {
    v.trace.push_back({std::move(test), std::move(result), std::move(witness)});
  }

  void obstruct(const std::string& name, const std::string& witness) {
    if (!v.obstruction) v.obstruction = Obstruction{name, witness};
  }

  std::string partition_str(const Partition& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i) {
      s += i ? ",{" : "{";
      for (std::size_t j = 0; j < p[i].size(); ++j) s += (j ? "," : "") + std::to_string(p[i][j] + 1);
      s += "}";
    }
    return s + "}";
  }

  void eps_zero() {
    const auto& s = v.standard_form;
    auto pairing = eps_zero_pairing(s.fibers);
    if (!pairing.ok) {
      add("eps_zero_complementary_pairs", "fail", pairing.witness);
      obstruct("eps_zero_complementary_pairs", pairing.witness);
      v.tag = VerdictTag::Obstructed;
      return;
    }
    std::string reps;
    for (const auto& r : pairing.representatives) reps += (reps.empty() ? "" : ", ") + r.str();
    add("eps_zero_complementary_pairs", "pass", "D^2(" + reps + ")");

    Certificate cert;
    cert.base.genus = 0;
    cert.base.central = 0;
    cert.base.fibers = pairing.representatives;
    cert.genus_bumps = s.genus;
    cert.doubled = true;

    std::size_t even = 0;
    for (const auto& r : pairing.representatives) even += mpz_even_p(r.num().get_mpz_t()) ? 1 : 0;
    const auto& reps_v = pairing.representatives;
    auto integer_pair = [](const Rational& r) { return r.is_integer() || r.num() == r.den() + 1; };
    auto integer_of = [](const Rational& r) { return r.num(); };

    auto embeds = [&](const std::string& rule, const std::string& why) {
      add(rule, "pass", why);
      cert.rule = rule;
      v.certificate = cert;
      v.tag = VerdictTag::Embeds;
    };
    if (even == 0) return embeds("eps_zero_all_odd", "every multiplicity is odd");
    add("eps_zero_all_odd", "fail", std::to_string(even) + " pairs have even multiplicity");
    if (even <= 1) return embeds("eps_zero_one_even", "exactly one pair has even multiplicity");
    add("eps_zero_one_even", "fail", std::to_string(even) + " pairs have even multiplicity");

    bool two_integer = reps_v.size() == 2 && integer_pair(reps_v[0]) && integer_pair(reps_v[1]);
    if (two_integer) {
      BigInt a = integer_of(reps_v[0]), b = integer_of(reps_v[1]);
      bool ae = mpz_even_p(a.get_mpz_t()), be = mpz_even_p(b.get_mpz_t());
      if (ae != be) return embeds("eps_zero_even_odd", "a = " + a.get_str() + ", b = " + b.get_str());
      if (ae && be && a != b) {
        std::string w = "a = " + a.get_str() + ", b = " + b.get_str() + " both even and distinct";
        add("eps_zero_furuta", "fail", w);
        obstruct("eps_zero_furuta", w);
        v.tag = VerdictTag::Obstructed;
        return;
      }
    }
    add("eps_zero_even_odd", "skip", "not of the shape S^2(0; a, -a, b, -b)");

    // Match each pair to a distinct fiber of the cited example.
    std::vector<Rational> pool = cited_fibers();
    bool fits = true;
    for (const auto& r : reps_v) {
      auto it = std::find_if(pool.begin(), pool.end(),
                             [&](const Rational& f) { return f == r || f == complement(r); });
      if (it == pool.end()) {
        fits = false;
        break;
      }
      pool.erase(it);
    }
    if (fits) return embeds("eps_zero_disk_subspace", "D^2(" + reps + ") lies in S^2(1; 4, 4, 12/5)");
    add("eps_zero_disk_subspace", "fail", "D^2(" + reps + ") is not a subspace of a known embedded space");
    v.tag = VerdictTag::Unknown;
  }

  void eps_positive() {
    const auto& s = v.standard_form;
    bool budget_hit = false;

    bool dd = is_direct_double(v.h1);
    add("torsion_direct_double", dd ? "pass" : "fail", "H_1 = " + v.h1.str());
    if (!dd) obstruct("torsion_direct_double", "torsion of H_1 = " + v.h1.str() + " is not G + G");

    if (!v.obstruction) {
      bool be = bound_e(s);
      std::string w = "e = " + s.central.get_str() + ", k = " + std::to_string(s.k());
      add("half_bound", be ? "pass" : "fail", w);
      if (!be) obstruct("half_bound", w + " violates 2e <= k + 1");
    }

    v.family = match_theorem_families(s);
    if (v.family) {
      const auto& f = *v.family;
      std::string w = to_string(f.tag);
      if (f.tag == FamilyTag::HalfBound)
        w += " a = " + f.a.get_str();
      else
        w += " (p,q,r,s) = (" + f.p.get_str() + "," + f.q.get_str() + "," + f.r.get_str() + "," + f.s.get_str() + ")";
      add("theorem_families", "info", w);
    } else {
      add("theorem_families", "info", "no family shape matched");
    }

    PartitionSearchOptions popts;
    popts.max_k = opts.max_k;
    popts.node_budget = opts.node_budget;
    if (!v.obstruction) {
      auto pr = is_partitionable(s, popts);
      if (pr.witness) {
        v.partitions = pr.witness;
        add("partitionable", "pass",
            "P1 = " + partition_str(pr.witness->p1) + ", P2 = " + partition_str(pr.witness->p2));
        auto es = expansion_structure(s, *pr.witness);
        std::string w = std::string("pairs ") + (es.pairs_case ? "yes" : "no") + ", singletons " +
                        (es.singleton_case ? "yes" : "no") + ", ratio " + (es.ratio_case ? "yes" : "no");
        if (es.reduction) w += "; contracts to " + to_string(es.reduction->form);
        add("expansion_structure", "info", w);
      } else if (pr.refutation == Refutation::BudgetExceeded) {
        budget_hit = true;
        add("partitionable", "budget_exceeded", pr.detail);
      } else {
        add("partitionable", "fail", to_string(pr.refutation) + ": " + pr.detail);
        obstruct("partitionable", to_string(pr.refutation) + ": " + pr.detail);
      }
    }

    if (!v.obstruction && s.genus == 0) {
      auto mc = mubar_embedding_conditions(s, v.partitions);
      for (const auto& c : mc.checks) {
        if (c.name == "even_fiber_classes" || c.name == "product_class_parity") continue;
        add(c.name, to_string(c.status), c.witness);
        if (c.status == CheckStatus::Fail) obstruct(c.name, c.witness);
      }
      bool any_even = std::any_of(s.fibers.begin(), s.fibers.end(),
                                  [](const Rational& r) { return mpz_even_p(r.num().get_mpz_t()) != 0; });
      if (!v.obstruction && any_even && !budget_hit) {
        PartitionSearchOptions ropts = popts;
        ropts.filter = spin_partition_filter(s);
        auto rr = is_partitionable(s, ropts);
        if (rr.witness) {
          v.partitions = rr.witness;
          add("spin_refined_partitions", "pass",
              "P1 = " + partition_str(rr.witness->p1) + ", P2 = " + partition_str(rr.witness->p2));
        } else if (rr.refutation == Refutation::BudgetExceeded) {
          budget_hit = true;
          add("spin_refined_partitions", "budget_exceeded", rr.detail);
        } else {
          std::string why = rr.detail;
          auto all = admissible_partitions(s, opts.node_budget);
          if (all)
            for (const auto& [p, d] : *all) {
              auto a = even_fiber_violation(s, p, d);
              auto b = product_class_violation(s, p, d);
              if (a || b) why += "; " + partition_str(p) + " rejected: " + (a ? *a : *b);
            }
          add("spin_refined_partitions", "fail", why);
          obstruct("spin_refined_partitions", why);
        }
      } else if (!v.obstruction) {
        add("spin_refined_partitions", "skip", any_even ? "partition search budget exhausted" : "no even multiplicity");
      }
      if (v.partitions && !v.obstruction) {
        auto mc2 = mubar_embedding_conditions(s, v.partitions);
        for (const auto& c : mc2.checks)
          if (c.name == "even_fiber_classes" || c.name == "product_class_parity")
            add(c.name, to_string(c.status), c.witness);
      }
    } else if (!v.obstruction) {
      add("spin_conditions", "skip", "spin conditions are applied to genus 0 only");
    }

    auto red = reduce_to_base(s);
    if (red) {
      Certificate cert;
      cert.rule = red->base_kind == "cited_example" ? "cited_example" : "expansion_from_s3";
      cert.base = red->base;
      cert.expansions = red->expansions;
      cert.genus_bumps = s.genus;
      if (!replay_matches(cert, s)) throw std::logic_error("embedding certificate fails to replay");
      add("contraction_to_base", "pass",
          to_string(red->base) + " (" + red->base_kind + ") with " + std::to_string(red->expansions.size()) +
              " expansions and " + std::to_string(s.genus) + " genus increases");
      if (v.obstruction)
        throw std::logic_error("trichotomy violated: " + v.obstruction->name + " obstructs a certified space");
      v.certificate = cert;
      v.tag = VerdictTag::Embeds;
      return;
    }
    auto chain = contraction_chain(s);
    add("contraction_to_base", "fail", "minimal contraction " + to_string(chain.back()) + " is not a known base");
    if (v.obstruction)
      v.tag = VerdictTag::Obstructed;
    else if (budget_hit)
      v.tag = VerdictTag::BudgetExceeded;
    else
      v.tag = VerdictTag::Unknown;
  }

  void no_fibers() {
    const auto& s = v.standard_form;
    if (s.central == 1) {
      Certificate cert;
      cert.rule = "expansion_from_s3";
      cert.base = StandardForm{0, 1, {}, false};
      cert.genus_bumps = s.genus;
      add("lens_space", "pass", "S^2(1;) is S^3" + std::string(s.genus ? ", raised in genus" : ""));
      v.certificate = cert;
      v.tag = VerdictTag::Embeds;
      return;
    }
    bool dd = is_direct_double(v.h1);
    add("torsion_direct_double", dd ? "pass" : "fail", "H_1 = " + v.h1.str());
    if (!dd) {
      obstruct("torsion_direct_double", "torsion of H_1 = " + v.h1.str() + " is not G + G");
      v.tag = VerdictTag::Obstructed;
      return;
    }
    v.tag = VerdictTag::Unknown;
  }
};

}  // namespace

Verdict classify(const SeifertData& s, const ClassifyOptions& opts) {
  Pipeline pl{Verdict{}, opts};
  Verdict& v = pl.v;
  v.input = s;
  v.standard_form = normalize(s);
  v.epsilon = euler_invariant(v.standard_form);
  v.h1 = h1_formula(v.standard_form);
  pl.add("normalize", "info",
         to_string(v.standard_form) + (v.standard_form.orientation_reversed ? ", orientation reversed" : ""));
  if (v.epsilon.is_zero())
    pl.eps_zero();
  else if (v.standard_form.k() == 0)
    pl.no_fibers();
  else
    pl.eps_positive();
  if (v.tag == VerdictTag::Embeds && !replay_matches(*v.certificate, v.standard_form))
    throw std::logic_error("embedding certificate fails to replay");
  return v;
}

}  // namespace sfs
