#include <doctest.h>

#include "oracles.hpp"

using namespace sfs;

namespace {
Rational q(long a, long b) { return Rational(BigInt(a), BigInt(b)); }
SeifertData sd(long g, long e, std::vector<Rational> f) { return SeifertData{g, e, std::move(f)}; }

bool has_entry(const Verdict& v, const std::string& test, const std::string& result) {
  for (const auto& t : v.trace)
    if (t.test == test && t.result == result) return true;
  return false;
}
}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("golden verdicts") {
    auto a = classify(sd(0, 0, {-3, 3, -3}));
    CHECK(a.tag == VerdictTag::Embeds);
    REQUIRE(a.certificate);
    CHECK(replay_matches(*a.certificate, a.standard_form));
    CHECK(a.certificate->expansions.size() == 1);
    CHECK(to_string(a.certificate->base) == "SFS(g=0; e=1; 3/2)");

    auto b = classify(sd(0, 2, {2, q(3, 2), q(5, 4)}));
    CHECK(b.tag == VerdictTag::Obstructed);
    REQUIRE(b.obstruction);
    CHECK(b.obstruction->name == "partitionable");

    auto c = classify(sd(0, 1, {4, 4, q(12, 5)}));
    CHECK(c.tag == VerdictTag::Embeds);
    CHECK(c.certificate->rule == "cited_example");

    auto d = classify(sd(0, 2, {3, q(5, 3), 15, q(15, 14)}));
    CHECK(d.tag == VerdictTag::Unknown);
    CHECK_FALSE(d.obstruction);
    for (const auto& t : d.trace) CHECK((t.result != "fail" || t.test == "contraction_to_base"));
  }

  TEST_CASE("recognized bases") {
    CHECK(recognized_base(StandardForm{0, 1, {q(4, 3)}, false}) == "s3_single");
    CHECK(recognized_base(StandardForm{0, 1, {2, q(5, 2)}, false}) == "s3_pair");
    CHECK(recognized_base(StandardForm{0, 1, {q(12, 5), 4, 4}, false}) == "cited_example");
    CHECK(recognized_base(StandardForm{0, 1, {}, false}) == "s3_trivial");
    CHECK_FALSE(recognized_base(StandardForm{0, 1, {3}, false}));
    CHECK_FALSE(recognized_base(StandardForm{0, 2, {q(4, 3)}, false}));
  }

  TEST_CASE("pair families") {
    auto v = classify(sd(0, 2, {2, q(5, 2), 2, 2}));
    CHECK(v.tag == VerdictTag::Embeds);
    REQUIRE(v.family);
    CHECK(v.family->tag == FamilyTag::PairBase);

    auto w = classify(sd(0, 2, {2, q(5, 2), 10, q(10, 9)}));
    CHECK(w.tag == VerdictTag::Obstructed);
    REQUIRE(w.family);
    CHECK(w.family->tag == FamilyTag::PairBaseWithProduct);
    CHECK(w.obstruction->name == "spin_refined_partitions");
    CHECK(w.obstruction->witness.find("exceeds") != std::string::npos);
  }

  TEST_CASE("half-bound family embeds for small parameters") {
    for (long a = 2; a <= 6; ++a)
      for (long e = 1; e <= 4; ++e) {
        StandardForm s{0, e, {}, false};
        for (long i = 0; i < e; ++i) s.fibers.push_back(q(a, a - 1));
        for (long i = 0; i + 1 < e; ++i) s.fibers.push_back(Rational(a));
        auto v = classify(s.data());
        REQUIRE_MESSAGE(v.tag == VerdictTag::Embeds, to_string(s));
        REQUIRE(replay_matches(*v.certificate, v.standard_form));
      }
  }

  TEST_CASE("eps = 0 branch") {
    auto furuta = classify(sd(0, 0, {2, -2, 4, -4}));
    CHECK(furuta.tag == VerdictTag::Obstructed);
    CHECK(furuta.obstruction->name == "eps_zero_furuta");

    auto odd = classify(sd(0, 0, {3, -3, 5, -5}));
    CHECK(odd.tag == VerdictTag::Embeds);
    CHECK(odd.certificate->rule == "eps_zero_all_odd");
    CHECK(odd.certificate->doubled);

    auto one = classify(sd(0, 0, {2, -2, 3, -3}));
    CHECK(one.certificate->rule == "eps_zero_one_even");

    auto unpaired = classify(sd(0, 1, {2, 3, 6}));
    CHECK(unpaired.tag == VerdictTag::Obstructed);
    CHECK(unpaired.obstruction->name == "eps_zero_complementary_pairs");

    auto disk = classify(sd(0, 0, {4, -4, q(12, 5), q(-12, 5)}));
    CHECK(disk.tag == VerdictTag::Embeds);
    CHECK(disk.certificate->rule == "eps_zero_disk_subspace");

    auto open = classify(sd(0, 0, {2, -2, 4, -4, 6, -6}));
    CHECK(open.tag == VerdictTag::Unknown);

    auto circle = classify(sd(3, 0, {}));
    CHECK(circle.tag == VerdictTag::Embeds);
  }

  TEST_CASE("pairing helper") {
    auto p = eps_zero_pairing({q(3, 2), 3, 2, 2});
    REQUIRE(p.ok);
    CHECK(p.representatives == std::vector<Rational>{3, 2});
    CHECK_FALSE(eps_zero_pairing({2, 2, 2}).ok);
  }

  TEST_CASE("no exceptional fibers") {
    CHECK(classify(sd(0, 1, {})).tag == VerdictTag::Embeds);
    CHECK(classify(sd(2, -1, {})).tag == VerdictTag::Embeds);
    CHECK(classify(sd(0, 4, {})).tag == VerdictTag::Obstructed);
  }

  TEST_CASE("genus increases carry embeddings") {
    auto v = classify(sd(2, 0, {-3, 3, -3}));
    CHECK(v.tag == VerdictTag::Embeds);
    CHECK(v.certificate->genus_bumps == 2);
    CHECK(replay(*v.certificate).genus == 2);
  }

  TEST_CASE("every certificate replays and every verdict is consistent") {
    oracle::Rng rng(2718);
    int embeds = 0, total = 0;
    for (int i = 0; i < 400; ++i) {
      SeifertData d;
      if (rng.coin()) {
        d = oracle::random_space(rng, 2, 6, 12, -3, 5, true);
      } else {
        long a = rng.uniform(2, 9);
        StandardForm s{0, 1, {q(a, a - 1)}, false};
        if (rng.coin()) s = StandardForm{0, 1, {2, q(5, 2)}, false};
        for (long t = rng.uniform(0, 3); t > 0; --t) s = expand(s, rng.uniform(0, static_cast<long>(s.k()) - 1));
        s.genus = rng.uniform(0, 2);
        d = s.data();
      }
      Verdict v = classify(d);
      ++total;
      REQUIRE_FALSE(v.trace.empty());
      REQUIRE(v.trace.front().test == "normalize");
      if (v.tag == VerdictTag::Embeds) {
        ++embeds;
        REQUIRE(v.certificate);
        REQUIRE_FALSE(v.obstruction);
        REQUIRE(replay_matches(*v.certificate, v.standard_form));
      }
      if (v.tag == VerdictTag::Obstructed) REQUIRE(v.obstruction);
    }
    MESSAGE(total << " spaces, " << embeds << " certified");
    CHECK(embeds > 100);
  }

  TEST_CASE("cited rules carry sources") {
    for (const auto& r : cited_rules()) {
      CHECK(std::string(r.statement).size() > 10);
      CHECK(std::string(r.source).size() > 3);
    }
    CHECK(std::string(cited_rule("cited_example").source) == "Donald");
    CHECK_THROWS(cited_rule("nope"));
  }

  TEST_CASE("budget exhaustion is reported, not hidden") {
    ClassifyOptions o;
    o.node_budget = 1;
    auto v = classify(sd(0, 2, {3, q(5, 3), 15, q(15, 14)}), o);
    CHECK(has_entry(v, "partitionable", "budget_exceeded"));
    CHECK(v.tag == VerdictTag::BudgetExceeded);
  }
}
