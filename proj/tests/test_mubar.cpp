#include <doctest.h>

#include "oracles.hpp"
#include "sfs/mubar.hpp"

using namespace sfs;

namespace {
Rational q(long a, long b) { return Rational(BigInt(a), BigInt(b)); }
StandardForm sf(long e, std::vector<Rational> f) { return StandardForm{0, e, std::move(f), false}; }
}  // namespace

TEST_SUITE("mubar") {
  TEST_CASE("Poincare sphere has mubar 8") {
    auto t = spin_mubar_table(sf(2, {2, q(3, 2), q(5, 4)}));
    REQUIRE(t.size() == 1);
    CHECK(t[0].subset.empty());
    CHECK(t[0].mubar == 8);
  }

  TEST_CASE("cited example has three vanishing spin structures") {
    auto t = spin_mubar_table(sf(1, {4, 4, q(12, 5)}));
    REQUIRE(t.size() == 4);
    int zero = 0;
    for (const auto& v : t) zero += v.mubar == 0;
    CHECK(zero == 3);
  }

  TEST_CASE("characteristic subsets match exhaustive search") {
    oracle::Rng rng(73);
    int done = 0;
    while (done < 120) {
      auto s = normalize(oracle::random_space(rng, 0, 5, 9, 0, 4, false));
      if (euler_invariant(s).sign() <= 0) continue;
      auto g = build_plumbing(s);
      if (g.vertex_count() > 16) continue;
      auto q = intersection_form(g);
      auto got = characteristic_subsets(g, q);
      REQUIRE_MESSAGE(got == oracle::characteristic_subsets(q), to_string(s));
      REQUIRE(got.size() == (std::size_t{1} << dim_h1_z2(s)));
      for (const auto& c : got) REQUIRE(is_characteristic(q, c));
      ++done;
    }
  }

  TEST_CASE("mubar rejects non-characteristic input") {
    auto s = sf(2, {2, q(3, 2), q(5, 4)});
    auto g = build_plumbing(s);
    auto q = intersection_form(g);
    CHECK_THROWS_AS(mubar(g, q, {0}), std::invalid_argument);
  }

  TEST_CASE("embedding conditions") {
    auto ok = mubar_embedding_conditions(sf(2, {q(3, 2), 3, q(3, 2)}));
    CHECK_FALSE(ok.obstructed());
    auto poincare = mubar_embedding_conditions(sf(2, {2, q(3, 2), q(5, 4)}));
    CHECK(poincare.obstructed());
    REQUIRE(poincare.first_failure());
    CHECK(poincare.first_failure()->name == "vanishing_mubar_count");
    CHECK_THROWS_AS(mubar_embedding_conditions(StandardForm{1, 2, {q(3, 2), 3, q(3, 2)}, false}),
                    std::invalid_argument);
  }

  TEST_CASE("lower bound on e when every multiplicity is even") {
    oracle::Rng rng(88);
    int hits = 0;
    for (int i = 0; i < 600; ++i) {
      long k = rng.uniform(3, 7);
      StandardForm s{0, rng.uniform(1, 3), {}, false};
      for (long j = 0; j < k; ++j) {
        long p = 2 * rng.uniform(1, 5), qq = 1;
        if (rng.uniform(0, 3) == 0)
          do qq = rng.uniform(1, p - 1);
          while (std::gcd(p, qq) != 1);
        s.fibers.push_back(q(p, qq));
      }
      if (euler_invariant(s).sign() <= 0) continue;
      auto mc = mubar_embedding_conditions(s);
      REQUIRE(mc.dim_h1_z2 == k - 1);
      if (2 * s.central < BigInt(k - 1)) {
        ++hits;
        REQUIRE(mc.obstructed());
        REQUIRE(mc.first_failure()->name == "dim_h1_z2_bound");
      }
    }
    CHECK(hits > 30);
  }

  TEST_CASE("even fiber class rules") {
    // {2, 5/2, 10} sums to 1 but 10 > 1 + 1 + 4.
    auto s = sf(2, {2, q(5, 2), 10, q(10, 9)});
    auto v = even_fiber_violation(s, {{0, 1, 2}, {3}}, 1);
    REQUIRE(v);
    CHECK(v->find("exceeds") != std::string::npos);
    CHECK(product_class_violation(s, {{0, 1, 2}, {3}}, 1));
    CHECK_FALSE(even_fiber_violation(s, {{0, 1}, {2, 3}}, 0));
  }
}
