#include <doctest.h>

#include "oracles.hpp"

using namespace sfs;

namespace {
SeifertData sd(long g, long e, std::vector<Rational> f) { return SeifertData{g, e, std::move(f)}; }
Rational q(long a, long b) { return Rational(BigInt(a), BigInt(b)); }
}  // namespace

TEST_SUITE("seifert") {
  TEST_CASE("normalize reflects negative eps") {
    auto s = normalize(sd(0, 0, {3, -3, 5}));
    CHECK(s.orientation_reversed);
    CHECK(to_string(s) == "SFS(g=0; e=2; 3/2, 3, 5/4)");
    CHECK(euler_invariant(s) == Rational(BigInt(1), BigInt(5)));
  }

  TEST_CASE("normalize keeps positive eps and drops integral fibers") {
    auto s = normalize(sd(1, 3, {q(3, 2), 1, -1, q(7, 9)}));
    CHECK_FALSE(s.orientation_reversed);
    CHECK(s.genus == 1);
    // 1 and -1 cancel; 9/7 -> floor 1 so e drops by one more, fiber becomes 7/2.
    CHECK(s.central == 2);
    CHECK(sorted_fibers(s.fibers) == std::vector<Rational>{q(7, 2), q(3, 2)});
  }

  TEST_CASE("normalize is idempotent and preserves |eps|") {
    oracle::Rng rng(2024);
    for (int i = 0; i < 400; ++i) {
      auto d = oracle::random_space(rng, 2, 6, 20, -4, 6, true);
      auto s = normalize(d);
      for (const auto& r : s.fibers) REQUIRE(r > Rational(1));
      REQUIRE(euler_invariant(s).sign() >= 0);
      REQUIRE(euler_invariant(s) == euler_invariant(d).abs());
      auto t = normalize(s.data());
      REQUIRE(same_space(s, t));
      REQUIRE_FALSE(t.orientation_reversed);
    }
  }

  TEST_CASE("expansion preserves eps and contracts back") {
    oracle::Rng rng(77);
    for (int i = 0; i < 300; ++i) {
      auto s = normalize(oracle::random_space(rng, 1, 5, 15, 0, 5, true));
      if (s.k() == 0) continue;
      std::size_t j = rng.uniform(0, static_cast<long>(s.k()) - 1);
      auto x = expand(s, j);
      REQUIRE(euler_invariant(x) == euler_invariant(s));
      REQUIRE(x.k() == s.k() + 2);
      bool back = false;
      for (const auto& c : find_contractions(x)) back = back || same_space(c.form, s);
      REQUIRE(back);
    }
  }

  TEST_CASE("contractions are deduplicated by fiber multiset") {
    StandardForm s{0, 3, {2, 2, 2, 2, 2}, false};
    auto cs = find_contractions(s);
    REQUIRE(cs.size() == 1);
    CHECK(to_string(cs[0].form) == "SFS(g=0; e=2; 2, 2, 2)");
  }

  TEST_CASE("multiplicity and signed q") {
    CHECK(multiplicity(q(-7, 3)) == 7);
    CHECK(fiber_q(q(-7, 3)) == -3);
    CHECK(fiber_q(q(7, 3)) == 3);
  }

  TEST_CASE("partition helpers") {
    CHECK(is_partition_of({{0, 2}, {1}}, 3));
    CHECK_FALSE(is_partition_of({{0, 2}, {2, 1}}, 3));
    CHECK_FALSE(is_partition_of({{0}, {1}}, 3));
    StandardForm s{0, 2, {q(3, 2), 3, q(3, 2)}, false};
    CHECK(class_sum(s, {1, 2}) == Rational(1));
    CHECK(fiber_lcm(s) == 3);
  }
}
