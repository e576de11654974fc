#include <doctest.h>

#include "oracles.hpp"
#include "sfs/pretzel.hpp"

using namespace sfs;

namespace {
// Every odd pretzel knot with the given strand count and |c_i| <= bound, one per multiset.
std::vector<OddPretzel> multisets(std::size_t k, long bound) {
  std::vector<long> values;
  for (long c = -bound; c <= bound; c += 2) values.push_back(c);
  std::vector<OddPretzel> out;
  std::vector<long> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (cur.size() == k) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t i = from; i < values.size(); ++i) {
      cur.push_back(values[i]);
      go(i);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}
}  // namespace

TEST_SUITE("pretzel") {
  TEST_CASE("double branched covers") {
    CHECK(to_string(double_branched_cover(OddPretzel({3, -3, 3}))) == "SFS(g=0; e=0; 3, -3, 3)");
    CHECK(to_string(double_branched_cover(OddPretzel({3, -3, 5}))) == "SFS(g=0; e=0; 3, -3, 5)");
    CHECK(to_string(double_branched_cover(OddPretzel({1, 1, 3}))) == "SFS(g=0; e=-2; 3)");
    CHECK_THROWS_AS(OddPretzel({3, 4, 5}), std::invalid_argument);
  }

  TEST_CASE("cover homology has the knot determinant as order") {
    oracle::Rng rng(13);
    for (int i = 0; i < 300; ++i) {
      std::vector<long> c(rng.uniform(1, 7));
      for (auto& x : c) x = (2 * rng.uniform(0, 5) + 1) * (rng.coin() ? 1 : -1);
      OddPretzel k(c);
      BigInt det = oracle::goeritz_determinant(c);
      REQUIRE(pretzel_determinant(k) == det);
      auto g = h1_formula(double_branched_cover(k));
      if (det == 0)
        REQUIRE(g.free_rank == 1);
      else
        REQUIRE(g.torsion_order() == det);
    }
  }

  TEST_CASE("doubly slice examples") {
    auto a = doubly_slice_classify(OddPretzel({3, -3, 3}));
    CHECK(a.doubly_slice);
    CHECK(a.a == 3);
    auto b = doubly_slice_classify(OddPretzel({5, -5, 5, -5, 5}));
    CHECK(b.doubly_slice);
    CHECK(b.a == 5);
    auto c = doubly_slice_classify(OddPretzel({3, -3, 5}));
    CHECK_FALSE(c.doubly_slice);
    CHECK(c.failed == "torsion_direct_double");
    CHECK(c.detail.find("Z/9") != std::string::npos);
    CHECK_THROWS_AS(doubly_slice_classify(OddPretzel({3, -3})), std::invalid_argument);
  }

  TEST_CASE("mubar formula") {
    CHECK(pretzel_mubar(OddPretzel({3, -3, 3})) == 0);
    CHECK(pretzel_mubar(OddPretzel({3, -3, 5})) == 0);
    CHECK(pretzel_mubar(OddPretzel({3, 3, 3})) == pretzel_mubar_formula(OddPretzel({3, 3, 3})));
  }

  TEST_CASE("verdicts are invariant under mirror and permutation") {
    oracle::Rng rng(21);
    for (int i = 0; i < 200; ++i) {
      std::vector<long> c(2 * rng.uniform(1, 3) + 1);
      for (auto& x : c) x = (2 * rng.uniform(0, 4) + 1) * (rng.coin() ? 1 : -1);
      if (i % 4 == 0) {
        long a = 2 * rng.uniform(1, 4) + 1;
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = j % 2 ? -a : a;
      }
      OddPretzel k(c);
      auto v = doubly_slice_classify(k);
      REQUIRE(doubly_slice_classify(k.mirror()).doubly_slice == v.doubly_slice);
      for (std::size_t j = c.size(); j > 1; --j) std::swap(c[j - 1], c[rng.uniform(0, static_cast<long>(j) - 1)]);
      REQUIRE(doubly_slice_classify(OddPretzel(c)).doubly_slice == v.doubly_slice);
    }
  }

  TEST_CASE("cover falls in the equality family exactly for the doubly slice shape") {
    // Unit strands are cancelled first; the family is read on what remains.
    for (std::size_t k : {3, 5}) {
      for (const auto& knot : multisets(k, 7)) {
        auto reduced = cancel_unit_pairs(knot);
        auto s = normalize(double_branched_cover(knot));
        auto fam = match_theorem_families(s);
        bool in_family = fam && fam->tag == FamilyTag::HalfBound;
        REQUIRE_MESSAGE(in_family == pretzel_family_parameter(reduced.strands).has_value(), knot.str());
      }
    }
  }

  TEST_CASE("quasi-alternating normal forms are obstructed") {
    auto one = qa_montesinos_obstruction({3, {2, 2, 2}});
    CHECK(one.qa_case == 1);
    CHECK(one.partition == Partition{{0}, {1}, {2}});
    CHECK(one.sum_law.status == SumLawStatus::StrictClassCount);
    CHECK_FALSE(one.direct_double);

    auto two = qa_montesinos_obstruction({1, {5, Rational(BigInt(7), BigInt(2))}});
    CHECK(two.qa_case == 2);
    CHECK(two.partition == Partition{{0, 1}});
    CHECK(two.sum_law.status == SumLawStatus::WrongDeficit);

    CHECK_THROWS_AS(qa_montesinos_obstruction({2, {2, Rational(BigInt(3), BigInt(2)), Rational(BigInt(5), BigInt(4))}}),
                    std::invalid_argument);
  }

  TEST_CASE("unit cancellation") {
    CHECK(cancel_unit_pairs(OddPretzel({3, 1, -3, -1, 3})).str() == "P(3,-3,3)");
    CHECK(cancel_unit_pairs(OddPretzel({1, 1, 5})).str() == "P(5,1,1)");
  }
}
