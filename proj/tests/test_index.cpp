#include <doctest.h>

#include <random>

#include "mzv/index.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

Index random_index(std::mt19937& rng, int max_weight) {
  std::uniform_int_distribution<int> wdist(1, max_weight);
  int w = wdist(rng);
  std::vector<int> parts;
  while (w > 0) {
    std::uniform_int_distribution<int> pdist(1, w);
    int p = pdist(rng);
    parts.push_back(p);
    w -= p;
  }
  return Index(std::move(parts));
}

}  // namespace

TEST_CASE("profile statistics") {
  CHECK(profile(Index{1, 2}) == IndexProfile{3, 2, 1, true});
  CHECK(profile(Index{2, 1}) == IndexProfile{3, 2, 1, false});
  CHECK(profile(Index{}) == IndexProfile{0, 0, 0, false});
  CHECK(profile(Index{2, 3, 1, 5}) == IndexProfile{11, 4, 3, true});
}

TEST_CASE("height <= depth <= weight; admissible implies height >= 1") {
  for (int w = 1; w <= 9; ++w)
    for (const Index& k : enumerate_indices(w, std::nullopt, 1)) {
      CHECK(k.height() <= k.depth());
      CHECK(k.depth() <= k.weight());
      if (k.admissible()) CHECK(k.height() >= 1);
    }
}

TEST_CASE("index construction rejects nonpositive parts") {
  CHECK_THROWS_AS(Index({1, 0, 2}), std::domain_error);
  CHECK_THROWS_AS(Index({-1}), std::domain_error);
}

TEST_CASE("duality examples") {
  CHECK(dual(Index{1, 2}) == Index{3});
  CHECK(dual(Index{2}) == Index{2});
  CHECK(dual(Index{1, 1, 3}) == Index{1, 4});
  CHECK_THROWS_AS(dual(Index{2, 1}), std::domain_error);
  CHECK_THROWS_AS(dual(Index{}), std::domain_error);
}

TEST_CASE("duality is a weight-preserving involution up to weight 12") {
  for (int w = 2; w <= 12; ++w)
    for (const Index& k : enumerate_indices(w, std::nullopt, 1)) {
      if (!k.admissible()) continue;
      Index d = dual(k);
      CHECK(d.admissible());
      CHECK(d.weight() == k.weight());
      CHECK(dual(d) == k);
    }
}

TEST_CASE("duality of height-one indices") {
  // (1^{r-1}, k+1) <-> (1^{k-1}, r+1)
  for (int r = 1; r <= 6; ++r)
    for (int k = 1; k <= 6; ++k) {
      std::vector<int> parts(static_cast<size_t>(r), 1);
      parts.back() = k + 1;
      std::vector<int> expect(static_cast<size_t>(k), 1);
      expect.back() = r + 1;
      CHECK(dual(Index(parts)) == Index(expect));
    }
}

TEST_CASE("add_pointwise") {
  CHECK(add_pointwise(Index{1, 1}, Index{1, 1}) == Index{2, 2});
  CHECK(add_pointwise(Index{2, 1}, Index{1, 3}) == Index{3, 4});
  CHECK_THROWS_AS(add_pointwise(Index{1}, Index{1, 1}), std::domain_error);
}

TEST_CASE("enumerate_indices examples") {
  CHECK(enumerate_indices(4, 2, 1) ==
        std::vector<Index>{Index{1, 3}, Index{2, 2}, Index{3, 1}});
  CHECK(enumerate_indices(6, std::nullopt, 2) ==
        std::vector<Index>{Index{2, 2, 2}, Index{2, 4}, Index{3, 3},
                           Index{4, 2}, Index{6}});
  CHECK(enumerate_indices(3, 4, 1).empty());
  CHECK(enumerate_indices(0, std::nullopt, 1) == std::vector<Index>{Index{}});
}

TEST_CASE("enumerate_indices matches cut-point oracle and binomial counts") {
  for (int w = 1; w <= 8; ++w) {
    for (int minp = 1; minp <= 3; ++minp)
      CHECK(enumerate_indices(w, std::nullopt, minp) ==
            oracles::brute_compositions(w, std::nullopt, minp));
    for (int r = 1; r <= w; ++r) {
      auto got = enumerate_indices(w, r, 1);
      CHECK(got == oracles::brute_compositions(w, r, 1));
      Integer expect = binomial(static_cast<unsigned long>(w - 1),
                                static_cast<unsigned long>(r - 1));
      CHECK(Integer(static_cast<long>(got.size())) == expect);
    }
  }
}

TEST_CASE("stuffle examples") {
  IndexSum expect23;
  expect23.add(Index{2, 3}, 1);
  expect23.add(Index{3, 2}, 1);
  expect23.add(Index{5}, 1);
  CHECK(stuffle(Index{2}, Index{3}) == expect23);

  IndexSum expect12;
  expect12.add(Index{1, 2}, 1);
  expect12.add(Index{2, 1}, 1);
  expect12.add(Index{3}, 1);
  CHECK(stuffle(Index{1}, Index{2}) == expect12);

  CHECK(stuffle(Index{}, Index{7}) == IndexSum(Index{7}));
  CHECK(stuffle(IndexSum::unit(), IndexSum(Index{7})) == IndexSum(Index{7}));
}

TEST_CASE("depth-1 stuffle has mass 3") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      CHECK(stuffle(Index{a}, Index{b}).mass() == 3);
}

TEST_CASE("stuffle agrees with lattice-path oracle") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    Index a = random_index(rng, 5);
    Index b = random_index(rng, 5);
    CHECK(stuffle(a, b) == oracles::brute_stuffle(a, b));
  }
}

TEST_CASE("stuffle is commutative and associative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Index a = random_index(rng, 5);
    Index b = random_index(rng, 5);
    Index c = random_index(rng, 4);
    IndexSum ab = stuffle(a, b);
    CHECK(ab == stuffle(b, a));
    CHECK(stuffle(ab, IndexSum(c)) == stuffle(IndexSum(a), stuffle(b, c)));
  }
}

TEST_CASE("IndexSum stores no zeros and scales exactly") {
  IndexSum s(Index{2}, Rational(1, 3));
  s.add(Index{2}, Rational(-1, 3));
  CHECK(s.is_zero());
  CHECK(s.to_string() == "0");

  IndexSum t(Index{1, 2}, Rational(2, 4));
  CHECK(t.terms().at(Index{1, 2}) == Rational(1, 2));
  t *= 2;
  CHECK(t == IndexSum(Index{1, 2}));
}

TEST_CASE("index text round-trip") {
  CHECK(Index::parse("(1,2)") == Index{1, 2});
  CHECK(Index::parse("1,2") == Index{1, 2});
  CHECK(Index::parse(" ( 3 , 4 ) ") == Index{3, 4});
  CHECK(Index::parse("()") == Index{});
  CHECK(Index{1, 2}.to_string() == "(1,2)");
  CHECK(Index{}.to_string() == "()");
  CHECK_THROWS_AS(Index::parse("(1,0)"), std::invalid_argument);
  CHECK_THROWS_AS(Index::parse("(1,x)"), std::invalid_argument);
  CHECK_THROWS_AS(Index::parse("(1,2"), std::invalid_argument);
}

TEST_CASE("IndexSum rendering") {
  IndexSum s;
  s.add(Index{2, 3}, 1);
  s.add(Index{3, 2}, 1);
  s.add(Index{5}, 1);
  CHECK(s.to_string() == "(2,3) + (3,2) + (5)");
  IndexSum t;
  t.add(Index{1, 2}, -2);
  CHECK(t.to_string() == "-2·(1,2)");
}
