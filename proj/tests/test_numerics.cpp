#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "mzv/numerics.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

bool near(const BigReal& v, std::string_view frozen, double tol) {
  BigReal ref = BigReal::from_decimal(frozen, 40);
  return (v - ref).abs_leq(tol);
}

}  // namespace

TEST_CASE("li_at_half basics") {
  CHECK(near(li_at_half(Word::parse("y"), 40), oracles::kLog2, 1e-38));
  CHECK(near(li_at_half(Word::parse("xy"), 40), oracles::kLi2Half, 1e-38));
  CHECK((li_at_half(Word{}, 30) - BigReal::from_long(1, 30)).is_zero());
  CHECK_THROWS_AS(li_at_half(Word::parse("yx"), 30), std::domain_error);
}

TEST_CASE("li_at_half against nested-loop oracle") {
  for (const char* text : {"y", "xy", "xyy", "yxy", "xxy", "yyy"}) {
    Word w = Word::parse(text);
    long double brute = oracles::li_half_nested(word_to_index(w), 400);
    double mine = li_at_half(w, 30).to_double();
    CHECK(std::abs(static_cast<double>(brute) - mine) < 1e-15);
  }
}

TEST_CASE("li_at_half error bound honors the digit request") {
  for (int digits : {10, 20, 30, 40}) {
    BigReal v = li_at_half(Word::parse("xyy"), digits);
    CHECK(v.error_bound() <= std::pow(10.0, -digits));
    CHECK(v.error_bound() > 0.0);
  }
}

TEST_CASE("holder splittings count is weight + 1") {
  for (int w = 2; w <= 9; ++w)
    for (const Index& k : enumerate_indices(w, std::nullopt, 1)) {
      if (!k.admissible()) continue;
      CHECK(holder_splittings(index_to_word(k)).size() ==
            static_cast<size_t>(w + 1));
    }
}

TEST_CASE("eval_mzv matches frozen values") {
  Evaluator ev;
  CHECK(near(ev.eval_mzv(Index{2}, 40), oracles::kZeta2, 1e-38));
  CHECK(near(ev.eval_mzv(Index{3}, 40), oracles::kZeta3, 1e-38));
  CHECK(near(ev.eval_mzv(Index{4}, 40), oracles::kZeta4, 1e-38));
  CHECK(near(ev.eval_mzv(Index{1, 3}, 40), oracles::kZeta13, 1e-38));
  CHECK(near(ev.eval_mzv(Index{2, 2}, 40), oracles::kZeta22, 1e-38));
  CHECK_THROWS_AS(ev.eval_mzv(Index{2, 1}, 30), std::domain_error);
  CHECK_THROWS_AS(ev.eval_mzv(Index{}, 30), std::domain_error);
}

TEST_CASE("duality of values: zeta(1,2) = zeta(3)") {
  Evaluator ev;
  BigReal a = ev.eval_mzv(Index{1, 2}, 35);
  BigReal b = ev.eval_mzv(Index{3}, 35);
  CHECK((a - b).abs_leq(1e-33));
}

TEST_CASE("duality invariance of values through weight 9") {
  Evaluator ev;
  for (int w = 2; w <= 9; ++w)
    for (const Index& k : enumerate_indices(w, std::nullopt, 1)) {
      if (!k.admissible()) continue;
      BigReal lhs = ev.eval_mzv(k, 30);
      BigReal rhs = ev.eval_mzv(dual(k), 30);
      CHECK((lhs - rhs).abs_leq(1e-25));
    }
}

TEST_CASE("eval_star") {
  Evaluator ev;
  CHECK((ev.eval_star(Index{2}, 30) - ev.eval_mzv(Index{2}, 30)).abs_leq(1e-28));
  CHECK(near(ev.eval_star(Index{2, 2}, 40), oracles::kZetaStar22, 1e-37));
  BigReal direct =
      ev.eval_mzv(Index{2, 3}, 30) + ev.eval_mzv(Index{5}, 30);
  CHECK((ev.eval_star(Index{2, 3}, 30) - direct).abs_leq(1e-28));
  CHECK_THROWS_AS(ev.eval_star(Index{1, 2, 1}, 30), std::domain_error);
}

TEST_CASE("star expansion masks") {
  auto got = star_expansion(Index{2, 2});
  CHECK(got == std::vector<Index>{Index{2, 2}, Index{4}});
  CHECK(star_expansion(Index{2, 1, 2}).size() == 4);
}

TEST_CASE("eval_index_sum") {
  Evaluator ev;
  IndexSum s;
  s.add(Index{2, 3}, 1);
  s.add(Index{3, 2}, 1);
  s.add(Index{5}, 1);
  CHECK(near(ev.eval_index_sum(s, 40), oracles::kZeta2Zeta3, 1e-37));

  CHECK(ev.eval_index_sum(IndexSum{}, 30).is_zero());

  IndexSum neg;
  neg.add(Index{1, 2}, -2);
  BigReal expect = -ev.eval_mzv(Index{3}, 30).mul_long(2);
  CHECK((ev.eval_index_sum(neg, 30) - expect).abs_leq(1e-27));

  IndexSum with_unit = IndexSum::unit();
  with_unit.add(Index{2}, 1);
  BigReal one_plus = BigReal::from_long(1, 30) + ev.eval_mzv(Index{2}, 30);
  CHECK((ev.eval_index_sum(with_unit, 30) - one_plus).abs_leq(1e-27));

  IndexSum bad(Index{2, 1});
  CHECK_THROWS_WITH_AS(ev.eval_index_sum(bad, 30),
                       doctest::Contains("(2,1)"), std::domain_error);
}

TEST_CASE("named constants") {
  Evaluator ev;
  CHECK(near(const_pi(40), oracles::kPi, 1e-39));
  CHECK(near(const_gamma(40), oracles::kGamma, 1e-39));
  CHECK(near(const_log2(40), oracles::kLog2, 1e-39));
  CHECK(near(ev.named_constant("pi", 40), oracles::kPi, 1e-39));
  CHECK(near(ev.named_constant("gamma", 40), oracles::kGamma, 1e-39));
  CHECK(near(ev.named_constant("zeta_n(4)", 40), oracles::kZeta4, 1e-37));

  // zeta_n(4) equals pi^4/90
  BigReal pi = const_pi(40);
  BigReal closed = (pi * pi * pi * pi).div_long(90);
  CHECK((ev.zeta_n(4, 40) - closed).abs_leq(1e-37));

  CHECK_THROWS_AS(ev.named_constant("tau", 30), std::domain_error);
  CHECK_THROWS_AS(ev.zeta_n(1, 30), std::domain_error);
}

TEST_CASE("monotone precision: prefixes agree across digit requests") {
  Evaluator ev20;
  Evaluator ev40;
  std::string low = ev20.eval_mzv(Index{1, 3}, 20).to_decimal(20);
  std::string high = ev40.eval_mzv(Index{1, 3}, 40).to_decimal(40);
  CHECK(high.substr(0, low.size() - 1) == low.substr(0, low.size() - 1));
}

TEST_CASE("cache: warm equals cold bit for bit") {
  MZVCache cache;
  Evaluator ev(&cache);
  std::string cold = ev.eval_mzv(Index{1, 2, 2}, 30).to_decimal(30);
  std::string warm = ev.eval_mzv(Index{1, 2, 2}, 30).to_decimal(30);
  CHECK(cold == warm);
  CHECK(cache.entry_count() > 0);
}

TEST_CASE("cache: served only at sufficient digits") {
  MZVCache cache;
  cache.store(Index{2}, 10, "1.6449340668");
  CHECK(cache.lookup(Index{2}, 10).has_value());
  CHECK(cache.lookup(Index{2}, 10)->digits == 10);
  CHECK(!cache.lookup(Index{2}, 20).has_value());
  cache.store(Index{2}, 25, "1.6449340668482264364724152");
  CHECK(cache.lookup(Index{2}, 20)->digits == 25);
}

TEST_CASE("cache file round-trip and corrupt-line handling") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "mzv_cache_test";
  fs::create_directories(dir);
  fs::path file = dir / "cache.jsonl";

  {
    MZVCache cache(file);
    Evaluator ev(&cache);
    ev.eval_mzv(Index{2}, 30);
    ev.eval_mzv(Index{1, 3}, 30);
    cache.save();
  }
  {
    MZVCache reloaded(file);
    CHECK(reloaded.entry_count() == 2);
    auto hit = reloaded.lookup(Index{1, 3}, 30);
    REQUIRE(hit.has_value());
    MZVCache fresh;
    Evaluator ev(&fresh);
    CHECK(hit->value == ev.eval_mzv(Index{1, 3}, 30).to_decimal(30));
  }
  {
    std::ofstream app(file, std::ios::app);
    app << "{corrupt json!!\n";
    app << "{\"index\":[2],\"digits\":\"oops\",\"value\":\"1\"}\n";
  }
  {
    MZVCache reloaded(file);
    CHECK(reloaded.entry_count() == 2);  // corrupt lines skipped
  }
  fs::remove_all(dir);
}

TEST_CASE("concurrent evaluations agree") {
  MZVCache cache;
  Evaluator ev(&cache);
  std::vector<std::string> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      results[static_cast<size_t>(t)] =
          ev.eval_mzv(Index{1, 1, 2}, 30).to_decimal(30);
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(results[static_cast<size_t>(t)] == results[0]);

  Evaluator fresh;
  CHECK(results[0] == fresh.eval_mzv(Index{1, 1, 2}, 30).to_decimal(30));
}

TEST_CASE("BigReal error bounds stay within the digit request") {
  Evaluator ev;
  for (int digits : {10, 30}) {
    BigReal v = ev.eval_mzv(Index{1, 2, 3}, digits);
    CHECK(v.error_bound() <= std::pow(10.0, -digits));
  }
}

TEST_CASE("zeta(2)^2 expansion: 2 zeta(2,2) + 4 zeta(1,3)") {
  Evaluator ev;
  BigReal lhs = ev.eval_mzv(Index{2, 2}, 30).mul_long(2) +
                ev.eval_mzv(Index{1, 3}, 30).mul_long(4);
  BigReal z2 = ev.eval_mzv(Index{2}, 30);
  CHECK((lhs - z2 * z2).abs_leq(1e-27));
}
