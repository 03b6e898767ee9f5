#include <doctest.h>

#include <cmath>

#include "mzv/direct_sum.hpp"
#include "mzv/numerics.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {

long double frozen_ld(std::string_view s) {
  return strtold(std::string(s).c_str(), nullptr);
}

}  // namespace

TEST_CASE("oracle engine hits known depth-1 values") {
  CHECK(std::abs(static_cast<double>(oracle_detail::zeta_em(Index{2}, 12000) -
                                     frozen_ld(oracles::kZeta2))) < 1e-14);
  CHECK(std::abs(static_cast<double>(oracle_detail::zeta_em(Index{3}, 12000) -
                                     frozen_ld(oracles::kZeta3))) < 1e-14);
  CHECK(std::abs(static_cast<double>(oracle_detail::zeta_em(Index{4}, 12000) -
                                     frozen_ld(oracles::kZeta4))) < 1e-14);
  CHECK(std::abs(static_cast<double>(oracle_detail::zeta_em(Index{5}, 12000) -
                                     frozen_ld(oracles::kZeta5))) < 1e-14);
}

TEST_CASE("oracle engine handles divergent inner levels") {
  // zeta(1,2) = zeta(3) and the 1-string duals of single zetas.
  CHECK(std::abs(static_cast<double>(oracle_detail::zeta_em(Index{1, 2}, 12000) -
                                     frozen_ld(oracles::kZeta3))) < 1e-13);
  CHECK(std::abs(static_cast<double>(
            oracle_detail::zeta_em(Index{1, 1, 2}, 12000) -
            frozen_ld(oracles::kZeta4))) < 1e-13);
  CHECK(std::abs(static_cast<double>(
            oracle_detail::zeta_em(Index{1, 1, 1, 2}, 12000) -
            frozen_ld(oracles::kZeta5))) < 1e-13);
  CHECK(std::abs(static_cast<double>(oracle_detail::zeta_em(Index{2, 2}, 12000) -
                                     frozen_ld(oracles::kZeta22))) < 1e-13);
}

TEST_CASE("oracle cutoff consistency on a slowly converging index") {
  // Plain truncation at these cutoffs would still be off by ~1e-3.
  long double a = oracle_detail::zeta_em(Index{1, 1, 1, 1, 2}, 6000);
  long double b = oracle_detail::zeta_em(Index{1, 1, 1, 1, 2}, 24000);
  CHECK(std::abs(static_cast<double>(a - b)) < 1e-13);
}

TEST_CASE("eval_mzv_direct known values") {
  BigReal z2 = eval_mzv_direct(Index{2}, 8);
  CHECK(z2.to_decimal(8) == "1.64493407");
  CHECK(z2.error_bound() <= 1e-8);

  BigReal z3 = eval_mzv_direct(Index{3}, 8);
  CHECK(z3.to_decimal(8) == "1.2020569");

  BigReal z22 = eval_mzv_direct(Index{2, 2}, 8);
  CHECK(z22.to_decimal(8) == "0.81174243");
}

TEST_CASE("eval_mzv_direct rejects out-of-range requests") {
  CHECK_THROWS_AS(eval_mzv_direct(Index{2, 1}, 8), std::domain_error);
  CHECK_THROWS_AS(eval_mzv_direct(Index{2}, 13), std::domain_error);
  CHECK_THROWS_AS(eval_mzv_direct(Index{2}, 0), std::domain_error);
}

TEST_CASE("oracle agrees with Holder convolution through weight 6") {
  Evaluator ev;
  for (int w = 2; w <= 6; ++w)
    for (const Index& k : enumerate_indices(w, std::nullopt, 1)) {
      if (!k.admissible()) continue;
      BigReal holder = ev.eval_mzv(k, 30);
      BigReal direct = eval_mzv_direct(k, 10);
      CHECK((holder - direct).abs_leq(1e-10));
    }
}
