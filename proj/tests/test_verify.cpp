#include <doctest.h>

#include "mzv/verify.hpp"
#include "mzv/regularization.hpp"
#include "oracles.hpp"

using namespace mzv;

namespace {
constexpr int kDigits = 30;
}

TEST_CASE("thm1 base and low cases") {
  Evaluator ev;
  Report r15 = verify_thm1(ev, 1, 5, kDigits);
  CHECK(r15.pass);

  Report r22 = verify_thm1(ev, 2, 2, kDigits);
  CHECK(r22.pass);
  // both sides are pi^4/360
  BigReal ref = BigReal::from_decimal(oracles::kZeta13, kDigits);
  CHECK((ev.eval_mzv(height_one_index(2, 2), kDigits) - ref).abs_leq(1e-27));

  Report r23 = verify_thm1(ev, 2, 3, kDigits);
  CHECK(r23.pass);
  // RHS equals 2 zeta(5) - zeta(2)zeta(3)
  BigReal expect = ev.zeta_n(5, kDigits).mul_long(2) -
                   BigReal::from_decimal(oracles::kZeta2Zeta3, kDigits);
  CHECK((ev.eval_mzv(Index{1, 4}, kDigits) - expect).abs_leq(1e-26));

  CHECK_THROWS_AS(verify_thm1(ev, 0, 3, kDigits), std::domain_error);
}

TEST_CASE("thm1 right side is symmetric in r and k") {
  Evaluator ev;
  for (auto [r, k] : {std::pair{2, 3}, {3, 2}, {2, 4}, {4, 2}}) {
    Report rep = verify_thm1(ev, r, k, kDigits);
    CHECK(rep.pass);
  }
  // swapping (r,k) leaves the RHS (= LHS by duality) unchanged
  BigReal a = ev.eval_mzv(height_one_index(2, 4), kDigits);
  BigReal b = ev.eval_mzv(height_one_index(4, 2), kDigits);
  CHECK((a - b).abs_leq(1e-26));
}

TEST_CASE("thm2 cases") {
  Evaluator ev;
  CHECK(verify_thm2(ev, 1, 3, kDigits).pass);
  CHECK(verify_thm2(ev, 2, 1, kDigits).pass);
  CHECK(verify_thm2(ev, 3, 1, kDigits).pass);
  CHECK(verify_thm2(ev, 2, 3, kDigits).pass);

  // (r,k) = (2,1): LHS = zeta(1,2) + zetaSh(2,1) = -zeta(3)
  IndexSum c21 = reg_constant_term(shuffle_regularize(index_to_word(Index{2, 1})));
  BigReal lhs = ev.eval_mzv(Index{1, 2}, kDigits) + ev.eval_index_sum(c21, kDigits);
  BigReal neg_z3 = -ev.zeta_n(3, kDigits);
  CHECK((lhs - neg_z3).abs_leq(1e-27));
}

TEST_CASE("regpoly sum formula cases") {
  Evaluator ev;
  CHECK(verify_regpoly_sum(ev, 1, 3, kDigits).pass);
  CHECK(verify_regpoly_sum(ev, 2, 1, kDigits).pass);
  CHECK(verify_regpoly_sum(ev, 3, 2, kDigits).pass);
  Report r32 = verify_regpoly_sum(ev, 3, 2, kDigits);
  CHECK(r32.labels.size() == 3);  // degrees 0..2
}

TEST_CASE("thm3 and genfunc small") {
  Evaluator ev;
  Report t = verify_thm3(ev, 8, kDigits);
  CHECK(t.pass);
  CHECK(t.labels.size() == 7);  // x^2..x^8

  Report g = verify_genfunc(ev, 6, kDigits);
  CHECK(g.pass);
}

TEST_CASE("stuffle expansion identity, small cases") {
  CHECK(verify_stuffle_expansion(Index{1}, 0, 3).pass);
  CHECK(verify_stuffle_expansion(Index{1}, 1, 3).pass);
  CHECK(verify_stuffle_expansion(Index{1, 1}, 1, 4).pass);
  CHECK(verify_stuffle_expansion(Index{2}, 0, 4).pass);
  CHECK(verify_stuffle_expansion(Index{2, 1}, 1, 5).pass);
  CHECK_THROWS_AS(verify_stuffle_expansion(Index{}, 0, 3), std::domain_error);
  CHECK_THROWS_AS(verify_stuffle_expansion(Index{1}, 2, 3), std::domain_error);
}

TEST_CASE("binomial collapse identities") {
  Report rep = verify_binomial_collapse(6);
  CHECK(rep.pass);
  CHECK(rep.tolerance == "0");
}

TEST_CASE("double shuffle consistency") {
  Evaluator ev;
  CHECK(verify_double_shuffle(ev, Index{2}, Index{2}, kDigits).pass);
  CHECK(verify_double_shuffle(ev, Index{2}, Index{3}, kDigits).pass);
  CHECK(verify_double_shuffle(ev, Index{2}, Index{}, kDigits).pass);
  CHECK(verify_double_shuffle(ev, Index{1, 2}, Index{2}, kDigits).pass);
  CHECK_THROWS_AS(verify_double_shuffle(ev, Index{2, 1}, Index{2}, kDigits),
                  std::domain_error);
}

TEST_CASE("duality report") {
  Evaluator ev;
  CHECK(verify_duality(ev, Index{1, 2}, kDigits).pass);
  CHECK(verify_duality(ev, Index{1, 1, 3}, kDigits).pass);
}

TEST_CASE("report structure") {
  Evaluator ev;
  Report rep = verify_thm1(ev, 2, 2, kDigits);
  CHECK(rep.identity == "thm1");
  CHECK(rep.params == "r=2 k=2");
  CHECK(rep.labels.size() == rep.lhs.size());
  CHECK(rep.lhs.size() == rep.rhs.size());

  // pass <=> abs_error <= tolerance, reconstructible from the fields
  double err = std::stod(rep.abs_error);
  double tol = std::stod(rep.tolerance);
  CHECK(rep.pass == (err <= tol));

  std::string j = rep.to_json();
  CHECK(j.find("\"identity\":\"thm1\"") != std::string::npos);
  CHECK(j.find("\"pass\":true") != std::string::npos);
  CHECK(j.find("\"millis\":") != std::string::npos);

  std::string csv = rep.to_csv_rows();
  CHECK(csv.find("thm1,r=2 k=2,") == 0);
}
