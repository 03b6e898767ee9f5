// Command-line surface for MZV evaluation, products, regularization and the
// identity-verification harness. Exit codes: 0 success, 1 verification
// failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mzv/cache.hpp"
#include "mzv/index.hpp"
#include "mzv/numerics.hpp"
#include "mzv/regularization.hpp"
#include "mzv/series.hpp"
#include "mzv/verify.hpp"
#include "mzv/word.hpp"

namespace {

using namespace mzv;

struct Options {
  std::string input, second;
  std::string identity, series_which;
  std::string a_arg, u_arg, v_arg;
  std::string format = "text";
  std::string cache_dir;
  int digits = 30;
  int reg_digits = 0;
  int r = 0, k = 0, i = -1;
  int max_weight = 0;
  bool star = false;
  bool use_shuffle = false, use_stuffle = false;
};

bool looks_like_word(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c != 'x' && c != 'y') return false;
  return true;
}

Index arg_to_index(const std::string& s) {
  if (looks_like_word(s)) return word_to_index(Word::parse(s));
  return Index::parse(s);
}

Word arg_to_word(const std::string& s) {
  if (looks_like_word(s)) return Word::parse(s);
  Index k = Index::parse(s);
  return k.empty() ? Word{} : index_to_word(k);
}

std::optional<std::string> cache_file(const std::string& cache_dir) {
  std::string dir = cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("MZV_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return dir + "/mzv_cache.jsonl";
}

long num_long(const Rational& c) { return static_cast<long>(c.get_num().get_si()); }
long den_long(const Rational& c) { return static_cast<long>(c.get_den().get_si()); }

int cmd_eval(const Options& o) {
  auto file = cache_file(o.cache_dir);
  MZVCache cache = file ? MZVCache(*file) : MZVCache();
  Evaluator ev(&cache);
  Index k = arg_to_index(o.input);
  BigReal v = o.star ? ev.eval_star(k, o.digits) : ev.eval_mzv(k, o.digits);
  if (o.format == "json") {
    nlohmann::json j;
    j["index"] = k.parts();
    j["digits"] = o.digits;
    j["star"] = o.star;
    j["value"] = v.to_decimal(o.digits);
    j["abs_error"] = v.error_bound_str();
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << k.to_string() << "," << o.digits << ","
              << v.to_decimal(o.digits) << "," << v.error_bound_str() << "\n";
  } else {
    std::cout << v.to_decimal(o.digits) << "\n";
  }
  std::cerr << "abs error <= " << v.error_bound_str() << "\n";
  if (file) cache.save();
  return 0;
}

int cmd_product(const Options& o) {
  if (o.use_shuffle == o.use_stuffle)
    throw std::invalid_argument("product: choose exactly one of --shuffle / --stuffle");
  if (o.use_stuffle) {
    IndexSum s = stuffle(IndexSum(arg_to_index(o.input)),
                         IndexSum(arg_to_index(o.second)));
    if (o.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [k, c] : s.terms())
        arr.push_back({{"index", k.parts()},
                       {"coeff_num", num_long(c)},
                       {"coeff_den", den_long(c)}});
      std::cout << arr.dump() << "\n";
    } else {
      std::cout << s.to_string() << "\n";
    }
  } else {
    WordSum s = shuffle(WordSum(arg_to_word(o.input)),
                        WordSum(arg_to_word(o.second)));
    if (o.format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [w, c] : s.terms())
        arr.push_back({{"word", w.to_string()},
                       {"coeff_num", num_long(c)},
                       {"coeff_den", den_long(c)}});
      std::cout << arr.dump() << "\n";
    } else {
      std::cout << s.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_regularize(const Options& o) {
  if (o.use_shuffle == o.use_stuffle)
    throw std::invalid_argument("regularize: choose exactly one of --shuffle / --stuffle");
  RegPoly p = o.use_shuffle ? shuffle_regularize(arg_to_word(o.input))
                            : stuffle_regularize(arg_to_index(o.input));
  auto file = cache_file(o.cache_dir);
  MZVCache cache = file ? MZVCache(*file) : MZVCache();
  Evaluator ev(&cache);
  if (o.format == "json") {
    nlohmann::json j;
    j["poly"] = nlohmann::json::parse(p.to_json());
    if (o.reg_digits > 0) {
      nlohmann::json nums = nlohmann::json::array();
      for (int i = 0; i <= p.degree(); ++i)
        nums.push_back(
            ev.eval_index_sum(p.coeff(i), o.reg_digits).to_decimal(o.reg_digits));
      j["numeric"] = nums;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << p.to_string() << "\n";
    if (o.reg_digits > 0)
      for (int i = 0; i <= p.degree(); ++i)
        std::cout << "T^" << i << ": "
                  << ev.eval_index_sum(p.coeff(i), o.reg_digits)
                         .to_decimal(o.reg_digits)
                  << "\n";
  }
  if (file) cache.save();
  return 0;
}

int cmd_verify(const Options& o) {
  auto file = cache_file(o.cache_dir);
  MZVCache cache = file ? MZVCache(*file) : MZVCache();
  Evaluator ev(&cache);
  std::vector<Report> reports;
  const int d = o.digits;

  if (o.identity == "thm1" || o.identity == "thm2" || o.identity == "regpoly-sum") {
    auto one = [&](int r, int k) {
      if (o.identity == "thm1") return verify_thm1(ev, r, k, d);
      if (o.identity == "thm2") return verify_thm2(ev, r, k, d);
      return verify_regpoly_sum(ev, r, k, d);
    };
    if (o.r > 0 && o.k > 0) {
      reports.push_back(one(o.r, o.k));
    } else {
      int maxw = o.max_weight > 0 ? o.max_weight : 10;
      for (int w = 2; w <= maxw; ++w)
        for (int r = 1; r <= w - 1; ++r) reports.push_back(one(r, w - r));
    }
  } else if (o.identity == "thm3") {
    reports.push_back(verify_thm3(ev, o.max_weight > 0 ? o.max_weight : 12, d));
  } else if (o.identity == "genfunc") {
    reports.push_back(verify_genfunc(ev, o.max_weight > 0 ? o.max_weight : 10, d));
  } else if (o.identity == "duality") {
    int maxw = o.max_weight > 0 ? o.max_weight : 10;
    for (int w = 2; w <= maxw; ++w)
      for (const Index& k : enumerate_indices(w, std::nullopt, 1))
        if (k.admissible()) reports.push_back(verify_duality(ev, k, d));
  } else if (o.identity == "double-shuffle") {
    if (!o.u_arg.empty() || !o.v_arg.empty()) {
      reports.push_back(
          verify_double_shuffle(ev, arg_to_index(o.u_arg), arg_to_index(o.v_arg), d));
    } else {
      int maxw = o.max_weight > 0 ? o.max_weight : 5;  // cap per factor
      std::vector<Index> pool;
      for (int w = 2; w <= maxw; ++w)
        for (const Index& k : enumerate_indices(w, std::nullopt, 1))
          if (k.admissible()) pool.push_back(k);
      for (size_t a = 0; a < pool.size(); ++a)
        for (size_t b = a; b < pool.size(); ++b)
          reports.push_back(verify_double_shuffle(ev, pool[a], pool[b], d));
    }
  } else if (o.identity == "stuffle-expansion") {
    if (!o.a_arg.empty()) {
      if (o.r == 0)
        throw std::invalid_argument("verify stuffle-expansion: --a requires --r");
      Index a = arg_to_index(o.a_arg);
      if (o.i >= 0) {
        reports.push_back(verify_stuffle_expansion(a, o.i, o.r));
      } else {
        for (int i = 0; i <= o.r - a.depth() - 1; ++i)
          reports.push_back(verify_stuffle_expansion(a, i, o.r));
      }
    } else {
      int wa = o.max_weight > 0 ? std::min(o.max_weight, 4) : 3;
      int rmax = o.r > 0 ? o.r : 5;
      for (int w = 1; w <= wa; ++w)
        for (const Index& a : enumerate_indices(w, std::nullopt, 1))
          for (int r = a.depth() + 1; r <= rmax; ++r)
            for (int i = 0; i <= r - a.depth() - 1; ++i)
              reports.push_back(verify_stuffle_expansion(a, i, r));
    }
  } else {
    throw std::invalid_argument("verify: unknown identity: " + o.identity);
  }

  if (o.format == "csv") std::cout << Report::csv_header() << "\n";
  size_t failed = 0;
  for (const Report& rep : reports) {
    if (o.format == "json")
      std::cout << rep.to_json() << "\n";
    else if (o.format == "csv")
      std::cout << rep.to_csv_rows();
    else
      std::cout << rep.to_text() << "\n";
    if (!rep.pass) ++failed;
  }
  std::cerr << reports.size() << " report(s), " << failed << " failed\n";
  if (file) cache.save();
  return failed == 0 ? 0 : 1;
}

int cmd_series(const Options& o) {
  auto file = cache_file(o.cache_dir);
  MZVCache cache = file ? MZVCache(*file) : MZVCache();
  Evaluator ev(&cache);
  int maxw = o.max_weight > 0 ? o.max_weight : 10;
  nlohmann::json jout = nlohmann::json::array();
  if (o.series_which == "T" || o.series_which == "rhs3") {
    PowerSeries1 s = o.series_which == "T" ? build_T_series(ev, maxw, o.digits)
                                           : build_rhs_thm3(ev, maxw, o.digits);
    for (int i = 0; i <= s.order(); ++i) {
      std::string v = s.coeff(i).to_decimal(o.digits);
      if (o.format == "json")
        jout.push_back({{"degree", i}, {"value", v}});
      else
        std::cout << i << "," << v << "\n";
    }
  } else if (o.series_which == "genfunc") {
    PowerSeries2 s = build_gamma_genfunc(ev, maxw, o.digits);
    for (int i = 0; i <= s.order(); ++i)
      for (int j = 0; i + j <= s.order(); ++j) {
        std::string v = s.coeff(i, j).to_decimal(o.digits);
        if (o.format == "json")
          jout.push_back({{"xdeg", i}, {"ydeg", j}, {"value", v}});
        else
          std::cout << i << "," << j << "," << v << "\n";
      }
  } else {
    throw std::invalid_argument("series: unknown series: " + o.series_which);
  }
  if (o.format == "json") std::cout << jout.dump() << "\n";
  if (file) cache.save();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiple zeta value algebra, evaluation and verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--cache-dir", o.cache_dir, "cache directory (or MZV_CACHE_DIR)");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an MZV (ζ* with --star)");
  eval_cmd->add_option("input", o.input, "index \"(1,2)\" / \"1,2\" or word \"xyy\"")
      ->required();
  eval_cmd->add_option("--digits", o.digits)->check(CLI::Range(8, 200));
  eval_cmd->add_flag("--star", o.star, "evaluate the zeta-star value");
  add_common(eval_cmd);

  auto* prod_cmd = app.add_subcommand("product", "expand a shuffle or stuffle product");
  prod_cmd->add_option("u", o.input)->required();
  prod_cmd->add_option("v", o.second)->required();
  prod_cmd->add_flag("--shuffle", o.use_shuffle, "shuffle product on words");
  prod_cmd->add_flag("--stuffle", o.use_stuffle, "stuffle product on indices");
  add_common(prod_cmd);

  auto* reg_cmd =
      app.add_subcommand("regularize", "shuffle- or stuffle-regularized polynomial");
  reg_cmd->add_option("input", o.input)->required();
  reg_cmd->add_flag("--shuffle", o.use_shuffle);
  reg_cmd->add_flag("--stuffle", o.use_stuffle);
  reg_cmd->add_option("--digits", o.reg_digits, "also print numeric coefficients")
      ->check(CLI::Range(8, 200));
  add_common(reg_cmd);

  auto* ver_cmd = app.add_subcommand("verify", "run an identity verification sweep");
  ver_cmd->add_option("identity", o.identity,
                      "thm1|thm2|regpoly-sum|thm3|genfunc|double-shuffle|"
                      "stuffle-expansion|duality")
      ->required();
  ver_cmd->add_option("--r", o.r)->check(CLI::Range(1, 64));
  ver_cmd->add_option("--k", o.k)->check(CLI::Range(1, 64));
  ver_cmd->add_option("--i", o.i)->check(CLI::Range(0, 64));
  ver_cmd->add_option("--max-weight", o.max_weight)->check(CLI::Range(2, 24));
  ver_cmd->add_option("--digits", o.digits)->check(CLI::Range(8, 200));
  ver_cmd->add_option("--a", o.a_arg, "base index for stuffle-expansion");
  ver_cmd->add_option("--u", o.u_arg, "left factor for double-shuffle");
  ver_cmd->add_option("--v", o.v_arg, "right factor for double-shuffle");
  add_common(ver_cmd);

  auto* ser_cmd = app.add_subcommand("series", "dump a generating-function series");
  ser_cmd->add_option("which", o.series_which, "T|rhs3|genfunc")->required();
  ser_cmd->add_option("--max-weight", o.max_weight)->check(CLI::Range(2, 24));
  ser_cmd->add_option("--digits", o.digits)->check(CLI::Range(8, 200));
  add_common(ser_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(o);
    if (prod_cmd->parsed()) return cmd_product(o);
    if (reg_cmd->parsed()) return cmd_regularize(o);
    if (ver_cmd->parsed()) return cmd_verify(o);
    if (ser_cmd->parsed()) return cmd_series(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
