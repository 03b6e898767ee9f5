#pragma once

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "mzv/big_real.hpp"
#include "mzv/cache.hpp"
#include "mzv/index.hpp"
#include "mzv/word.hpp"

namespace mzv {

/// Multiple polylogarithm Li at z = 1/2 for a word ending in y (or the
/// empty word, which evaluates to 1), by direct summation of the nested
/// series; convergence is geometric at 1/2.
BigReal li_at_half(const Word& w, int digits);

/// The w+1 (prefix, suffix) splittings of w used by the Hölder convolution
/// at 1/2, in prefix-length order.
std::vector<std::pair<Word, Word>> holder_splittings(const Word& w);

/// The 2^{r-1} merge-or-keep expansions of a star value into ordinary MZVs
/// (adjacent exponents add on merge), in mask order.
std::vector<Index> star_expansion(const Index& k);

/// Evaluation front end. Values go through the cache (get-or-compute,
/// thread safe); pass an external cache to share or persist it.
class Evaluator {
 public:
  Evaluator();
  explicit Evaluator(MZVCache* external);

  /// ζ(k) for admissible k via the Hölder convolution at 1/2:
  /// the sum over splittings w = u·v of Li(reverse_swap(u)) · Li(v).
  BigReal eval_mzv(const Index& k, int digits);
  /// ζ*(k) for admissible k, by merge-or-keep expansion.
  BigReal eval_star(const Index& k, int digits);
  /// Σ coeff · ζ(index); the empty index contributes its coefficient.
  BigReal eval_index_sum(const IndexSum& s, int digits);
  /// ζ(n), n >= 2.
  BigReal zeta_n(int n, int digits);
  /// "pi", "gamma", "log2" or "zeta_n(N)".
  BigReal named_constant(std::string_view name, int digits);

  MZVCache& cache() { return *cache_; }

 private:
  std::unique_ptr<MZVCache> owned_;
  MZVCache* cache_;
};

}  // namespace mzv
