#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>

#include "rtm/forest.hpp"
#include "rtm/words.hpp"

namespace rtm {

/// Evaluates rooted tree maps on the word algebra.
///
/// A forest f acts on words by
///   f(1)  = ε(f) 1,
///   f(wu) = M(Δ(f)(w ⊗ u))           for a letter u,
/// and on single letters by
///   •(x) = xy, •(y) = -xy,
///   t(u) = R_y R_{x+2y} R_y^{-1} f_t(u)   for t = B+(f_t) ≠ •,
///   (t_1 ... t_k)(u) = t_1(t_2(... t_k(u))).
///
/// Results are memoized per (forest key, word). The cache is cleared
/// whenever it reaches `cache_budget` entries. An engine is not safe for
/// concurrent use; the free functions below use a thread-local engine.
class TreeMapEngine {
 public:
  static constexpr std::size_t kDefaultCacheBudget = 1u << 20;

  explicit TreeMapEngine(std::size_t cache_budget = kDefaultCacheBudget) : cache_budget_(cache_budget) {}

  WordSum apply_letter(const Forest& f, Letter u);
  WordSum apply(const Forest& f, const Word& w);
  WordSum apply(const Forest& f, const WordSum& a);
  WordSum apply(const ForestSum& f, const WordSum& a);

  std::size_t cache_size() const { return letter_cache_.size() + word_cache_.size(); }
  void clear();

 private:
  void remember(std::unordered_map<std::string, WordSum>& cache, std::string key, const WordSum& value);

  std::size_t cache_budget_;
  std::unordered_map<std::string, WordSum> letter_cache_;
  std::unordered_map<std::string, WordSum> word_cache_;
};

/// Thread-local engine backing the free functions.
TreeMapEngine& default_engine();

WordSum apply_letter(const Forest& f, Letter u);
WordSum apply(const Forest& f, const Word& w);
WordSum apply(const Forest& f, const WordSum& a);
WordSum apply(const ForestSum& f, const WordSum& a);

/// x (x+y)^{n-1} y.
WordSum partial_generator_image(int n);

/// The derivation ∂_n: ∂_n(x) = x(x+y)^{n-1}y = -∂_n(y), ∂_n(1) = 0.
WordSum partial_n(int n, const WordSum& a);
WordSum partial_n(int n, const Word& w);

/// ∂_n as a combination of ladder forests:
///   n/(2^n - 1) Σ_d (-1)^{d+1}/d Σ_{m_1+...+m_d=n} λ_{m_1} ... λ_{m_d}.
ForestSum partial_as_forest_sum(int n);

}  // namespace rtm
