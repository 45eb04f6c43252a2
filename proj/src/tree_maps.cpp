#include "rtm/tree_maps.hpp"

#include <stdexcept>

#include "rtm/errors.hpp"
#include "rtm/hopf.hpp"

namespace rtm {

namespace {

const WordSum& x_plus_2y() {
  static const WordSum v{{Word(Letter::x), 1}, {Word(Letter::y), 2}};
  return v;
}

}  // namespace

void TreeMapEngine::clear() {
  letter_cache_.clear();
  word_cache_.clear();
}

void TreeMapEngine::remember(std::unordered_map<std::string, WordSum>& cache, std::string key,
                             const WordSum& value) {
  if (cache_budget_ == 0) return;
  if (cache_size() >= cache_budget_) clear();
  cache.emplace(std::move(key), value);
}

WordSum TreeMapEngine::apply_letter(const Forest& f, Letter u) {
  if (f.empty()) return letter_sum(u);

  std::string key = f.key();
  key += '|';
  key += static_cast<char>(u);
  if (auto it = letter_cache_.find(key); it != letter_cache_.end()) return it->second;

  WordSum out;
  if (f.is_tree()) {
    const Tree& t = f.trees().front();
    if (t.degree() == 1) {
      Word xy = Word(Letter::x) * Word(Letter::y);
      out.add(xy, u == Letter::x ? 1 : -1);
    } else {
      WordSum inner = apply_letter(t.branches(), u);
      try {
        out = right_mult(right_mult(r_y_inverse(inner), x_plus_2y()), letter_sum(Letter::y));
      } catch (const DomainError& e) {
        throw std::logic_error("tree map of " + f.key() + " reached a word not ending in y: " + e.what());
      }
    }
  } else {
    out = letter_sum(u);
    const auto& trees = f.trees();
    for (auto it = trees.rbegin(); it != trees.rend(); ++it) out = this->apply(Forest(*it), out);
  }

  remember(letter_cache_, std::move(key), out);
  return out;
}

WordSum TreeMapEngine::apply(const Forest& f, const Word& w) {
  if (f.empty()) return WordSum(w);
  if (w.empty()) return {};
  if (w.weight() == 1) return apply_letter(f, w.back());

  std::string key = f.key();
  key += '|';
  key += w.letters();
  if (auto it = word_cache_.find(key); it != word_cache_.end()) return it->second;

  const Word head = w.prefix(w.weight() - 1);
  const Letter last = w.back();
  WordSum out;
  for (const auto& [pair, c] : coproduct(f)) {
    const auto& [left, right] = pair;
    WordSum left_image = this->apply(left, head);
    if (left_image.is_zero()) continue;
    WordSum right_image = apply_letter(right, last);
    out.add_scaled(concat(left_image, right_image), c);
  }

  remember(word_cache_, std::move(key), out);
  return out;
}

WordSum TreeMapEngine::apply(const Forest& f, const WordSum& a) {
  WordSum out;
  for (const auto& [w, c] : a) out.add_scaled(this->apply(f, w), c);
  return out;
}

WordSum TreeMapEngine::apply(const ForestSum& f, const WordSum& a) {
  WordSum out;
  for (const auto& [forest, c] : f) out.add_scaled(this->apply(forest, a), c);
  return out;
}

TreeMapEngine& default_engine() {
  thread_local TreeMapEngine engine;
  return engine;
}

WordSum apply_letter(const Forest& f, Letter u) { return default_engine().apply_letter(f, u); }
WordSum apply(const Forest& f, const Word& w) { return default_engine().apply(f, w); }
WordSum apply(const Forest& f, const WordSum& a) { return default_engine().apply(f, a); }
WordSum apply(const ForestSum& f, const WordSum& a) { return default_engine().apply(f, a); }

WordSum partial_generator_image(int n) {
  if (n < 1) throw DomainError("partial_n requires n >= 1");
  const WordSum x_plus_y{{Word(Letter::x), 1}, {Word(Letter::y), 1}};
  WordSum out = letter_sum(Letter::x);
  for (int i = 1; i < n; ++i) out = concat(out, x_plus_y);
  return concat(out, letter_sum(Letter::y));
}

WordSum partial_n(int n, const WordSum& a) {
  const WordSum image = partial_generator_image(n);
  WordSum out;
  for (const auto& [w, c] : a) {
    // Leibniz rule: Σ_i w_{<i} ∂(w_i) w_{>i}.
    for (int i = 0; i < w.weight(); ++i) {
      const Rational sign = w.at(i) == Letter::x ? c : Rational(-c);
      WordSum term = concat(concat(WordSum(w.prefix(i)), image), WordSum(w.suffix_from(i + 1)));
      out.add_scaled(term, sign);
    }
  }
  return out;
}

WordSum partial_n(int n, const Word& w) { return partial_n(n, WordSum(w)); }

ForestSum partial_as_forest_sum(int n) {
  if (n < 1) throw DomainError("partial_as_forest_sum requires n >= 1");
  ForestSum out;
  for (const auto& parts : compositions(n)) {
    const int d = static_cast<int>(parts.size());
    Rational c(Integer(d % 2 == 1 ? 1 : -1), Integer(d));
    c.canonicalize();
    out.add(ladder_product(parts), c);
  }
  Rational scale(n);
  scale /= pow2(n) - 1;
  return out * scale;
}

}  // namespace rtm
