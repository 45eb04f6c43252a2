#include "rtm/hopf.hpp"

#include <unordered_map>

namespace rtm {

namespace {

thread_local std::unordered_map<std::string, TensorSum> coproduct_cache;
thread_local std::unordered_map<std::string, TensorSum> forest_coproduct_cache;
thread_local std::unordered_map<std::string, ForestSum> antipode_cache;

TensorSum tree_coproduct(const Tree& t) {
  if (auto it = coproduct_cache.find(t.key()); it != coproduct_cache.end()) return it->second;

  TensorSum out;
  out.add({Forest(t), Forest()}, 1);
  for (const auto& [pair, c] : coproduct(t.branches()))
    out.add({pair.first, Forest(b_plus(pair.second))}, c);

  coproduct_cache.emplace(t.key(), out);
  return out;
}

ForestSum tree_antipode(const Tree& t) {
  if (auto it = antipode_cache.find(t.key()); it != antipode_cache.end()) return it->second;

  Forest tf(t);
  ForestSum out(tf, -1);
  for (const auto& [pair, c] : tree_coproduct(t)) {
    const auto& [left, right] = pair;
    if (left.empty() || right.empty()) continue;
    out.add_scaled(antipode(left) * ForestSum(right), -c);
  }

  antipode_cache.emplace(t.key(), out);
  return out;
}

}  // namespace

TensorSum coproduct(const Forest& f) {
  if (f.is_tree()) return tree_coproduct(f.trees().front());
  if (auto it = forest_coproduct_cache.find(f.key()); it != forest_coproduct_cache.end()) return it->second;
  TensorSum out({Forest(), Forest()}, 1);
  for (const auto& t : f.trees()) out = tensor_product(out, tree_coproduct(t));
  forest_coproduct_cache.emplace(f.key(), out);
  return out;
}

TensorSum coproduct(const ForestSum& a) {
  TensorSum out;
  for (const auto& [f, c] : a) out.add_scaled(coproduct(f), c);
  return out;
}

Rational counit(const ForestSum& a) { return a.coefficient(Forest()); }

ForestSum antipode(const Forest& f) {
  ForestSum out(Forest(), 1);
  for (const auto& t : f.trees()) out = out * tree_antipode(t);
  return out;
}

ForestSum antipode(const ForestSum& a) {
  ForestSum out;
  for (const auto& [f, c] : a) out.add_scaled(antipode(f), c);
  return out;
}

ForestSum grading(const ForestSum& a) {
  ForestSum out;
  for (const auto& [f, c] : a) out.add(f, c * f.degree());
  return out;
}

ForestSum dynkin(const Forest& f) {
  ForestSum out;
  for (const auto& [pair, c] : coproduct(f)) {
    const auto& [left, right] = pair;
    if (right.empty()) continue;  // Y(I) = 0
    out.add_scaled(antipode(left) * ForestSum(right), c * right.degree());
  }
  return out;
}

ForestSum dynkin(const ForestSum& a) {
  ForestSum out;
  for (const auto& [f, c] : a) out.add_scaled(dynkin(f), c);
  return out;
}

ForestSum multiply(const TensorSum& t) {
  ForestSum out;
  for (const auto& [pair, c] : t) out.add(pair.first * pair.second, c);
  return out;
}

TensorSum swap_factors(const TensorSum& t) {
  TensorSum out;
  for (const auto& [pair, c] : t) out.add({pair.second, pair.first}, c);
  return out;
}

Forest ladder(int m) {
  Forest f;
  for (int i = 0; i < m; ++i) f = Forest(b_plus(f));
  return f;
}

Forest ladder_product(const std::vector<int>& heights) {
  Forest f;
  for (int m : heights) f = f * ladder(m);
  return f;
}

std::vector<std::vector<int>> compositions(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= n; ++first) {
    for (auto& rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

void clear_hopf_caches() {
  coproduct_cache.clear();
  forest_coproduct_cache.clear();
  antipode_cache.clear();
}

}  // namespace rtm
