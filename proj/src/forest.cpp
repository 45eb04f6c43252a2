#include "rtm/forest.hpp"

#include <algorithm>
#include <functional>

#include "rtm/errors.hpp"

namespace rtm {

struct Tree::Node {
  Forest branches;
  std::string key;
  int degree;
};

const std::string& Tree::key() const { return node_->key; }
int Tree::degree() const { return node_->degree; }
const Forest& Tree::branches() const { return node_->branches; }

Forest::Forest(Tree t) : trees_{std::move(t)} { canonicalize(); }

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) { canonicalize(); }

void Forest::canonicalize() {
  std::sort(trees_.begin(), trees_.end());
  key_.clear();
  degree_ = 0;
  for (const auto& t : trees_) {
    key_ += t.key();
    degree_ += t.degree();
  }
}

Forest operator*(const Forest& a, const Forest& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Forest out;
  out.trees_.reserve(a.trees_.size() + b.trees_.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(), std::back_inserter(out.trees_));
  for (const auto& t : out.trees_) out.key_ += t.key();
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Tree b_plus(const Forest& f) {
  auto node = std::make_shared<Tree::Node>();
  node->branches = f;
  node->key = "(" + f.key() + ")";
  node->degree = f.degree() + 1;
  return Tree(std::move(node));
}

Forest remove_root(const Tree& t) { return t.branches(); }

std::string canonical_encode(const Forest& f) { return f.key(); }

namespace {

// Parses trees from key[pos] until a ')' or end of input.
std::vector<Tree> parse_trees(std::string_view key, std::size_t& pos, int depth) {
  std::vector<Tree> trees;
  while (pos < key.size()) {
    char c = key[pos];
    if (c == ')') {
      if (depth == 0) throw ParseError("unbalanced ')'", pos);
      return trees;
    }
    if (c != '(') throw ParseError(std::string("unexpected character '") + c + "'", pos);
    ++pos;
    auto children = parse_trees(key, pos, depth + 1);
    if (pos >= key.size()) throw ParseError("missing ')'", pos);
    ++pos;
    trees.push_back(b_plus(Forest(std::move(children))));
  }
  if (depth > 0) throw ParseError("missing ')'", pos);
  return trees;
}

}  // namespace

Forest parse_forest(std::string_view key) {
  std::size_t pos = 0;
  return Forest(parse_trees(key, pos, 0));
}

std::vector<Tree> enumerate_trees(int n) {
  std::vector<Tree> out;
  if (n < 1) return out;
  for (const auto& f : enumerate_forests(n - 1)) out.push_back(b_plus(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> enumerate_forests(int n) {
  if (n < 0) return {};
  // trees[d] = all trees of degree d, built bottom-up via B+.
  std::vector<std::vector<Tree>> trees(n + 1);
  std::vector<std::vector<Forest>> forests(n + 1);
  forests[0] = {Forest()};

  // Multisets of trees with total degree `remaining`, drawn from the pool
  // in nonincreasing pool order to avoid duplicates.
  std::vector<Tree> pool;
  std::function<void(int, std::size_t, std::vector<Tree>&, std::vector<Forest>&)> extend =
      [&](int remaining, std::size_t max_index, std::vector<Tree>& chosen, std::vector<Forest>& out) {
        if (remaining == 0) {
          out.emplace_back(chosen);
          return;
        }
        for (std::size_t i = 0; i <= max_index && i < pool.size(); ++i) {
          if (pool[i].degree() > remaining) continue;
          chosen.push_back(pool[i]);
          extend(remaining - pool[i].degree(), i, chosen, out);
          chosen.pop_back();
        }
      };

  for (int d = 1; d <= n; ++d) {
    for (const auto& f : forests[d - 1]) trees[d].push_back(b_plus(f));
    pool.insert(pool.end(), trees[d].begin(), trees[d].end());
    std::vector<Tree> chosen;
    extend(d, pool.size() - 1, chosen, forests[d]);
    std::sort(forests[d].begin(), forests[d].end());
  }
  return forests[n];
}

ForestSum forest_sum_product(const ForestSum& a, const ForestSum& b) {
  ForestSum out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b) out.add(fa * fb, ca * cb);
  return out;
}

TensorSum tensor_product(const TensorSum& a, const TensorSum& b) {
  TensorSum out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out.add({pa.first * pb.first, pa.second * pb.second}, ca * cb);
  return out;
}

std::string to_string(const Forest& f) { return f.empty() ? "1" : f.key(); }

std::string to_string(const ForestSum& a) {
  return render_sum(a, [](const Forest& f) { return to_string(f); });
}

}  // namespace rtm
