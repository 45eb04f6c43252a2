#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtm/linear_combination.hpp"

namespace rtm {

class Forest;

/// Unordered rooted tree. Immutable; copies share structure.
///
/// The canonical key is "(" followed by the children's keys sorted bytewise,
/// followed by ")". Two trees are equal iff their keys are equal.
class Tree {
 public:
  const std::string& key() const;
  int degree() const;
  /// The forest obtained by deleting the root (f_t with t = B+(f_t)).
  const Forest& branches() const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) { return a.key() <=> b.key(); }

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend Tree b_plus(const Forest& f);
};

/// Commutative monomial in trees. The empty forest is the unit I.
class Forest {
 public:
  Forest() = default;
  explicit Forest(Tree t);
  explicit Forest(std::vector<Tree> trees);

  const std::vector<Tree>& trees() const { return trees_; }
  const std::string& key() const { return key_; }
  int degree() const { return degree_; }
  bool empty() const { return trees_.empty(); }
  bool is_tree() const { return trees_.size() == 1; }

  friend Forest operator*(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) { return a.key_ <=> b.key_; }

 private:
  void canonicalize();

  std::vector<Tree> trees_;
  std::string key_;
  int degree_ = 0;
};

using ForestSum = LinearCombination<Forest>;
using ForestPair = std::pair<Forest, Forest>;
using TensorSum = LinearCombination<ForestPair>;

/// Grafts every tree of f onto a new common root.
Tree b_plus(const Forest& f);
Forest remove_root(const Tree& t);

std::string canonical_encode(const Forest& f);
Forest parse_forest(std::string_view key);

/// All forests of degree exactly n, duplicate-free, sorted by key.
std::vector<Forest> enumerate_forests(int n);
/// All trees of degree exactly n, sorted by key.
std::vector<Tree> enumerate_trees(int n);

ForestSum forest_sum_product(const ForestSum& a, const ForestSum& b);
inline ForestSum operator*(const ForestSum& a, const ForestSum& b) { return forest_sum_product(a, b); }

/// Component-wise product (a⊗b)(c⊗d) = ac⊗bd.
TensorSum tensor_product(const TensorSum& a, const TensorSum& b);

/// Human-readable forms; the unit prints as "1".
std::string to_string(const Forest& f);
std::string to_string(const ForestSum& a);

}  // namespace rtm
