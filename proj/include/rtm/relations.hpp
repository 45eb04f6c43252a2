#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtm/forest.hpp"
#include "rtm/words.hpp"

namespace rtm {

/// One element of ker Z in the z-basis: either Z(f(w)) = 0 for a tree map
/// or Z(∂_n(w)) = 0 for a derivation. Derivation rows carry the source
/// label "d<n>" in place of a forest key.
struct RelationRow {
  int weight = 0;
  std::string source;
  Word word;
  std::map<ZIndex, Rational> coeffs;

  bool is_derivation() const { return !source.empty() && source.front() == 'd'; }
  WordSum as_word_sum() const;

  friend bool operator==(const RelationRow&, const RelationRow&) = default;
};

std::string derivation_label(int n);

/// Rows in deterministic order: weight, then source, then word.
struct RelationSet {
  std::vector<RelationRow> rows;
  /// Free-form generator parameters, written as a comment header in text output.
  std::string provenance;

  void sort();
  std::map<int, std::vector<const RelationRow*>> by_weight() const;
};

struct RunConfig {
  int max_degree = 1;
  int max_weight = 1;
  bool tree_maps = true;
  bool derivations = false;

  /// Throws DomainError unless every bound is >= 1.
  void validate() const;
};

/// Z-encoding of f(w). Requires f non-empty and w admissible non-empty.
RelationRow relation_from(const Forest& f, const Word& w);
/// Z-encoding of ∂_n(w). Requires n >= 1 and w admissible non-empty.
RelationRow derivation_relation_from(int n, const Word& w);

/// Tree-map rows for 1 <= deg f <= max_degree, weight(w) >= 2,
/// deg f + weight(w) <= max_weight; optionally derivation rows with
/// n + weight(w) <= max_weight.
RelationSet generate(const RunConfig& cfg);

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free (Bareiss) elimination in place. Pivots are taken in column
/// order, choosing the first row with a nonzero entry. Returns the rank; on
/// return the first `rank` rows span the original row space.
std::size_t bareiss_eliminate(IntegerMatrix& m);

/// Exact rank over Q. Throws DimensionError on ragged input.
std::size_t rank_exact(const RationalMatrix& m);

/// Rank of each weight block, columns indexed by the admissible compositions
/// of that weight in lexicographic order.
std::map<int, std::size_t> rank_by_weight(const RelationSet& rows);

struct SpanResult {
  bool included = true;
  std::optional<RelationRow> witness;
};

/// Whether every row of `sub` lies in the Q-span of the rows of `sup` of the
/// same weight.
SpanResult span_inclusion(const RelationSet& sub, const RelationSet& sup);

/// One JSON object per line:
///   {"weight":4,"forest":"(())","word":"xy","coeffs":[["(2,1,1)","2","1"],...]}
void write_jsonl(std::ostream& out, const RelationSet& rows);
RelationSet read_jsonl(std::istream& in);
void write_text(std::ostream& out, const RelationSet& rows);

std::string to_string(const RelationRow& row);

}  // namespace rtm
