#include "rtm/relations.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <tuple>

#include "json.hpp"
#include "rtm/errors.hpp"
#include "rtm/tree_maps.hpp"

namespace rtm {

namespace {

std::map<ZIndex, Rational> z_coefficients(const WordSum& image, const std::string& context) {
  std::map<ZIndex, Rational> out;
  for (const auto& [w, c] : image) {
    if (!is_admissible(w))
      throw std::logic_error(context + ": image contains non-admissible word '" + w.text() + "'");
    out.emplace(z_encode(w), c);
  }
  return out;
}

void require_relation_word(const Word& w) {
  if (w.empty()) throw DomainError("relation source word must be non-empty");
  if (!is_admissible(w)) throw DomainError("relation source word '" + w.text() + "' is not admissible");
}

std::vector<ZIndex> admissible_columns(int weight) {
  std::vector<ZIndex> cols;
  for (const auto& w : admissible_words(weight)) cols.push_back(z_encode(w));
  std::sort(cols.begin(), cols.end());
  return cols;
}

// Integer row proportional to the rational row.
std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

std::vector<Integer> integer_row(const RelationRow& r, const std::vector<ZIndex>& cols) {
  std::vector<Rational> dense(cols.size());
  for (const auto& [k, c] : r.coeffs) {
    auto it = std::lower_bound(cols.begin(), cols.end(), k);
    if (it == cols.end() || *it != k)
      throw DimensionError("row entry " + to_string(k) + " is not an admissible index of weight " +
                           std::to_string(r.weight));
    dense[static_cast<std::size_t>(it - cols.begin())] = c;
  }
  return integer_row(dense);
}

void divide_by_content(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

WordSum RelationRow::as_word_sum() const {
  WordSum out;
  for (const auto& [k, c] : coeffs) out.add(z_decode(k), c);
  return out;
}

std::string derivation_label(int n) { return "d" + std::to_string(n); }

void RelationSet::sort() {
  std::stable_sort(rows.begin(), rows.end(), [](const RelationRow& a, const RelationRow& b) {
    return std::tie(a.weight, a.source, a.word) < std::tie(b.weight, b.source, b.word);
  });
}

std::map<int, std::vector<const RelationRow*>> RelationSet::by_weight() const {
  std::map<int, std::vector<const RelationRow*>> out;
  for (const auto& r : rows) out[r.weight].push_back(&r);
  return out;
}

void RunConfig::validate() const {
  if (max_degree < 1 || max_weight < 1) throw DomainError("max degree and max weight must be >= 1");
}

RelationRow relation_from(const Forest& f, const Word& w) {
  if (f.empty()) throw DomainError("tree-map relations require a non-empty forest");
  require_relation_word(w);
  RelationRow row;
  row.weight = f.degree() + w.weight();
  row.source = f.key();
  row.word = w;
  row.coeffs = z_coefficients(rtm::apply(f, w), "tree map " + f.key());
  return row;
}

RelationRow derivation_relation_from(int n, const Word& w) {
  if (n < 1) throw DomainError("derivation index must be >= 1");
  require_relation_word(w);
  RelationRow row;
  row.weight = n + w.weight();
  row.source = derivation_label(n);
  row.word = w;
  row.coeffs = z_coefficients(partial_n(n, w), "derivation " + row.source);
  return row;
}

RelationSet generate(const RunConfig& cfg) {
  cfg.validate();
  RelationSet set;
  set.provenance = "rtm " RTM_VERSION " max_degree=" + std::to_string(cfg.max_degree) +
                   " max_weight=" + std::to_string(cfg.max_weight) +
                   " tree_maps=" + (cfg.tree_maps ? "1" : "0") + " derivations=" + (cfg.derivations ? "1" : "0");
  if (cfg.tree_maps) {
    for (int d = 1; d <= cfg.max_degree; ++d) {
      const auto forests = enumerate_forests(d);
      for (int k = 2; d + k <= cfg.max_weight; ++k)
        for (const auto& w : admissible_words(k))
          for (const auto& f : forests) set.rows.push_back(relation_from(f, w));
    }
  }
  if (cfg.derivations) {
    for (int n = 1; n + 2 <= cfg.max_weight; ++n)
      for (int k = 2; n + k <= cfg.max_weight; ++k)
        for (const auto& w : admissible_words(k)) set.rows.push_back(derivation_relation_from(n, w));
  }
  set.sort();
  return set;
}

std::size_t bareiss_eliminate(IntegerMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const Integer& p = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Integer lead = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        t = p * m[i][j] - lead * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_exact(const RationalMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  IntegerMatrix ints;
  ints.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != cols) throw DimensionError("ragged matrix: rows of length " + std::to_string(cols) + " and " +
                                                 std::to_string(row.size()));
    ints.push_back(integer_row(row));
  }
  return bareiss_eliminate(ints);
}

std::map<int, std::size_t> rank_by_weight(const RelationSet& set) {
  std::map<int, std::size_t> out;
  for (const auto& [weight, rows] : set.by_weight()) {
    const auto cols = admissible_columns(weight);
    IntegerMatrix m;
    for (const auto* r : rows) m.push_back(integer_row(*r, cols));
    out[weight] = bareiss_eliminate(m);
  }
  return out;
}

SpanResult span_inclusion(const RelationSet& sub, const RelationSet& sup) {
  const auto sup_blocks = sup.by_weight();
  for (const auto& [weight, rows] : sub.by_weight()) {
    const auto cols = admissible_columns(weight);
    IntegerMatrix basis;
    if (auto it = sup_blocks.find(weight); it != sup_blocks.end())
      for (const auto* r : it->second) basis.push_back(integer_row(*r, cols));
    basis.resize(bareiss_eliminate(basis));

    // Pivot column of each echelon row.
    std::vector<std::size_t> pivots;
    for (const auto& b : basis) {
      std::size_t c = 0;
      while (sgn(b[c]) == 0) ++c;
      pivots.push_back(c);
    }

    // a is in the span iff eliminating it against the echelon basis leaves 0,
    // i.e. rank(basis + a) = rank(basis).
    for (const auto* r : rows) {
      auto a = integer_row(*r, cols);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::size_t c = pivots[i];
        if (sgn(a[c]) == 0) continue;
        const Integer lead = a[c];
        const Integer& p = basis[i][c];
        for (std::size_t j = 0; j < cols.size(); ++j) a[j] = p * a[j] - lead * basis[i][j];
        divide_by_content(a);
      }
      if (std::any_of(a.begin(), a.end(), [](const Integer& v) { return sgn(v) != 0; }))
        return {false, *r};
    }
  }
  return {true, std::nullopt};
}

void write_jsonl(std::ostream& out, const RelationSet& set) {
  for (const auto& r : set.rows) {
    nlohmann::ordered_json row;
    row["weight"] = r.weight;
    row["forest"] = r.source;
    row["word"] = r.word.text();
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& [k, c] : r.coeffs) coeffs.push_back({to_string(k), c.get_num().get_str(), c.get_den().get_str()});
    row["coeffs"] = std::move(coeffs);
    out << row.dump() << '\n';
  }
}

RelationSet read_jsonl(std::istream& in) {
  RelationSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      RelationRow r;
      r.weight = j.at("weight").get<int>();
      r.source = j.at("forest").get<std::string>();
      r.word = Word::parse(j.at("word").get<std::string>());
      for (const auto& entry : j.at("coeffs")) {
        Rational c(parse_integer(entry.at(1).get<std::string>()), parse_integer(entry.at(2).get<std::string>()));
        if (sgn(c.get_den()) == 0) throw DomainError("zero denominator");
        c.canonicalize();
        const ZIndex k = parse_zindex(entry.at(0).get<std::string>());
        if (k.weight() != r.weight || !k.admissible())
          throw DomainError("index " + to_string(k) + " is not admissible of weight " + std::to_string(r.weight));
        r.coeffs[k] += c;
      }
      std::erase_if(r.coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
      set.rows.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ParseError(std::string("relation record: ") + e.what() + " (line " + std::to_string(line_no) + ")", 0);
    }
  }
  set.sort();
  return set;
}

std::string to_string(const RelationRow& row) {
  std::string out = "w=" + std::to_string(row.weight) + " " + (row.source.empty() ? "1" : row.source) + " " +
                    row.word.text() + " : ";
  LinearCombination<ZIndex> combination;
  for (const auto& [k, q] : row.coeffs) combination.add(k, q);
  return out + render_sum(combination, [](const ZIndex& k) { return to_string(k); });
}

void write_text(std::ostream& out, const RelationSet& set) {
  if (!set.provenance.empty()) out << "# " << set.provenance << '\n';
  for (const auto& r : set.rows) out << to_string(r) << '\n';
}

}  // namespace rtm
