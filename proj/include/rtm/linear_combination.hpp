#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "rtm/rational.hpp"

namespace rtm {

/// Finitely supported map Basis -> Rational. Zero coefficients are never
/// stored, so two combinations are equal iff their maps are equal.
template <class Basis, class Compare = std::less<Basis>>
class LinearCombination {
 public:
  using Map = std::map<Basis, Rational, Compare>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Basis b, Rational c = 1) { add(std::move(b), c); }
  LinearCombination(std::initializer_list<std::pair<Basis, Rational>> terms) {
    for (const auto& [b, c] : terms) add(b, c);
  }

  void add(const Basis& b, const Rational& c) {
    if (sgn(c) == 0) return;
    if (!is_canonical(c)) {
      Rational fixed(c);
      fixed.canonicalize();
      add(b, fixed);
      return;
    }
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else if (!is_canonical(s)) {
      Rational fixed(s);
      fixed.canonicalize();
      *this *= fixed;
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  /// Adds s * o without materializing the scaled copy.
  void add_scaled(const LinearCombination& o, const Rational& s) {
    if (sgn(s) == 0) return;
    if (!is_canonical(s)) {
      Rational fixed(s);
      fixed.canonicalize();
      add_scaled(o, fixed);
      return;
    }
    for (const auto& [b, c] : o.terms_) add(b, c * s);
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  // GMP arithmetic expects reduced fractions with positive denominators;
  // a hand-built mpq_class need not be one.
  static bool is_canonical(const Rational& c) {
    if (mpz_cmp_ui(c.get_den_mpz_t(), 1) == 0) return true;
    if (sgn(c.get_den()) <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    return g == 1;
  }

  Map terms_;
};

/// Renders "c1*b1 + c2*b2 - ..." in basis order; unit coefficients omitted.
template <class Sum, class Render>
std::string render_sum(const Sum& s, Render render) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : s) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "*";
    out += render(b);
  }
  return out;
}

}  // namespace rtm
