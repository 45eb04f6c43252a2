#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rtm/forest.hpp"
#include "rtm/words.hpp"

namespace rtm {

/// Truncated power series Σ_{k<=N} c_k u^k with word-algebra coefficients.
/// u is central; coefficient products are noncommutative.
class PolySeries {
 public:
  explicit PolySeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  /// The constant series c.
  static PolySeries constant(int order, WordSum c);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const WordSum& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  WordSum& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  PolySeries& operator+=(const PolySeries& o);
  PolySeries& operator-=(const PolySeries& o);
  PolySeries& operator*=(const Rational& s);
  friend PolySeries operator+(PolySeries a, const PolySeries& b) { return a += b; }
  friend PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
  friend PolySeries operator*(PolySeries a, const Rational& s) { return a *= s; }
  /// Cauchy product, truncated at the common order.
  friend PolySeries operator*(const PolySeries& a, const PolySeries& b);
  friend bool operator==(const PolySeries& a, const PolySeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<WordSum> coeffs_;
};

/// Algebra endomorphism of the truncated series ring fixing u, given by the
/// images of x and y.
class EndoSeries {
 public:
  EndoSeries(PolySeries image_x, PolySeries image_y);
  static EndoSeries identity(int order);

  int order() const { return image_x_.order(); }
  const PolySeries& image_x() const { return image_x_; }
  const PolySeries& image_y() const { return image_y_; }
  const PolySeries& image(Letter a) const { return a == Letter::x ? image_x_ : image_y_; }
  /// Order-0 images are exactly x and y.
  bool is_identity_at_zero() const;

  friend bool operator==(const EndoSeries& a, const EndoSeries& b) = default;

 private:
  PolySeries image_x_;
  PolySeries image_y_;
};

/// Δ_{a u}: x -> x (1 + a y u)^{-1}, y -> (x + y) - x (1 + a y u)^{-1}.
EndoSeries delta_u(const Rational& scale, int order);

PolySeries endo_apply(const EndoSeries& e, const WordSum& p);
/// Applies e coefficient-wise (u is fixed), truncating at e's order.
PolySeries endo_apply(const EndoSeries& e, const PolySeries& p);
/// first ∘ second.
EndoSeries endo_compose(const EndoSeries& first, const EndoSeries& second);
/// Throws DomainError unless e is the identity at order 0.
EndoSeries endo_inverse(const EndoSeries& e);

/// exp(Σ_n coeffs(n) ∂_n u^n) applied to `target`, truncated at `order`.
PolySeries exp_derivation_series(const std::function<Rational(int)>& coeffs, const WordSum& target, int order);

/// Truncated series with coefficients in the (commutative) forest algebra.
class HSeries {
 public:
  explicit HSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ForestSum& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  ForestSum& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  friend HSeries operator*(const HSeries& a, const HSeries& b);
  friend bool operator==(const HSeries& a, const HSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<ForestSum> coeffs_;
};

/// Λ_u = Σ_{n<=N} λ_n u^n.
HSeries lambda_series(int order);
/// log(I + B) = Σ_d (-1)^{d+1} B^d / d. Throws DomainError unless the
/// constant term is I.
HSeries hseries_log(const HSeries& a);

/// "c0 + (c1)·u + (c2)·u^2 + ..."; zero coefficients are skipped.
std::string to_string(const PolySeries& s);
std::string to_string(const HSeries& s);

}  // namespace rtm
