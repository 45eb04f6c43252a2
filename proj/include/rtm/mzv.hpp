#pragma once

#include <string>

#include "rtm/forest.hpp"
#include "rtm/rational.hpp"
#include "rtm/real.hpp"
#include "rtm/words.hpp"

namespace rtm {

/// Target absolute error and the working precision derived from it
/// (2 log2(1/eps) + 64 bits).
class PrecisionConfig {
 public:
  explicit PrecisionConfig(Rational eps);
  static PrecisionConfig from_string(const std::string& eps_text);

  const Rational& eps() const { return eps_; }
  mpfr_prec_t bits() const { return bits_; }
  /// Same working precision (or more, if required), tighter target.
  PrecisionConfig tightened(const Rational& eps) const;

 private:
  Rational eps_;
  mpfr_prec_t bits_;
};

/// A value together with a rigorous absolute error bound
/// (series truncation plus a rounding allowance).
struct EvalResult {
  Real value;
  Real bound;

  std::string to_string(int digits) const;
};

/// Σ_{m_1 > ... > m_r >= 1} 2^{-m_1} / (m_1^{k_1} ... m_r^{k_r}) for
/// (k_1, ..., k_r) = z_encode(w). k_1 = 1 is allowed; the empty word gives 1.
EvalResult li_half(const Word& w, const PrecisionConfig& cfg);

/// ζ(w) for admissible non-empty w, by the Hölder convolution at 1/2:
///   ζ(a_1...a_n) = Σ_j Li_{dual(a_1...a_j)}(1/2) Li_{a_{j+1}...a_n}(1/2).
EvalResult zeta_num(const Word& w, const PrecisionConfig& cfg);
EvalResult zeta_num(const ZIndex& k, const PrecisionConfig& cfg);

/// Linear extension of ζ to admissible combinations; the empty word maps to 1.
EvalResult z_eval(const WordSum& p, const PrecisionConfig& cfg);

struct KernelReport {
  WordSum image;
  EvalResult result;
  bool pass;
};

/// Evaluates Z(f(w)); passes iff |value| <= bound + eps.
KernelReport kernel_check(const ForestSum& f, const Word& w, const PrecisionConfig& cfg);

/// Significant decimal digits warranted by eps.
int digits_for(const Rational& eps);

}  // namespace rtm
