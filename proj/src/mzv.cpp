#include "rtm/mzv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rtm/errors.hpp"
#include "rtm/tree_maps.hpp"

namespace rtm {

namespace {

// Upper bound for log2(1/eps), eps > 0.
long log2_inverse(const Rational& eps) {
  const long den_bits = static_cast<long>(mpz_sizeinbase(eps.get_den_mpz_t(), 2));
  const long num_bits = static_cast<long>(mpz_sizeinbase(eps.get_num_mpz_t(), 2));
  return std::max(1L, den_bits - num_bits + 1);
}

mpfr_prec_t required_bits(const Rational& eps) { return static_cast<mpfr_prec_t>(2 * log2_inverse(eps) + 64); }

// Allowance for accumulated round-to-nearest error: `ops` operations on
// quantities bounded by 2^magnitude_bits, each off by at most half an ulp.
Real rounding_allowance(double ops, long magnitude_bits, mpfr_prec_t bits) {
  Real r(static_cast<long>(std::ceil(ops)) + 1, bits);
  return r * Real::exp2(magnitude_bits - static_cast<long>(bits) + 2, bits);
}

}  // namespace

PrecisionConfig::PrecisionConfig(Rational eps) : eps_(std::move(eps)) {
  eps_.canonicalize();
  if (sgn(eps_) <= 0) throw DomainError("precision target must be positive");
  bits_ = required_bits(eps_);
}

PrecisionConfig PrecisionConfig::from_string(const std::string& eps_text) {
  return PrecisionConfig(parse_rational(eps_text));
}

PrecisionConfig PrecisionConfig::tightened(const Rational& eps) const {
  PrecisionConfig out(eps);
  out.bits_ = std::max(out.bits_, bits_);
  return out;
}

std::string EvalResult::to_string(int digits) const {
  return value.to_string(digits) + " ± " + bound.to_string(2);
}

int digits_for(const Rational& eps) {
  // log10(2) < 0.30103
  return std::max(17, static_cast<int>(static_cast<double>(log2_inverse(eps)) * 0.30103) + 1);
}

EvalResult li_half(const Word& w, const PrecisionConfig& cfg) {
  const ZIndex index = z_encode(w);
  const mpfr_prec_t bits = cfg.bits();
  const int r = index.depth();
  if (r == 0) return {Real(1L, bits), Real(0L, bits)};

  // The inner nested sum at m_1 = m has at most C(m-1, r-1) <= m^{r-1}
  // terms, each <= 1, so the tail past M is dominated by
  //   Σ_{m>M} 2^{-m} m^{r-1} <= 2^{-(M+1)} (M+1)^{r-1} / (1 - ρ),
  //   ρ = (1 + 1/(M+1))^{r-1} / 2,
  // valid once ρ < 1 (guaranteed by M >= 2r).
  const double log2_half_eps = -static_cast<double>(log2_inverse(cfg.eps())) - 1.0;
  auto log2_tail = [r](long cutoff) {
    const double m1 = static_cast<double>(cutoff + 1);
    const double rho = 0.5 * std::pow(1.0 + 1.0 / m1, r - 1);
    return -m1 + (r - 1) * std::log2(m1) - std::log2(1.0 - rho);
  };
  long cutoff = 2L * r + 2;
  while (log2_tail(cutoff) > log2_half_eps - 1.0) ++cutoff;

  std::vector<Real> acc(static_cast<std::size_t>(r), Real(0L, bits));
  Real power_of_half(1L, bits);
  const Real half = Real::exp2(-1, bits);
  Real m_power(bits);
  for (long m = 1; m <= cutoff; ++m) {
    power_of_half *= half;
    // Outer levels first so each reads the inner partial sum from step m-1.
    for (int j = 0; j < r; ++j) {
      const int k = index.parts[static_cast<std::size_t>(j)];
      mpfr_ui_pow_ui(m_power.get(), static_cast<unsigned long>(m), static_cast<unsigned long>(k), MPFR_RNDN);
      Real term = j + 1 < r ? acc[static_cast<std::size_t>(j) + 1] : Real(1L, bits);
      term /= m_power;
      if (j == 0) term *= power_of_half;
      acc[static_cast<std::size_t>(j)] += term;
    }
  }

  // Tail bound, evaluated in MPFR and padded by 2^-20 relative.
  Real tail = Real::exp2(-(cutoff + 1), bits);
  {
    Real base(cutoff + 1, bits);
    for (int i = 1; i < r; ++i) tail *= base;
    Real rho(1L, bits);
    Real ratio = Real(cutoff + 2, bits) / base;
    for (int i = 1; i < r; ++i) rho *= ratio;
    rho *= half;
    tail /= Real(1L, bits) - rho;
    tail *= Real(1L, bits) + Real::exp2(-20, bits);
  }
  // Partial sums are bounded by cutoff^r; about 5 r operations per step.
  const long magnitude_bits = static_cast<long>(r * std::ceil(std::log2(static_cast<double>(cutoff) + 1.0)));
  Real bound = tail + rounding_allowance(5.0 * r * static_cast<double>(cutoff), magnitude_bits, bits);
  return {acc.front(), bound};
}

EvalResult zeta_num(const Word& w, const PrecisionConfig& cfg) {
  if (w.empty() || !is_admissible(w))
    throw DomainError("zeta: word '" + w.text() + "' is not admissible (the defining series diverges)");

  const int n = w.weight();
  const mpfr_prec_t bits = cfg.bits();
  // Every factor lies in [0, 1], so a split contributes at most
  // e_p + e_q + e_p e_q <= 3 e_f of error.
  const PrecisionConfig factor_cfg = cfg.tightened(cfg.eps() / Rational(4 * (n + 1)));

  Real value(0L, bits);
  Real bound(0L, bits);
  for (int j = 0; j <= n; ++j) {
    const EvalResult p = li_half(dual(w.prefix(j)), factor_cfg);
    const EvalResult q = li_half(w.suffix_from(j), factor_cfg);
    value += p.value * q.value;
    bound += p.value.abs() * q.bound + q.value.abs() * p.bound + p.bound * q.bound;
  }
  bound += rounding_allowance(4.0 * (n + 1), 1, bits);
  if (Real(cfg.eps(), bits) < bound)
    throw std::logic_error("zeta: certified bound exceeds the requested tolerance");
  return {value, bound};
}

EvalResult zeta_num(const ZIndex& k, const PrecisionConfig& cfg) { return zeta_num(z_decode(k), cfg); }

EvalResult z_eval(const WordSum& p, const PrecisionConfig& cfg) {
  if (!is_admissible(p)) {
    for (const auto& [w, c] : p)
      if (!is_admissible(w)) throw DomainError("Z: word '" + w.text() + "' is not admissible");
  }
  const mpfr_prec_t bits = cfg.bits();
  Real value(0L, bits);
  Real bound(0L, bits);
  if (p.is_zero()) return {value, bound};

  Rational total = 0;
  for (const auto& [w, c] : p) total += abs(c);
  const PrecisionConfig word_cfg = cfg.tightened(cfg.eps() / (2 * total));

  for (const auto& [w, c] : p) {
    const Real coeff(c, bits);
    if (w.empty()) {
      value += coeff;
      continue;
    }
    const EvalResult z = zeta_num(w, word_cfg);
    value += coeff * z.value;
    bound += coeff.abs() * z.bound;
  }
  // Coefficient conversion, products and sums; ζ values are at most ζ(2) < 2.
  const Integer ceil_total = total.get_num() / total.get_den() + 1;
  const long magnitude_bits = static_cast<long>(mpz_sizeinbase(ceil_total.get_mpz_t(), 2)) + 1;
  bound += rounding_allowance(4.0 * static_cast<double>(p.size()), magnitude_bits, bits);
  return {value, bound};
}

KernelReport kernel_check(const ForestSum& f, const Word& w, const PrecisionConfig& cfg) {
  if (f.is_zero() || sgn(f.coefficient(Forest())) != 0)
    throw DomainError("kernel check requires a combination of non-empty forests");
  if (!is_admissible(w)) throw DomainError("kernel check: word '" + w.text() + "' is not admissible");

  WordSum image = rtm::apply(f, WordSum(w));
  if (!is_admissible(image))
    throw std::logic_error("tree map image of admissible word '" + w.text() + "' is not admissible");

  EvalResult result = z_eval(image, cfg);
  const Real slack = result.bound + Real(cfg.eps(), cfg.bits());
  const bool pass = result.value.abs() <= slack;
  return {std::move(image), std::move(result), pass};
}

}  // namespace rtm
