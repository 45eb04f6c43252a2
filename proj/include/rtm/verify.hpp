#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rtm {

/// Outcome of one identity checked over a finite family of inputs.
/// `detail` names the first counterexample on failure.
struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;
};

bool all_pass(const std::vector<CheckResult>& results);

/// Coassociativity, both counit laws, and both antipode laws on every forest
/// of degree <= max_degree (including the unit).
std::vector<CheckResult> verify_hopf_axioms(int max_degree);

/// D(λ_n)(w) = (2^n - 1) ∂_n(w) for n <= max_n and every word of weight
/// 1..max_word_weight, and (2^n - 1) partial_as_forest_sum(n) = D(λ_n).
std::vector<CheckResult> verify_main_theorem(int max_n, int max_word_weight);

/// Closed forms for Δ(λ_n), S(λ_n), D(λ_n) as sums over compositions, n <= max_n.
std::vector<CheckResult> verify_ladder_identities(int max_n);

/// n λ_n(w) = Σ_j (2^j - 1) λ_{n-j}(∂_j(w)) for n <= max_n, all words of
/// weight 1..max_word_weight.
CheckResult verify_ladder_recursion(int max_n, int max_word_weight);

/// The truncated-series identities: the Δ_{-2u} ∘ Δ_{-u}^{-1} image of x,
/// Δ_u as an exponential of derivations, the (2^n - 1) exponential acting on
/// x, Λ_u(x), and log Λ_u = Σ D(λ_n)/n u^n (the last to log_order).
std::vector<CheckResult> verify_series(int order, int log_order);

/// D(λ_n)(vw) = D(λ_n)(v) w + v D(λ_n)(w) on `pairs` random word pairs with
/// total weight <= max_total_weight, for n <= max_n.
CheckResult verify_derivation_property(int max_n, int pairs, int max_total_weight, std::uint64_t seed);

/// f(x) + f(y) = 0 for every non-empty forest of degree <= max_degree.
CheckResult verify_sign_property(int max_degree);

/// D(λ_1^n) = 0 for 2 <= n <= max_n.
CheckResult verify_vertex_power_dynkin(int max_n);

}  // namespace rtm
