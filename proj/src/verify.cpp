#include "rtm/verify.hpp"

#include <algorithm>
#include <random>
#include <tuple>

#include "rtm/hopf.hpp"
#include "rtm/series.hpp"
#include "rtm/tree_maps.hpp"
#include "rtm/words.hpp"

namespace rtm {

namespace {

using TripleSum = LinearCombination<std::tuple<Forest, Forest, Forest>>;

void fail(CheckResult& r, const std::string& detail) {
  if (r.pass) r.detail = detail;
  r.pass = false;
}

std::vector<Forest> forests_up_to(int max_degree) {
  std::vector<Forest> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto fs = enumerate_forests(d);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::vector<Word> words_up_to(int max_weight) {
  std::vector<Word> out;
  for (int k = 1; k <= max_weight; ++k) {
    auto ws = words_of_weight(k);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

// Σ_{m_1+...+m_d=n} weight(d) λ_{m_1} ... λ_{m_d}
template <class Weight>
ForestSum composition_sum(int n, Weight weight) {
  ForestSum out;
  for (const auto& parts : compositions(n)) out.add(ladder_product(parts), weight(static_cast<int>(parts.size())));
  return out;
}

PolySeries ladder_image_of_x(int order) {
  // x + Σ_{n>=1} x (x+2y)^{n-1} y u^n
  const WordSum x_plus_2y{{Word(Letter::x), 1}, {Word(Letter::y), 2}};
  PolySeries s = PolySeries::constant(order, letter_sum(Letter::x));
  WordSum head = letter_sum(Letter::x);
  for (int n = 1; n <= order; ++n) {
    s[n] = head * letter_sum(Letter::y);
    head = head * x_plus_2y;
  }
  return s;
}

Rational mersenne(int n) { return pow2(n) - 1; }

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::vector<CheckResult> verify_hopf_axioms(int max_degree) {
  CheckResult coassoc{"coassociativity"};
  CheckResult counit_left{"counit (ε⊗id)∘Δ = id"};
  CheckResult counit_right{"counit (id⊗ε)∘Δ = id"};
  CheckResult antipode_left{"antipode m∘(S⊗id)∘Δ = ε·I"};
  CheckResult antipode_right{"antipode m∘(id⊗S)∘Δ = ε·I"};

  for (const auto& f : forests_up_to(max_degree)) {
    const TensorSum delta = coproduct(f);
    const ForestSum self(f);
    const ForestSum unit_part = ForestSum(Forest(), counit(f));

    TripleSum left, right;
    ForestSum eps_id, id_eps, s_id, id_s;
    for (const auto& [pair, c] : delta) {
      const auto& [a, b] = pair;
      for (const auto& [inner, ci] : coproduct(a)) left.add({inner.first, inner.second, b}, c * ci);
      for (const auto& [inner, ci] : coproduct(b)) right.add({a, inner.first, inner.second}, c * ci);
      eps_id.add(b, c * counit(a));
      id_eps.add(a, c * counit(b));
      s_id.add_scaled(antipode(a) * ForestSum(b), c);
      id_s.add_scaled(ForestSum(a) * antipode(b), c);
    }
    const std::string name = to_string(f);
    ++coassoc.cases;
    ++counit_left.cases;
    ++counit_right.cases;
    ++antipode_left.cases;
    ++antipode_right.cases;
    if (!(left == right)) fail(coassoc, "fails on " + name);
    if (!(eps_id == self)) fail(counit_left, "fails on " + name);
    if (!(id_eps == self)) fail(counit_right, "fails on " + name);
    if (!(s_id == unit_part)) fail(antipode_left, "fails on " + name + ": got " + to_string(s_id));
    if (!(id_s == unit_part)) fail(antipode_right, "fails on " + name + ": got " + to_string(id_s));
  }
  return {coassoc, counit_left, counit_right, antipode_left, antipode_right};
}

std::vector<CheckResult> verify_main_theorem(int max_n, int max_word_weight) {
  CheckResult op{"D(λ_n)(w) = (2^n-1) ∂_n(w)"};
  CheckResult decomposition{"(2^n-1) ladder decomposition of ∂_n = D(λ_n)"};
  const auto words = words_up_to(max_word_weight);
  for (int n = 1; n <= max_n; ++n) {
    const ForestSum d = dynkin(ladder(n));
    ++decomposition.cases;
    if (!(partial_as_forest_sum(n) * mersenne(n) == d)) fail(decomposition, "fails at n=" + std::to_string(n));
    for (const auto& w : words) {
      ++op.cases;
      const WordSum lhs = rtm::apply(d, WordSum(w));
      const WordSum rhs = partial_n(n, w) * mersenne(n);
      if (!(lhs == rhs)) fail(op, "fails at n=" + std::to_string(n) + ", w=" + w.text());
    }
  }
  return {op, decomposition};
}

std::vector<CheckResult> verify_ladder_identities(int max_n) {
  CheckResult cop{"Δ(λ_n) = Σ λ_j ⊗ λ_{n-j}"};
  CheckResult anti{"S(λ_n) = Σ_d (-1)^d Σ λ_{m_1}...λ_{m_d}"};
  CheckResult dyn{"D(λ_n) = n Σ_d (-1)^{d+1}/d Σ λ_{m_1}...λ_{m_d}"};
  for (int n = 1; n <= max_n; ++n) {
    const Forest lambda = ladder(n);
    const std::string at = "n=" + std::to_string(n);

    TensorSum expected_cop;
    for (int j = 0; j <= n; ++j) expected_cop.add({ladder(j), ladder(n - j)}, 1);
    ++cop.cases;
    if (!(coproduct(lambda) == expected_cop)) fail(cop, "fails at " + at);

    const ForestSum expected_anti = composition_sum(n, [](int d) { return Rational(d % 2 == 0 ? 1 : -1); });
    ++anti.cases;
    if (!(antipode(lambda) == expected_anti)) fail(anti, "fails at " + at + ": got " + to_string(antipode(lambda)));

    const ForestSum expected_dyn = composition_sum(n, [n](int d) {
      Rational c(Integer(d % 2 == 1 ? n : -n), Integer(d));
      c.canonicalize();
      return c;
    });
    ++dyn.cases;
    if (!(dynkin(lambda) == expected_dyn)) fail(dyn, "fails at " + at + ": got " + to_string(dynkin(lambda)));
  }
  return {cop, anti, dyn};
}

CheckResult verify_ladder_recursion(int max_n, int max_word_weight) {
  CheckResult r{"n λ_n = Σ (2^j-1) λ_{n-j} ∘ ∂_j"};
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& w : words_up_to(max_word_weight)) {
      ++r.cases;
      const WordSum lhs = rtm::apply(ladder(n), w) * Rational(n);
      WordSum rhs;
      for (int j = 1; j <= n; ++j) rhs.add_scaled(rtm::apply(ladder(n - j), partial_n(j, w)), mersenne(j));
      if (!(lhs == rhs)) fail(r, "fails at n=" + std::to_string(n) + ", w=" + w.text());
    }
  }
  return r;
}

std::vector<CheckResult> verify_series(int order, int log_order) {
  const WordSum x = letter_sum(Letter::x);
  const PolySeries expected = ladder_image_of_x(order);

  CheckResult eq5{"(Δ_{-2u} ∘ Δ_{-u}^{-1})(x) = x + x u/(1-(x+2y)u) y"};
  {
    const EndoSeries composite = endo_compose(delta_u(-2, order), endo_inverse(delta_u(-1, order)));
    ++eq5.cases;
    if (!(endo_apply(composite, x) == expected)) fail(eq5, "got " + to_string(endo_apply(composite, x)));
  }

  CheckResult exp_identity{"Δ_u = exp(Σ (-1)^n ∂_n/n u^n)"};
  {
    const EndoSeries delta = delta_u(1, order);
    auto coeffs = [](int n) {
      Rational c(Integer(n % 2 == 0 ? 1 : -1), Integer(n));
      c.canonicalize();
      return c;
    };
    for (const char* text : {"x", "y", "xy", "xxy"}) {
      const WordSum w(Word::parse(text));
      ++exp_identity.cases;
      if (!(endo_apply(delta, w) == exp_derivation_series(coeffs, w, order)))
        fail(exp_identity, std::string("fails on ") + text);
    }
  }

  CheckResult eq6{"exp(Σ (2^n-1) ∂_n/n u^n)(x) = x + x u/(1-(x+2y)u) y"};
  {
    auto coeffs = [](int n) {
      Rational c = mersenne(n) / Rational(n);
      return c;
    };
    ++eq6.cases;
    const PolySeries got = exp_derivation_series(coeffs, x, order);
    if (!(got == expected)) fail(eq6, "got " + to_string(got));
  }

  CheckResult lambda_x{"λ_n(x) = x (x+2y)^{n-1} y"};
  for (int n = 1; n <= order; ++n) {
    ++lambda_x.cases;
    if (!(rtm::apply(ladder(n), x) == expected[n])) fail(lambda_x, "fails at n=" + std::to_string(n));
  }

  CheckResult log_lambda{"log Λ_u = Σ D(λ_n)/n u^n"};
  {
    const HSeries log = hseries_log(lambda_series(log_order));
    ++log_lambda.cases;
    if (!log[0].is_zero()) fail(log_lambda, "nonzero constant term");
    for (int n = 1; n <= log_order; ++n) {
      ++log_lambda.cases;
      if (!(log[n] == dynkin(ladder(n)) * Rational(Integer(1), Integer(n))))
        fail(log_lambda, "fails at n=" + std::to_string(n));
    }
  }

  return {eq5, exp_identity, eq6, lambda_x, log_lambda};
}

CheckResult verify_derivation_property(int max_n, int pairs, int max_total_weight, std::uint64_t seed) {
  CheckResult r{"D(λ_n) is a derivation"};
  std::mt19937_64 rng(seed);
  auto random_word = [&rng](int weight) {
    std::string letters;
    for (int i = 0; i < weight; ++i) letters.push_back(rng() & 1u ? 'y' : 'x');
    return Word::parse(letters);
  };
  std::vector<ForestSum> dynkins;
  for (int n = 1; n <= max_n; ++n) dynkins.push_back(dynkin(ladder(n)));

  for (int i = 0; i < pairs; ++i) {
    const int total = std::uniform_int_distribution<int>(2, std::max(2, max_total_weight))(rng);
    const int split = std::uniform_int_distribution<int>(1, total - 1)(rng);
    const WordSum v(random_word(split));
    const WordSum w(random_word(total - split));
    for (int n = 1; n <= max_n; ++n) {
      const ForestSum& d = dynkins[static_cast<std::size_t>(n) - 1];
      ++r.cases;
      const WordSum lhs = rtm::apply(d, v * w);
      const WordSum rhs = rtm::apply(d, v) * w + v * rtm::apply(d, w);
      if (!(lhs == rhs))
        fail(r, "fails at n=" + std::to_string(n) + ", v=" + v.begin()->first.text() + ", w=" + w.begin()->first.text());
    }
  }
  return r;
}

CheckResult verify_sign_property(int max_degree) {
  CheckResult r{"f(x) + f(y) = 0"};
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& f : enumerate_forests(d)) {
      ++r.cases;
      if (!(apply_letter(f, Letter::x) + apply_letter(f, Letter::y)).is_zero()) fail(r, "fails on " + f.key());
    }
  }
  return r;
}

CheckResult verify_vertex_power_dynkin(int max_n) {
  CheckResult r{"D(λ_1^n) = 0, n >= 2"};
  for (int n = 2; n <= max_n; ++n) {
    ++r.cases;
    const ForestSum d = dynkin(ladder_product(std::vector<int>(static_cast<std::size_t>(n), 1)));
    if (!d.is_zero()) fail(r, "fails at n=" + std::to_string(n) + ": got " + to_string(d));
  }
  return r;
}

}  // namespace rtm
