#pragma once

#include <vector>

#include "rtm/forest.hpp"

namespace rtm {

/// Connes-Kreimer coproduct. For a tree t = B+(f):
///   Δ(t) = t ⊗ I + (id ⊗ B+)(Δ(f)),
/// extended multiplicatively over forests and linearly over sums.
/// Results are memoized per forest key (thread-local).
TensorSum coproduct(const Forest& f);
TensorSum coproduct(const ForestSum& a);

/// Coefficient of the empty forest.
Rational counit(const ForestSum& a);
inline Rational counit(const Forest& f) { return f.empty() ? Rational(1) : Rational(0); }

/// Hopf antipode, computed from the reduced coproduct of each tree,
///   S(t) = -t - Σ' S(t') t'',
/// and extended multiplicatively. Memoized per tree key (thread-local).
ForestSum antipode(const Forest& f);
ForestSum antipode(const ForestSum& a);

/// Y(f) = deg(f) f.
ForestSum grading(const ForestSum& a);

/// D = m ∘ (S ⊗ Y) ∘ Δ.
ForestSum dynkin(const Forest& f);
ForestSum dynkin(const ForestSum& a);

/// Multiplication m: H ⊗ H -> H.
ForestSum multiply(const TensorSum& t);
/// Swap of tensor factors.
TensorSum swap_factors(const TensorSum& t);

/// Branchless tree with m vertices; ladder(0) is the unit.
Forest ladder(int m);
/// λ_{m_1} ... λ_{m_d} as a forest.
Forest ladder_product(const std::vector<int>& heights);

/// Ordered compositions of n into positive parts, in lexicographic order.
/// compositions(0) is {{}}.
std::vector<std::vector<int>> compositions(int n);

/// Drops the memo tables of the calling thread.
void clear_hopf_caches();

}  // namespace rtm
