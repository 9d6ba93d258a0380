#pragma once

#include <cstddef>
#include <vector>

#include "coxeter/system.hpp"

namespace coxeter {

/// A root w(alpha_s) in the simple-root basis.
struct Root {
  Vector coords;

  GeneratorSet support() const;
  /// +1 for positive roots, -1 for negative ones.
  int sign() const { return CoxeterSystem::root_sign(coords); }
  bool is_positive() const { return sign() > 0; }
  friend bool operator==(const Root&, const Root&) = default;
};

/// A reflection t_alpha together with its positive root.
struct Reflection {
  GroupElement element;
  Root root;
};

/// Wraps coordinates as a root, checking the sign dichotomy. Throws
/// RootSignViolation on mixed signs or the zero vector.
Root checked_root(Vector coords);

/// w(alpha_s).
Root root_of(const GroupElement& w, Generator s);

/// Matrix of t_alpha: v -> v - 2 B(alpha, v) alpha.
Matrix reflection_matrix(const CoxeterSystem& sys, const Vector& alpha);

/// Reflection attached to a positive root. Throws NotARoot if the vector is
/// not a positive unit vector whose reflection lies in W.
Reflection reflection_of_root(const CoxeterSystem& sys, const Root& alpha);

/// Positive roots reachable from {alpha_s : s in subset} by at most `depth`
/// simple reflections from the subset, in breadth-first order. Depth d bounds
/// the reflection length by 2d + 1.
std::vector<Root> enumerate_roots(const CoxeterSystem& sys, std::size_t depth, GeneratorSet subset);
std::vector<Root> enumerate_roots(const CoxeterSystem& sys, std::size_t depth);

/// phi = u(alpha_target), with every letter of u in the subset.
struct RootDescent {
  std::vector<Generator> prefix;
  Generator target;
};

/// Walks a positive root supported in `subset` down to a simple root by
/// reflecting in the smallest s with B(phi, alpha_s) > 0; each step shortens
/// t_phi by two. Throws SupportNotContained, or NotARoot if `step_cap` is hit.
RootDescent descend_root(const CoxeterSystem& sys, const Root& phi, GeneratorSet subset,
                         std::size_t step_cap = 100000);

}  // namespace coxeter
