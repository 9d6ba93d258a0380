#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coxeter/tits_cone.hpp"

namespace coxeter {

/// The parabolic subgroup w W_I w^{-1}, with w the shortest element of the
/// coset w W_I. The subgroup is the exact stabilizer of `base_point()`.
///
/// Distinct (w, I) pairs may denote the same subgroup (the normalizer of W_I
/// can be larger than W_I), so compare with `equals`, not `==`.
class Parabolic {
 public:
  /// Replaces w by the shortest element of w W_I.
  static Parabolic make(const GroupElement& w, GeneratorSet subset);

  const GroupElement& representative() const { return w_; }
  GeneratorSet subset() const { return subset_; }
  std::size_t rank() const { return subset_.size(); }
  const DualPoint& base_point() const { return base_; }
  const CoxeterSystem& system() const { return w_.system(); }

  /// The reflections w s w^{-1}, s in I.
  std::vector<GroupElement> generators() const;

  /// Same representative and subset (a stronger relation than `equals`).
  friend bool operator==(const Parabolic& a, const Parabolic& b) {
    return a.w_ == b.w_ && a.subset_ == b.subset_;
  }

 private:
  Parabolic(GroupElement w, GeneratorSet subset, DualPoint base)
      : w_(std::move(w)), subset_(subset), base_(std::move(base)) {}

  GroupElement w_;
  GeneratorSet subset_;
  DualPoint base_;
};

/// Stabilizer of a point of the Tits cone, via `locate`.
Parabolic stabilizer(const CoxeterSystem& sys, const DualPoint& f, std::size_t step_cap = kDefaultStepCap);

bool fixes(const GroupElement& g, const DualPoint& f);

/// g in P, decided by g fixing the base point.
bool contains_element(const Parabolic& p, const GroupElement& g);
/// g in P, decided by the normal form of w^{-1} g w using only letters of I.
bool contains_element_by_word(const Parabolic& p, const GroupElement& g);

/// inner is a subgroup of outer.
bool contains(const Parabolic& outer, const Parabolic& inner);
bool equals(const Parabolic& a, const Parabolic& b);

inline constexpr std::size_t kDefaultRetryCap = 64;

/// The parameters 1/2, 1/3, 2/3, 1/5, ..., (p-1)/p over successive primes p.
std::vector<Rational> segment_parameters(std::size_t count);

/// P1 ∩ P2 as a parabolic subgroup: walk the segment between the two base
/// points and accept the first sampled point whose stabilizer fixes both
/// ends. Throws RetryCapExceeded after `retry_cap` samples.
Parabolic intersect(const Parabolic& a, const Parabolic& b, std::size_t retry_cap = kDefaultRetryCap);

/// Evidence that W_I = w W_J w^{-1}: w0 is the shortest element of w W_J and
/// maps each alpha_t (t in J) to alpha_{mapping(t)}.
struct ConjugacyWitness {
  GroupElement w0;
  std::vector<std::pair<Generator, Generator>> mapping;  // (t in J, s in I)
};

/// Witness if w0(Delta_J) = Delta_I exactly, nullopt otherwise.
std::optional<ConjugacyWitness> conjugacy_normalize(GeneratorSet target, GeneratorSet source, const GroupElement& w);

}  // namespace coxeter
