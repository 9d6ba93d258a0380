#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "coxeter/oracle.hpp"
#include "coxeter/parabolic.hpp"

namespace coxeter {

/// Elements grouped by length: ball[k] holds the elements of length k in
/// ShortLex order, for k = 0 .. radius.
std::vector<std::vector<GroupElement>> element_ball(const CoxeterSystem& sys, std::size_t radius);

struct Finiteness {
  bool finite;
  std::size_t order;  // |W| when finite, else the count at which BFS stopped
  std::size_t longest = 0;
};

/// BFS over normal forms; finite iff the closure is reached with at most
/// `cap` elements.
Finiteness is_finite(const CoxeterSystem& sys, std::size_t cap);

/// Exact test of the Gram matrix; W is finite iff it is positive definite.
bool form_is_positive_definite(const CoxeterSystem& sys);

struct ClosureQuery {
  std::vector<GroupElement> elements;
  /// Bound on l(w) for candidate representatives; nullopt asks for an
  /// exhaustive search and requires a finite group.
  std::optional<std::size_t> radius;
};

enum class ClosureStatus { Exact, RadiusLimited };

constexpr std::string_view name(ClosureStatus s) {
  return s == ClosureStatus::Exact ? "Exact" : "RadiusLimited";
}

struct ClosureResult {
  Parabolic closure;
  ClosureStatus status;
  /// Candidates that strictly shrank the running intersection, in order.
  std::vector<Parabolic> refinements;
};

/// A candidate w W_I w^{-1} with w shortest in w W_I.
struct Candidate {
  GroupElement w;
  GeneratorSet subset;
};

/// Candidates of one rank from the ball, ordered by w (ShortLex), then I.
std::vector<Candidate> candidates_of_rank(const std::vector<std::vector<GroupElement>>& ball, std::size_t rank,
                                          std::size_t radius);

/// Flags, per candidate, whether every element fixes w(fundamental_point(I)).
std::vector<char> scan_candidates(const std::vector<Candidate>& candidates, const std::vector<GroupElement>& elements,
                                  Execution exec);

/// Parabolic closure of a finite set. Candidates are scanned rank by rank;
/// containing candidates are folded into a running intersection in
/// canonical order. When the search is exhaustive the fold stops at the
/// first rank holding a container, which is then Pc(A).
ClosureResult pc(const CoxeterSystem& sys, const ClosureQuery& query, Execution exec = Execution::Parallel);

/// Pc(A) from the literal definition over the oracle's explicit subgroup
/// list. Throws NotAParabolic if the minimal-rank characterisation fails.
Parabolic pc_oracle_finite(const oracle::FiniteGroupTable& table, const std::vector<oracle::OracleParabolic>& parabolics,
                           const std::vector<GroupElement>& elements);

}  // namespace coxeter
