#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/parallel.hpp"
#include "coxeter/system.hpp"

namespace coxeter::oracle {

/// Sorted element indices into a FiniteGroupTable.
using ElementSet = std::vector<std::size_t>;

/// Every element of a finite Coxeter group, found by breadth-first search
/// over generator products with duplicates detected by exact matrix
/// equality. Nothing here uses root signs or the Tits cone, so the table is
/// independent ground truth for the descent-based machinery.
class FiniteGroupTable {
 public:
  /// Throws GroupNotFinite if more than `cap` elements appear.
  static FiniteGroupTable enumerate(const CoxeterSystem& sys, std::size_t cap);

  const CoxeterSystem& system() const { return *sys_; }
  std::size_t size() const { return words_.size(); }
  /// Index 0 is the identity. Words are BFS discovery words, which are the
  /// ShortLex-least words because layers are scanned in ShortLex order.
  const std::vector<Generator>& word(std::size_t i) const { return words_[i]; }
  std::size_t length(std::size_t i) const { return words_[i].size(); }
  const Matrix& matrix(std::size_t i) const { return matrices_[i]; }
  std::optional<std::size_t> find(const Matrix& m) const;

  std::size_t left_multiply(Generator s, std::size_t i) const { return left_[static_cast<std::size_t>(s)][i]; }
  std::size_t right_multiply(std::size_t i, Generator s) const { return right_[static_cast<std::size_t>(s)][i]; }
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;
  std::size_t conjugate(std::size_t w, std::size_t u) const { return multiply(multiply(w, u), inverse(w)); }

  /// Full |W| x |W| table, built on first request by the caller.
  std::vector<std::vector<std::size_t>> multiplication_table() const;

  /// Elements of W_I: closure of the identity under the generators in I.
  ElementSet special_subgroup(GeneratorSet subset) const;

 private:
  const CoxeterSystem* sys_ = nullptr;
  std::vector<std::vector<Generator>> words_;
  std::vector<Matrix> matrices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::vector<std::size_t>> right_;
};

/// One parabolic subgroup as an explicit element set, with the least pair
/// (w, I) producing it (w first in table order, then I by mask) and every
/// rank |I| under which it appeared.
struct OracleParabolic {
  std::size_t representative;
  GeneratorSet subset;
  ElementSet elements;
  std::set<std::size_t> ranks;
};

/// All distinct sets {w u w^{-1} : u in W_I}, in order of first appearance
/// over (I by size, w in table order).
std::vector<OracleParabolic> all_parabolics(const FiniteGroupTable& table, Execution exec = Execution::Parallel);

ElementSet brute_intersect(const ElementSet& a, const ElementSet& b);
bool is_subset(const ElementSet& small, const ElementSet& big);

struct BrutePcResult {
  std::size_t index;            // into the parabolic list
  bool unique_minimal_rank;     // exactly one containing parabolic of least rank
  bool minimal_is_intersection; // and it equals the intersection
};

/// Intersection of all parabolic sets containing A, matched back to the
/// list. Throws NotAParabolic if the intersection is not listed.
BrutePcResult brute_pc(const std::vector<OracleParabolic>& parabolics, const ElementSet& elements);

}  // namespace coxeter::oracle
