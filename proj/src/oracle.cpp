#include "coxeter/oracle.hpp"

#include <algorithm>
#include <map>

#include "coxeter/error.hpp"

namespace coxeter::oracle {

FiniteGroupTable FiniteGroupTable::enumerate(const CoxeterSystem& sys, std::size_t cap) {
  FiniteGroupTable t;
  t.sys_ = &sys;
  const std::size_t n = sys.rank();
  t.words_.push_back({});
  t.matrices_.push_back(Matrix::identity(sys.field(), n));
  t.index_.emplace(t.matrices_.back().key(), 0);

  for (std::size_t head = 0; head < t.words_.size(); ++head) {
    for (std::size_t s = 0; s < n; ++s) {
      Matrix m = t.matrices_[head] * sys.simple_reflection(static_cast<Generator>(s));
      auto key = m.key();
      if (t.index_.contains(key)) continue;
      if (t.words_.size() >= cap)
        throw Error(ErrorKind::GroupNotFinite, "more than " + std::to_string(cap) + " elements");
      auto word = t.words_[head];
      word.push_back(static_cast<Generator>(s));
      t.index_.emplace(std::move(key), t.words_.size());
      t.words_.push_back(std::move(word));
      t.matrices_.push_back(std::move(m));
    }
  }

  t.left_.assign(n, std::vector<std::size_t>(t.size()));
  t.right_.assign(n, std::vector<std::size_t>(t.size()));
  for (std::size_t s = 0; s < n; ++s) {
    const Matrix& r = sys.simple_reflection(static_cast<Generator>(s));
    for (std::size_t i = 0; i < t.size(); ++i) {
      t.left_[s][i] = t.index_.at((r * t.matrices_[i]).key());
      t.right_[s][i] = t.index_.at((t.matrices_[i] * r).key());
    }
  }
  return t;
}

std::optional<std::size_t> FiniteGroupTable::find(const Matrix& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroupTable::multiply(std::size_t i, std::size_t j) const {
  std::size_t x = j;
  const auto& w = words_[i];
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = left_multiply(*it, x);
  return x;
}

std::size_t FiniteGroupTable::inverse(std::size_t i) const {
  std::size_t x = 0;
  for (Generator s : words_[i]) x = left_multiply(s, x);
  return x;
}

std::vector<std::vector<std::size_t>> FiniteGroupTable::multiplication_table() const {
  std::vector<std::vector<std::size_t>> out(size(), std::vector<std::size_t>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = multiply(i, j);
  return out;
}

ElementSet FiniteGroupTable::special_subgroup(GeneratorSet subset) const {
  std::vector<bool> seen(size(), false);
  ElementSet queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Generator s : subset.members()) {
      std::size_t next = left_multiply(s, queue[head]);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<OracleParabolic> all_parabolics(const FiniteGroupTable& table, Execution exec) {
  const auto subsets = subsets_by_size(table.system().rank());
  const std::size_t order = table.size();
  std::vector<ElementSet> special;
  for (auto I : subsets) special.push_back(table.special_subgroup(I));

  // Conjugate sets for every (I, w), computed independently of each other.
  std::vector<ElementSet> conjugates(subsets.size() * order);
  parallel_for(conjugates.size(), exec, [&](std::size_t k) {
    const std::size_t i = k / order, w = k % order;
    ElementSet set;
    set.reserve(special[i].size());
    for (std::size_t u : special[i]) set.push_back(table.conjugate(w, u));
    std::sort(set.begin(), set.end());
    conjugates[k] = std::move(set);
  });

  std::vector<OracleParabolic> out;
  std::map<ElementSet, std::size_t> seen;
  for (std::size_t k = 0; k < conjugates.size(); ++k) {
    const std::size_t i = k / order, w = k % order;
    auto [it, fresh] = seen.emplace(conjugates[k], out.size());
    if (fresh) out.push_back(OracleParabolic{w, subsets[i], conjugates[k], {}});
    auto& p = out[it->second];
    if (std::pair(w, subsets[i].mask()) < std::pair(p.representative, p.subset.mask())) {
      p.representative = w;
      p.subset = subsets[i];
    }
    p.ranks.insert(subsets[i].size());
  }
  return out;
}

ElementSet brute_intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const ElementSet& small, const ElementSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

BrutePcResult brute_pc(const std::vector<OracleParabolic>& parabolics, const ElementSet& elements) {
  ElementSet sorted(elements);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::optional<ElementSet> meet;
  std::size_t min_rank = SIZE_MAX;
  for (const auto& p : parabolics) {
    if (!is_subset(sorted, p.elements)) continue;
    meet = meet ? brute_intersect(*meet, p.elements) : p.elements;
    min_rank = std::min(min_rank, *p.ranks.begin());
  }
  if (!meet) throw Error(ErrorKind::NotAParabolic, "no parabolic contains the set");

  std::optional<std::size_t> found;
  std::size_t minimal_count = 0;
  std::optional<std::size_t> minimal;
  for (std::size_t i = 0; i < parabolics.size(); ++i) {
    const auto& p = parabolics[i];
    if (p.elements == *meet) found = i;
    if (is_subset(sorted, p.elements) && p.ranks.count(min_rank)) {
      ++minimal_count;
      minimal = i;
    }
  }
  if (!found) throw Error(ErrorKind::NotAParabolic, "intersection of parabolics is not parabolic");
  return BrutePcResult{*found, minimal_count == 1, minimal_count == 1 && *minimal == *found};
}

}  // namespace coxeter::oracle
