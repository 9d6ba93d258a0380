#include "coxeter/closure.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "coxeter/error.hpp"

namespace coxeter {

std::vector<std::vector<GroupElement>> element_ball(const CoxeterSystem& sys, std::size_t radius) {
  std::vector<std::vector<GroupElement>> ball{{sys.identity()}};
  for (std::size_t k = 0; k < radius; ++k) {
    std::set<std::vector<Generator>> seen;
    std::vector<GroupElement> next;
    for (const auto& w : ball.back()) {
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        auto g = static_cast<Generator>(s);
        if (sys.is_right_descent(w, g)) continue;
        GroupElement ws = sys.mult(w, sys.generator(g));
        if (seen.insert(ws.word()).second) next.push_back(std::move(ws));
      }
    }
    std::sort(next.begin(), next.end());
    if (next.empty()) break;
    ball.push_back(std::move(next));
  }
  return ball;
}

Finiteness is_finite(const CoxeterSystem& sys, std::size_t cap) {
  // Layer k+1 is {ws : w in layer k, l(ws) > l(w)}; elements of different
  // lengths are distinct, so deduplicating within a layer suffices.
  std::vector<Matrix> layer{Matrix::identity(sys.field(), sys.rank())};
  std::size_t count = 1;
  std::size_t longest = 0;
  for (;;) {
    std::unordered_set<std::string> seen;
    std::vector<Matrix> next;
    for (const auto& w : layer) {
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        if (CoxeterSystem::root_sign(w.column(s)) < 0) continue;
        Matrix ws = w * sys.simple_reflection(static_cast<Generator>(s));
        if (seen.insert(ws.key()).second) next.push_back(std::move(ws));
      }
    }
    if (next.empty()) return {true, count, longest};
    count += next.size();
    ++longest;
    if (count > cap) return {false, count, longest};
    layer = std::move(next);
  }
}

bool form_is_positive_definite(const CoxeterSystem& sys) {
  // Symmetric Gaussian elimination: every pivot must be positive.
  Matrix a = sys.gram();
  const std::size_t n = sys.rank();
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).sign() <= 0) return false;
    const FieldScalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const FieldScalar factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return true;
}

std::vector<Candidate> candidates_of_rank(const std::vector<std::vector<GroupElement>>& ball, std::size_t rank,
                                          std::size_t radius) {
  std::vector<Candidate> out;
  if (ball.empty()) return out;
  const CoxeterSystem& sys = ball.front().front().system();
  std::vector<GeneratorSet> subsets;
  for (auto I : subsets_by_size(sys.rank()))
    if (I.size() == rank) subsets.push_back(I);
  for (std::size_t len = 0; len <= radius && len < ball.size(); ++len) {
    for (const auto& w : ball[len]) {
      for (auto I : subsets) {
        bool minimal = true;
        for (Generator t : I.members()) minimal = minimal && !sys.is_right_descent(w, t);
        if (minimal) out.push_back(Candidate{w, I});
      }
    }
  }
  return out;
}

std::vector<char> scan_candidates(const std::vector<Candidate>& candidates, const std::vector<GroupElement>& elements,
                                  Execution exec) {
  std::vector<char> hit(candidates.size(), 0);
  parallel_for(candidates.size(), exec, [&](std::size_t i) {
    const auto& c = candidates[i];
    const CoxeterSystem& sys = c.w.system();
    DualPoint point = sys.act_dual(c.w, fundamental_point(sys, c.subset));
    bool all = true;
    for (const auto& a : elements) {
      if (!fixes(a, point)) {
        all = false;
        break;
      }
    }
    hit[i] = all ? 1 : 0;
  });
  return hit;
}

ClosureResult pc(const CoxeterSystem& sys, const ClosureQuery& query, Execution exec) {
  for (const auto& a : query.elements) sys.check_same(a);
  std::size_t radius = 0;
  if (query.radius) {
    radius = *query.radius;
  } else {
    if (!form_is_positive_definite(sys))
      throw Error(ErrorKind::GroupNotFinite, "exhaustive closure needs a finite group");
    auto fin = is_finite(sys, 1'000'000);
    if (!fin.finite) throw Error(ErrorKind::GroupNotFinite, "exhaustive closure needs a finite group");
    radius = fin.longest;
  }

  // One layer past the radius tells whether the ball already is all of W.
  auto ball = element_ball(sys, radius + 1);
  const ClosureStatus status = ball.size() <= radius + 1 ? ClosureStatus::Exact : ClosureStatus::RadiusLimited;

  Parabolic running = Parabolic::make(sys.identity(), sys.all_generators());
  std::vector<Parabolic> refinements;
  std::optional<std::size_t> minimal_rank;
  for (std::size_t r = 0; r <= sys.rank(); ++r) {
    auto candidates = candidates_of_rank(ball, r, radius);
    auto hit = scan_candidates(candidates, query.elements, exec);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!hit[i]) continue;
      if (!minimal_rank) minimal_rank = r;
      Parabolic c = Parabolic::make(candidates[i].w, candidates[i].subset);
      if (!contains(c, running)) {
        running = intersect(running, c);
        refinements.push_back(std::move(c));
      }
      if (status == ClosureStatus::Exact && running.rank() == *minimal_rank) break;
    }
    if (status == ClosureStatus::Exact && minimal_rank) break;
  }
  return ClosureResult{std::move(running), status, std::move(refinements)};
}

Parabolic pc_oracle_finite(const oracle::FiniteGroupTable& table, const std::vector<oracle::OracleParabolic>& parabolics,
                           const std::vector<GroupElement>& elements) {
  const CoxeterSystem& sys = table.system();
  oracle::ElementSet indices;
  for (const auto& a : elements) {
    sys.check_same(a);
    auto idx = table.find(a.matrix());
    if (!idx) throw Error(ErrorKind::GroupNotFinite, "element missing from the group table");
    indices.push_back(*idx);
  }
  auto result = oracle::brute_pc(parabolics, indices);
  if (!result.unique_minimal_rank || !result.minimal_is_intersection)
    throw Error(ErrorKind::NotAParabolic, "closure is not the unique minimal-rank parabolic containing the set");
  const auto& p = parabolics[result.index];
  return Parabolic::make(sys.normalize(table.word(p.representative)), p.subset);
}

}  // namespace coxeter
