#include "coxeter/roots.hpp"

#include <unordered_set>

#include "coxeter/error.hpp"

namespace coxeter {

GeneratorSet Root::support() const {
  GeneratorSet out;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out.insert(static_cast<Generator>(i));
  return out;
}

Root checked_root(Vector coords) {
  bool pos = false, neg = false;
  for (const auto& c : coords) {
    int s = c.sign();
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  if (pos == neg) throw Error(ErrorKind::RootSignViolation, pos ? "root has mixed signs" : "zero vector is not a root");
  return Root{std::move(coords)};
}

Root root_of(const GroupElement& w, Generator s) {
  w.system().check_generator(s);
  return checked_root(w.matrix().column(static_cast<std::size_t>(s)));
}

Matrix reflection_matrix(const CoxeterSystem& sys, const Vector& alpha) {
  const std::size_t n = sys.rank();
  if (alpha.size() != n) throw Error(ErrorKind::DimensionMismatch, "root length differs from rank");
  // B(alpha, alpha_c) for each column c.
  Vector pair = sys.gram() * alpha;
  Matrix t = Matrix::identity(sys.field(), n);
  for (std::size_t r = 0; r < n; ++r) {
    if (alpha[r].is_zero()) continue;
    FieldScalar a2 = alpha[r].scaled(2);
    for (std::size_t c = 0; c < n; ++c)
      if (!pair[c].is_zero()) t(r, c) -= a2 * pair[c];
  }
  return t;
}

Reflection reflection_of_root(const CoxeterSystem& sys, const Root& alpha) {
  Root root = checked_root(alpha.coords);
  if (!root.is_positive()) throw Error(ErrorKind::NotARoot, "reflections are indexed by positive roots");
  if (!(sys.form(root.coords, root.coords) == sys.field().one()))
    throw Error(ErrorKind::NotARoot, "vector does not have unit norm");

  // t_alpha is an involution, so its matrix is also the matrix of its inverse.
  auto element = sys.from_inverse_matrix(reflection_matrix(sys, root.coords), 100000);
  if (!element) throw Error(ErrorKind::NotARoot, "reflection matrix does not lie in W");

  auto descent = descend_root(sys, root, sys.all_generators());
  GroupElement u = sys.normalize(descent.prefix);
  if (!(sys.act(u, sys.simple_root(descent.target)) == root.coords) ||
      !(sys.conjugate(u, sys.generator(descent.target)) == *element))
    throw Error(ErrorKind::NotARoot, "recovered reflection does not reproduce the root");
  return Reflection{std::move(*element), std::move(root)};
}

std::vector<Root> enumerate_roots(const CoxeterSystem& sys, std::size_t depth, GeneratorSet subset) {
  std::vector<Root> out;
  std::unordered_set<Vector, VectorHash> seen;
  std::vector<std::size_t> frontier;
  for (Generator s : subset.members()) {
    out.push_back(Root{sys.simple_root(s)});
    seen.insert(out.back().coords);
    frontier.push_back(out.size() - 1);
  }
  for (std::size_t layer = 0; layer < depth && !frontier.empty(); ++layer) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (Generator s : subset.members()) {
        Vector v = out[idx].coords;
        sys.apply_simple(s, v);
        if (CoxeterSystem::root_sign(v) < 0) continue;
        if (!seen.insert(v).second) continue;
        out.push_back(checked_root(std::move(v)));
        next.push_back(out.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Root> enumerate_roots(const CoxeterSystem& sys, std::size_t depth) {
  return enumerate_roots(sys, depth, sys.all_generators());
}

RootDescent descend_root(const CoxeterSystem& sys, const Root& phi, GeneratorSet subset, std::size_t step_cap) {
  if (phi.coords.size() != sys.rank()) throw Error(ErrorKind::DimensionMismatch, "root length differs from rank");
  if (!phi.support().is_subset_of(subset))
    throw Error(ErrorKind::SupportNotContained, "root support is not inside the generator subset");
  if (!phi.is_positive()) throw Error(ErrorKind::NotARoot, "descent starts from a positive root");

  RootDescent out;
  Vector cur = phi.coords;
  const FieldScalar one = sys.field().one();
  for (std::size_t step = 0;; ++step) {
    auto support = Root{cur}.support();
    if (support.size() == 1) {
      Generator s = support.members().front();
      if (!(cur[static_cast<std::size_t>(s)] == one)) throw Error(ErrorKind::NotARoot, "descent ended off a simple root");
      out.target = s;
      return out;
    }
    if (step >= step_cap) throw Error(ErrorKind::NotARoot, "descent exceeded its step cap");
    Vector pairing = sys.gram() * cur;
    Generator pick = -1;
    for (Generator s : subset.members()) {
      if (pairing[static_cast<std::size_t>(s)].sign() > 0) {
        pick = s;
        break;
      }
    }
    if (pick < 0) throw Error(ErrorKind::NotARoot, "no simple root pairs positively");
    sys.apply_simple(pick, cur);
    if (CoxeterSystem::root_sign(cur) <= 0) throw Error(ErrorKind::NotARoot, "descent left the positive roots");
    out.prefix.push_back(pick);
  }
}

}  // namespace coxeter
