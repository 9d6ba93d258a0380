#include "coxeter/tits_cone.hpp"

#include "coxeter/error.hpp"

namespace coxeter {

FieldScalar pairing(const DualPoint& f, const Vector& v) { return dot(f, v); }

DualPoint fundamental_point(const CoxeterSystem& sys, GeneratorSet subset) {
  DualPoint f(sys.rank(), sys.field().one());
  for (Generator s : subset.members()) f[static_cast<std::size_t>(s)] = sys.field().zero();
  return f;
}

DualPoint interpolate(const DualPoint& a, const DualPoint& b, const Rational& t) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "interpolating points of different rank");
  DualPoint out;
  out.reserve(a.size());
  const Rational u = 1 - t;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i].scaled(u) + b[i].scaled(t));
  return out;
}

CellLocation locate(const CoxeterSystem& sys, const DualPoint& f, std::size_t step_cap) {
  if (f.size() != sys.rank()) throw Error(ErrorKind::DimensionMismatch, "dual point length differs from rank");
  DualPoint cur = f;
  std::vector<Generator> letters;
  for (;;) {
    Generator pick = -1;
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (cur[s].sign() < 0) {
        pick = static_cast<Generator>(s);
        break;
      }
    }
    if (pick < 0) break;
    if (letters.size() >= step_cap)
      throw Error(ErrorKind::StepCapExceeded, "point did not reach the fundamental chamber");
    sys.apply_simple_dual(pick, cur);
    letters.push_back(pick);
  }
  // cur = s_k ... s_1 f, hence f = s_1 ... s_k cur.
  GeneratorSet subset;
  for (std::size_t s = 0; s < cur.size(); ++s)
    if (cur[s].is_zero()) subset.insert(static_cast<Generator>(s));
  return CellLocation{sys.normalize(letters), subset, std::move(cur)};
}

}  // namespace coxeter
