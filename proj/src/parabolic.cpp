#include "coxeter/parabolic.hpp"

#include <cassert>

#include "coxeter/error.hpp"

namespace coxeter {

Parabolic Parabolic::make(const GroupElement& w, GeneratorSet subset) {
  const CoxeterSystem& sys = w.system();
  if (!subset.is_subset_of(sys.all_generators()))
    throw Error(ErrorKind::UnknownGenerator, "subset names a generator outside S");
  GroupElement rep = coset_minimal(w, subset);
  DualPoint base = sys.act_dual(rep, fundamental_point(sys, subset));
  return Parabolic(std::move(rep), subset, std::move(base));
}

std::vector<GroupElement> Parabolic::generators() const {
  const CoxeterSystem& sys = system();
  std::vector<GroupElement> out;
  for (Generator s : subset_.members()) out.push_back(sys.conjugate(w_, sys.generator(s)));
  return out;
}

Parabolic stabilizer(const CoxeterSystem& sys, const DualPoint& f, std::size_t step_cap) {
  auto cell = locate(sys, f, step_cap);
  return Parabolic::make(cell.w, cell.subset);
}

bool fixes(const GroupElement& g, const DualPoint& f) { return g.system().act_dual(g, f) == f; }

bool contains_element_by_word(const Parabolic& p, const GroupElement& g) {
  const CoxeterSystem& sys = p.system();
  sys.check_same(g);
  GroupElement w = p.representative();
  std::vector<Generator> letters(w.word().rbegin(), w.word().rend());
  letters.insert(letters.end(), g.word().begin(), g.word().end());
  letters.insert(letters.end(), w.word().begin(), w.word().end());
  GroupElement core = sys.normalize(letters);
  for (Generator s : core.word())
    if (!p.subset().contains(s)) return false;
  return true;
}

bool contains_element(const Parabolic& p, const GroupElement& g) {
  p.system().check_same(g);
  bool by_point = fixes(g, p.base_point());
  assert(by_point == contains_element_by_word(p, g));
  return by_point;
}

bool contains(const Parabolic& outer, const Parabolic& inner) {
  if (&outer.system() != &inner.system()) throw Error(ErrorKind::MixedSystems, "parabolics from different systems");
  for (const auto& g : inner.generators())
    if (!fixes(g, outer.base_point())) return false;
  return true;
}

bool equals(const Parabolic& a, const Parabolic& b) { return contains(a, b) && contains(b, a); }

std::vector<Rational> segment_parameters(std::size_t count) {
  std::vector<Rational> out;
  for (unsigned p = 2; out.size() < count; ++p) {
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime) continue;
    for (unsigned k = 1; k < p && out.size() < count; ++k) out.emplace_back(k, p);
  }
  return out;
}

Parabolic intersect(const Parabolic& a, const Parabolic& b, std::size_t retry_cap) {
  if (contains(a, b)) return b;
  if (contains(b, a)) return a;
  const CoxeterSystem& sys = a.system();
  // a ∩ b fixes the whole segment, so every sampled stabilizer contains it;
  // all but finitely many samples are stabilized by exactly a ∩ b.
  for (const auto& t : segment_parameters(retry_cap)) {
    Parabolic candidate = stabilizer(sys, interpolate(a.base_point(), b.base_point(), t));
    bool inside = true;
    for (const auto& g : candidate.generators()) {
      if (!fixes(g, a.base_point()) || !fixes(g, b.base_point())) {
        inside = false;
        break;
      }
    }
    if (inside) return candidate;
  }
  throw Error(ErrorKind::RetryCapExceeded, "no segment sample isolated the intersection");
}

std::optional<ConjugacyWitness> conjugacy_normalize(GeneratorSet target, GeneratorSet source, const GroupElement& w) {
  const CoxeterSystem& sys = w.system();
  GroupElement w0 = coset_minimal(w, source);
  if (target.size() != source.size()) return std::nullopt;
  ConjugacyWitness witness{w0, {}};
  GeneratorSet hit;
  for (Generator t : source.members()) {
    Vector image = w0.matrix().column(static_cast<std::size_t>(t));
    std::optional<Generator> simple;
    for (Generator s : target.members()) {
      if (image == sys.simple_root(s)) {
        simple = s;
        break;
      }
    }
    if (!simple || hit.contains(*simple)) return std::nullopt;
    hit.insert(*simple);
    witness.mapping.emplace_back(t, *simple);
  }
  return witness;
}

}  // namespace coxeter
