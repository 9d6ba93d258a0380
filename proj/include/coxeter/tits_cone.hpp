#pragma once

#include <cstddef>

#include "coxeter/system.hpp"

namespace coxeter {

/// A point of V* in the basis dual to the simple roots, so coordinate s is
/// the pairing <f, alpha_s>.
using DualPoint = Vector;

inline constexpr std::size_t kDefaultStepCap = 10000;

/// The cell w(C_I) holding a point f, with f = w(dominant).
struct CellLocation {
  GroupElement w;
  GeneratorSet subset;
  DualPoint dominant;
};

/// <f, v> for f in V*, v in V.
FieldScalar pairing(const DualPoint& f, const Vector& v);

/// Point of C_I with pairing 0 on I and 1 elsewhere.
DualPoint fundamental_point(const CoxeterSystem& sys, GeneratorSet subset);

/// (1 - t) a + t b.
DualPoint interpolate(const DualPoint& a, const DualPoint& b, const Rational& t);

/// Moves f into the closed fundamental chamber by repeatedly applying the
/// smallest generator pairing negatively with it. Throws StepCapExceeded when
/// the cap is reached, which happens for points outside the Tits cone.
CellLocation locate(const CoxeterSystem& sys, const DualPoint& f, std::size_t step_cap = kDefaultStepCap);

}  // namespace coxeter
