#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/polynomial.hpp"

namespace coxeter {

/// A Coxeter label m_st: 1 on the diagonal, 2, 3, ... off it, or infinity.
using Label = int;
inline constexpr Label kInfinity = 0;

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;
};

class FieldScalar;

/// The real number field Q(theta), theta = 2cos(pi/L). Immutable after
/// construction; scalars hold a non-owning pointer to their context, so a
/// context must outlive every scalar built from it.
class FieldContext {
 public:
  /// Builds the field for the given conductor L >= 1.
  explicit FieldContext(unsigned conductor);

  unsigned conductor() const { return conductor_; }
  std::size_t degree() const { return static_cast<std::size_t>(minpoly_.degree()); }
  const RationalPolynomial& minpoly() const { return minpoly_; }
  const RationalInterval& isolating_interval() const { return ladder_.front(); }

  FieldScalar zero() const;
  FieldScalar one() const;
  FieldScalar from_rational(const Rational& q) const;
  FieldScalar theta() const;
  /// Element given by its coefficients in powers of theta; reduced on entry.
  FieldScalar from_coefficients(std::vector<Rational> coeffs) const;
  /// Reduces an arbitrary rational polynomial in theta.
  FieldScalar reduce(const RationalPolynomial& p) const;

  /// Nested enclosures of theta, coarsest first. Exposed for tests.
  const std::vector<RationalInterval>& enclosures() const { return ladder_; }

 private:
  friend class FieldScalar;
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);

  void reduce_in_place(std::vector<Rational>& wide) const;
  int sign_of(std::span<const Rational> coeffs) const;

  unsigned conductor_;
  RationalPolynomial minpoly_;
  // theta^(d + k) expressed in the basis 1, theta, ..., theta^(d-1).
  std::vector<std::vector<Rational>> high_powers_;
  std::vector<RationalInterval> ladder_;
};

/// Exact element of Q(theta), stored as a polynomial in theta of degree
/// below deg(minpoly). The representation is canonical, so equality is
/// coefficient equality.
class FieldScalar {
 public:
  FieldScalar() = default;

  const FieldContext* context() const { return ctx_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Exact sign of the real number represented: -1, 0 or +1.
  int sign() const;

  FieldScalar& operator+=(const FieldScalar& b);
  FieldScalar& operator-=(const FieldScalar& b);
  FieldScalar& operator*=(const FieldScalar& b);
  FieldScalar& operator/=(const FieldScalar& b);
  FieldScalar operator-() const;
  FieldScalar inverse() const;
  /// Multiplies by a rational without a full field product.
  FieldScalar scaled(const Rational& q) const;

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }
  friend bool operator==(const FieldScalar& a, const FieldScalar& b);

  std::size_t hash() const;
  /// Human-readable form, e.g. "1/2", "-1 + 2*θ^2".
  std::string to_string() const;
  /// Floating approximation for display only; never used in decisions.
  double approx() const;

 private:
  friend class FieldContext;
  FieldScalar(const FieldContext* ctx, std::vector<Rational> coeffs)
      : ctx_(ctx), coeffs_(std::move(coeffs)) {}
  void check_same(const FieldScalar& b) const;

  const FieldContext* ctx_ = nullptr;
  std::vector<Rational> coeffs_;
};

/// Parses an exact element written as a sum of terms `c`, `c*θ^k`, `θ^k`,
/// with c an integer or fraction; `theta` may replace `θ`. Decimals are
/// rejected. Throws ParseError.
FieldScalar parse_scalar(const FieldContext& field, std::string_view text);

/// Conductor L of a Coxeter matrix: lcm of its finite labels >= 3, or 1.
unsigned field_conductor(std::span<const Label> labels);

/// cos(pi/m) in the given field; m = 1 gives -1 and m = kInfinity gives 1
/// (the bilinear form negates). Throws IncompatibleOrder if m does not
/// divide the conductor.
FieldScalar cos_pi_over(const FieldContext& field, Label m);

}  // namespace coxeter
