#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace coxeter {

using Rational = mpq_class;

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward. The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<long> coeffs);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial x();

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& at) const;
  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; `divisor` must be nonzero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& dividend,
                                                         const RationalPolynomial& divisor);

/// Monic greatest common divisor (zero if both inputs are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Squarefree part p / gcd(p, p'), made monic.
RationalPolynomial squarefree_part(const RationalPolynomial& p);

/// Number of distinct real roots of `p` in the half-open interval (lo, hi],
/// counted with a Sturm sequence.
int count_real_roots(const RationalPolynomial& p, const Rational& lo, const Rational& hi);

/// D_k with D_k(2cos x) = 2cos(kx): D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
RationalPolynomial chebyshev_double_cosine(unsigned k);

}  // namespace coxeter
