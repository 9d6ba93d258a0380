#include "coxeter/scalar.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "coxeter/error.hpp"

namespace coxeter {

namespace {

// Each ladder level is this many bisections finer than the previous one.
constexpr int kBisectionsPerLevel = 32;
constexpr int kLadderLevels = 8;

int moebius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Minimal polynomial of 2cos(2*pi/d): Moebius inversion over the radicals of
// D_e(x) - 2, whose roots are exactly 2cos(2*pi*j/e).
RationalPolynomial real_cyclotomic(unsigned d) {
  RationalPolynomial num({1});
  RationalPolynomial den({1});
  for (unsigned e : divisors(d)) {
    int mu = moebius(d / e);
    if (mu == 0) continue;
    auto rad = squarefree_part(chebyshev_double_cosine(e) - RationalPolynomial({2}));
    if (mu > 0)
      num = num * rad;
    else
      den = den * rad;
  }
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::logic_error("real cyclotomic quotient is not exact");
  return q.monic();
}

Rational midpoint(const RationalInterval& iv) { return (iv.lo + iv.hi) / 2; }

// One bisection step keeping the unique root of `p` inside `iv`.
void bisect(const RationalPolynomial& p, RationalInterval& iv) {
  Rational mid = midpoint(iv);
  int s_mid = sgn(p.evaluate(mid));
  int s_lo = sgn(p.evaluate(iv.lo));
  if (s_mid == s_lo)
    iv.lo = mid;
  else
    iv.hi = mid;
}

// Interval image of a polynomial in theta over a strictly positive enclosure.
RationalInterval evaluate_on(std::span<const Rational> coeffs, const RationalInterval& x) {
  RationalInterval acc{coeffs.back(), coeffs.back()};
  Rational lo, hi;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (sgn(acc.lo) >= 0) {
      lo = acc.lo * x.lo;
      hi = acc.hi * x.hi;
    } else if (sgn(acc.hi) <= 0) {
      lo = acc.lo * x.hi;
      hi = acc.hi * x.lo;
    } else {
      lo = acc.lo * x.hi;
      hi = acc.hi * x.hi;
    }
    acc.lo = lo + coeffs[i];
    acc.hi = hi + coeffs[i];
  }
  return acc;
}

int decided_sign(const RationalInterval& iv) {
  if (sgn(iv.lo) > 0) return 1;
  if (sgn(iv.hi) < 0) return -1;
  return 0;
}

}  // namespace

FieldContext::FieldContext(unsigned conductor) : conductor_(conductor) {
  if (conductor == 0) throw Error(ErrorKind::InvalidMatrix, "field conductor must be positive");
  const unsigned L = conductor;

  // Roots of D_L + 2 are 2cos((2k+1)pi/L); its irreducible factors are the
  // minimal polynomials of 2cos(2pi/d) for d | 2L with 2L/d odd.
  auto target = squarefree_part(chebyshev_double_cosine(L) + RationalPolynomial({2}));
  std::vector<RationalPolynomial> factors;
  RationalPolynomial product({1});
  for (unsigned d : divisors(2 * L)) {
    if ((2 * L / d) % 2 == 0) continue;
    factors.push_back(real_cyclotomic(d));
    product = product * factors.back();
  }
  if (!(product == target)) throw std::logic_error("factorisation of D_L + 2 does not multiply back");

  // theta is the largest root of the target. Certify an enclosure (lo, 3]
  // holding exactly one root, starting from a floating seed.
  const double seed = 2.0 * std::cos(std::numbers::pi / static_cast<double>(L));
  Rational hi(3);
  Rational step(1, 1 << 20);
  Rational lo = Rational(seed) - step;
  while (count_real_roots(target, lo, hi) != 1) {
    step *= 2;
    lo = Rational(seed) - step;
  }

  bool found = false;
  for (auto& f : factors) {
    if (count_real_roots(f, lo, hi) == 1) {
      if (found) throw std::logic_error("two factors claim the same root");
      minpoly_ = f;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no factor vanishes at 2cos(pi/L)");

  const std::size_t expected = L <= 2 ? 1 : euler_phi(2 * L) / 2;
  if (degree() != expected) throw std::logic_error("minimal polynomial has unexpected degree");

  if (degree() == 1) {
    Rational root = -minpoly_.coeff(0);
    ladder_.push_back({root, root});
  } else {
    RationalInterval iv{lo, hi};
    // theta >= sqrt(2) here, so the enclosure can be made strictly positive;
    // the interval evaluator relies on that.
    for (int i = 0; i < 20 || sgn(iv.lo) <= 0; ++i) bisect(minpoly_, iv);
    if (sgn(minpoly_.evaluate(iv.lo)) * sgn(minpoly_.evaluate(iv.hi)) >= 0 ||
        count_real_roots(minpoly_, iv.lo, iv.hi) != 1)
      throw std::logic_error("isolating interval failed verification");
    ladder_.push_back(iv);
    for (int level = 1; level < kLadderLevels; ++level) {
      for (int i = 0; i < kBisectionsPerLevel; ++i) bisect(minpoly_, iv);
      ladder_.push_back(iv);
    }
  }

  const std::size_t d = degree();
  if (d >= 2) {
    std::vector<Rational> power(d);
    for (std::size_t i = 0; i < d; ++i) power[i] = -minpoly_.coeff(i);
    high_powers_.push_back(power);
    for (std::size_t k = 1; k + 1 < d; ++k) {
      std::vector<Rational> next(d);
      const Rational carry = power[d - 1];
      for (std::size_t i = d - 1; i >= 1; --i) next[i] = power[i - 1];
      for (std::size_t i = 0; i < d; ++i) next[i] += carry * high_powers_.front()[i];
      high_powers_.push_back(next);
      power = std::move(next);
    }
  }
}

void FieldContext::reduce_in_place(std::vector<Rational>& wide) const {
  const std::size_t d = degree();
  for (std::size_t k = d; k < wide.size(); ++k) {
    if (wide[k] == 0) continue;
    const auto& row = high_powers_[k - d];
    for (std::size_t i = 0; i < d; ++i) wide[i] += wide[k] * row[i];
  }
  wide.resize(d);
}

int FieldContext::sign_of(std::span<const Rational> coeffs) const {
  bool nonzero = false;
  for (const auto& c : coeffs) nonzero = nonzero || c != 0;
  if (!nonzero) return 0;
  bool rational = true;
  for (std::size_t i = 1; i < coeffs.size(); ++i) rational = rational && coeffs[i] == 0;
  if (rational) return sgn(coeffs[0]);
  for (const auto& iv : ladder_) {
    int s = decided_sign(evaluate_on(coeffs, iv));
    if (s != 0) return s;
  }
  // Past the precomputed ladder: keep refining locally. Terminates because a
  // nonzero reduced element cannot vanish at theta.
  RationalInterval iv = ladder_.back();
  for (;;) {
    for (int i = 0; i < kBisectionsPerLevel; ++i) bisect(minpoly_, iv);
    int s = decided_sign(evaluate_on(coeffs, iv));
    if (s != 0) return s;
  }
}

FieldScalar FieldContext::zero() const { return FieldScalar(this, std::vector<Rational>(degree())); }

FieldScalar FieldContext::one() const { return from_rational(1); }

FieldScalar FieldContext::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree());
  c[0] = q;
  return FieldScalar(this, std::move(c));
}

FieldScalar FieldContext::theta() const {
  return reduce(RationalPolynomial::x());
}

FieldScalar FieldContext::from_coefficients(std::vector<Rational> coeffs) const {
  return reduce(RationalPolynomial(std::move(coeffs)));
}

FieldScalar FieldContext::reduce(const RationalPolynomial& p) const {
  auto r = divmod(p, minpoly_).second;
  std::vector<Rational> c(degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.coeff(i);
  return FieldScalar(this, std::move(c));
}

void FieldScalar::check_same(const FieldScalar& b) const {
  if (ctx_ == nullptr || ctx_ != b.ctx_)
    throw Error(ErrorKind::MixedFields, "operands belong to different fields");
}

bool FieldScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldScalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

int FieldScalar::sign() const {
  if (ctx_ == nullptr) return 0;
  return ctx_->sign_of(coeffs_);
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& b) {
  check_same(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& b) {
  check_same(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  a.check_same(b);
  const std::size_t d = a.coeffs_.size();
  if (d == 1) return FieldScalar(a.ctx_, {a.coeffs_[0] * b.coeffs_[0]});
  std::vector<Rational> wide(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      wide[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  a.ctx_->reduce_in_place(wide);
  return FieldScalar(a.ctx_, std::move(wide));
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& b) { return *this = *this * b; }

FieldScalar& FieldScalar::operator/=(const FieldScalar& b) {
  check_same(b);
  return *this = *this * b.inverse();
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldScalar FieldScalar::scaled(const Rational& q) const {
  FieldScalar out(*this);
  for (auto& c : out.coeffs_) c *= q;
  return out;
}

FieldScalar FieldScalar::inverse() const {
  if (ctx_ == nullptr) throw Error(ErrorKind::MixedFields, "scalar has no field");
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  // Extended Euclid: track s with s * a == r (mod minpoly).
  RationalPolynomial r0 = ctx_->minpoly(), r1(coeffs_);
  RationalPolynomial s0, s1({1});
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    auto s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return ctx_->reduce(Rational(1) / r1.leading() * s1);
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
}

std::size_t FieldScalar::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& c : coeffs_) {
    h ^= mpz_get_ui(c.get_num_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= mpz_get_ui(c.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(sgn(c) + 1);
  }
  return h;
}

std::string FieldScalar::to_string() const {
  return RationalPolynomial(coeffs_).to_string("θ");
}

double FieldScalar::approx() const {
  if (ctx_ == nullptr) return 0.0;
  const double theta = 2.0 * std::cos(std::numbers::pi / static_cast<double>(ctx_->conductor()));
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * theta + it->get_d();
  return acc;
}

unsigned field_conductor(std::span<const Label> labels) {
  unsigned L = 1;
  for (Label m : labels)
    if (m >= 3) L = std::lcm(L, static_cast<unsigned>(m));
  return L;
}

FieldScalar cos_pi_over(const FieldContext& field, Label m) {
  if (m == kInfinity) return field.one();
  if (m == 1) return field.from_rational(-1);
  if (m == 2) return field.zero();
  if (m < 0 || field.conductor() % static_cast<unsigned>(m) != 0)
    throw Error(ErrorKind::IncompatibleOrder,
                "label " + std::to_string(m) + " does not divide conductor " +
                    std::to_string(field.conductor()));
  auto d = chebyshev_double_cosine(field.conductor() / static_cast<unsigned>(m));
  return field.reduce(Rational(1, 2) * d);
}

FieldScalar parse_scalar(const FieldContext& field, std::string_view text) {
  const std::string src(text);
  auto fail = [&](const std::string& why) -> FieldScalar {
    throw Error(ErrorKind::ParseError, "bad scalar `" + std::string(text) + "`: " + why);
  };
  std::vector<Rational> coeffs;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  };
  skip_space();
  if (i == src.size()) return fail("empty");
  auto take_digits = [&] {
    std::size_t start = i;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
    return src.substr(start, i - start);
  };
  auto take_theta = [&] {
    for (std::string_view name : {"θ", "theta"}) {
      if (src.compare(i, name.size(), name) == 0) {
        i += name.size();
        return true;
      }
    }
    return false;
  };
  bool first = true;
  while (i < src.size()) {
    int sign = 1;
    if (src[i] == '+' || src[i] == '-') {
      sign = src[i] == '-' ? -1 : 1;
      ++i;
      skip_space();
    } else if (!first) {
      return fail("expected + or -");
    }
    first = false;
    Rational c(sign);
    bool have_coeff = false;
    std::string num = take_digits();
    if (!num.empty()) {
      have_coeff = true;
      mpz_class n(num), d(1);
      if (i < src.size() && src[i] == '/') {
        ++i;
        std::string den = take_digits();
        if (den.empty()) return fail("missing denominator");
        d = mpz_class(den);
        if (d == 0) return fail("zero denominator");
      }
      c *= Rational(n, d);
      c.canonicalize();
    }
    if (i < src.size() && src[i] == '.') return fail("decimals are not exact");
    std::size_t power = 0;
    skip_space();
    if (have_coeff && i < src.size() && src[i] == '*') {
      ++i;
      skip_space();
      if (!take_theta()) return fail("expected θ after *");
      power = 1;
    } else if (take_theta()) {
      power = 1;
    } else if (!have_coeff) {
      return fail("expected a number or θ");
    }
    if (power == 1 && i < src.size() && src[i] == '^') {
      ++i;
      std::string k = take_digits();
      if (k.empty()) return fail("missing exponent");
      power = std::stoul(k);
    }
    skip_space();
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += c;
  }
  return field.reduce(RationalPolynomial(std::move(coeffs)));
}

}  // namespace coxeter
