#include "coxeter/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace coxeter {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::x() { return RationalPolynomial({0, 1}); }

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  Rational lead = leading();
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c /= lead;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const Rational& c, const RationalPolynomial& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& dividend,
                                                         const RationalPolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = dividend.coeffs();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {RationalPolynomial{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational& lead = divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p.monic();
  auto g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

namespace {

int sign_changes(const std::vector<RationalPolynomial>& chain, const Rational& at) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(p.evaluate(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  auto sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  std::vector<RationalPolynomial> chain{sf, sf.derivative()};
  while (chain.back().degree() > 0) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

RationalPolynomial chebyshev_double_cosine(unsigned k) {
  RationalPolynomial prev({2});
  if (k == 0) return prev;
  RationalPolynomial cur = RationalPolynomial::x();
  for (unsigned i = 1; i < k; ++i) {
    auto next = RationalPolynomial::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace coxeter
