#include "coxeter/linalg.hpp"

#include "coxeter/error.hpp"

namespace coxeter {

Matrix::Matrix(const FieldContext& field, std::size_t n) : n_(n), a_(n * n, field.zero()) {}

Matrix Matrix::identity(const FieldContext& field, std::size_t n) {
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(n_);
  for (std::size_t r = 0; r < n_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(*this);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(r, c) = (*this)(c, r);
  return t;
}

bool Matrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      const auto& x = (*this)(r, c);
      if (r == c ? !(x == x.context()->one()) : !x.is_zero()) return false;
    }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix out(a);
  for (std::size_t r = 0; r < a.n_; ++r)
    for (std::size_t c = 0; c < a.n_; ++c) {
      FieldScalar acc = a(r, 0) * b(0, c);
      for (std::size_t k = 1; k < a.n_; ++k)
        if (!a(r, k).is_zero() && !b(k, c).is_zero()) acc += a(r, k) * b(k, c);
      out(r, c) = std::move(acc);
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.n_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  Vector out;
  out.reserve(a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    FieldScalar acc = a(r, 0) * v[0];
    for (std::size_t k = 1; k < a.n_; ++k)
      if (!a(r, k).is_zero() && !v[k].is_zero()) acc += a(r, k) * v[k];
    out.push_back(std::move(acc));
  }
  return out;
}

std::string Matrix::key() const {
  std::string out;
  for (const auto& x : a_) {
    for (const auto& c : x.coeffs()) {
      out += c.get_str();
      out += ',';
    }
    out += ';';
  }
  return out;
}

FieldScalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size() || a.empty()) throw Error(ErrorKind::DimensionMismatch, "dot product");
  FieldScalar acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scaled(const Vector& v, const FieldScalar& c) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * c);
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t VectorHash::operator()(const Vector& v) const {
  std::size_t h = v.size();
  for (const auto& x : v) h = h * 1099511628211ULL ^ x.hash();
  return h;
}

}  // namespace coxeter
