#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxeter/scalar.hpp"

namespace coxeter {

/// Coordinates of a vector of V in the simple-root basis, or of V* in the
/// dual basis.
using Vector = std::vector<FieldScalar>;

/// Dense square matrix over the field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldContext& field, std::size_t n);
  static Matrix identity(const FieldContext& field, std::size_t n);

  std::size_t size() const { return n_; }
  FieldScalar& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const FieldScalar& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  /// Exact serialisation of all entries, usable as a hash-map key.
  std::string key() const;

 private:
  std::size_t n_ = 0;
  std::vector<FieldScalar> a_;
};

FieldScalar dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const FieldScalar& c);
bool is_zero(const Vector& v);

struct VectorHash {
  std::size_t operator()(const Vector& v) const;
};

}  // namespace coxeter
