#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/coxeter_matrix.hpp"
#include "coxeter/generator_set.hpp"
#include "coxeter/linalg.hpp"

namespace coxeter {

class CoxeterSystem;

/// A group element, stored as its ShortLex-least reduced word under the
/// generator order. Carries the matrix of its canonical representation.
class GroupElement {
 public:
  const CoxeterSystem& system() const { return *sys_; }
  const std::vector<Generator>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }
  /// sigma(w) acting on V in the simple-root basis.
  const Matrix& matrix() const { return *matrix_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.sys_ == b.sys_ && a.word_ == b.word_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b);

 private:
  friend class CoxeterSystem;
  GroupElement(const CoxeterSystem* sys, std::vector<Generator> word, std::shared_ptr<const Matrix> m)
      : sys_(sys), word_(std::move(word)), matrix_(std::move(m)) {}

  const CoxeterSystem* sys_;
  std::vector<Generator> word_;
  std::shared_ptr<const Matrix> matrix_;
};

/// A Coxeter system of finite rank with its canonical representation over
/// Q(2cos(pi/L)). Immutable once built; elements keep a pointer to it.
class CoxeterSystem {
 public:
  /// Validates the matrix, builds the field, the Gram matrix and the simple
  /// reflections, and checks exactly that each reflection is an involution
  /// preserving the form. Throws InvalidMatrix.
  static std::shared_ptr<const CoxeterSystem> build(CoxeterMatrix matrix);

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  std::size_t rank() const { return matrix_.rank(); }
  const CoxeterMatrix& coxeter_matrix() const { return matrix_; }
  const FieldContext& field() const { return *field_; }
  /// B(alpha_s, alpha_t) = -cos(pi / m_st).
  const Matrix& gram() const { return gram_; }
  const Matrix& simple_reflection(Generator s) const { return reflections_[static_cast<std::size_t>(s)]; }
  GeneratorSet all_generators() const { return GeneratorSet::all(rank()); }

  Generator generator_index(std::string_view name) const;
  const std::string& generator_name(Generator s) const;

  GroupElement identity() const;
  GroupElement generator(Generator s) const;

  /// ShortLex normal form of a product of generators. Descents are read off
  /// the signs of w^{-1}(alpha_s); no word rewriting is involved.
  GroupElement normalize(std::span<const Generator> letters) const;
  /// Whitespace-separated generator names; `e` (or `1`) denotes the identity
  /// when no generator uses that name. Throws UnknownGenerator.
  GroupElement parse_word(std::string_view text) const;
  std::string format(const GroupElement& w) const;
  std::string format_word(std::span<const Generator> word) const;
  std::string format_set(GeneratorSet set) const;
  /// Comma/whitespace separated names, optional braces. Throws UnknownGenerator.
  GeneratorSet parse_set(std::string_view text) const;

  /// Recovers the element whose inverse has the given matrix, or nullopt if
  /// the descent does not reach the identity within `step_cap` steps.
  std::optional<GroupElement> from_inverse_matrix(Matrix inverse, std::size_t step_cap) const;

  GroupElement mult(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement conjugate(const GroupElement& w, const GroupElement& g) const;  // w g w^{-1}

  /// sigma(w) v for v in V.
  Vector act(const GroupElement& w, const Vector& v) const;
  /// sigma*(w) f for f in V*, with <w f, v> = <f, w^{-1} v>.
  Vector act_dual(const GroupElement& w, const Vector& f) const;
  void apply_simple(Generator s, Vector& v) const;
  void apply_simple_dual(Generator s, Vector& f) const;

  /// B(u, v).
  FieldScalar form(const Vector& u, const Vector& v) const;
  Vector simple_root(Generator s) const;

  /// Sign of a root: the sign of its first nonzero coordinate.
  static int root_sign(const Vector& v);
  /// l(ws) < l(w), decided by w(alpha_s) < 0.
  bool is_right_descent(const GroupElement& w, Generator s) const;
  bool is_left_descent(const GroupElement& w, Generator s) const;

  /// Multiplicative order of sigma(st) by exact powering; kInfinity when no
  /// power up to max(cap, m_st) is the identity.
  Label order_of_product(Generator s, Generator t, int cap = 64) const;

  void check_generator(Generator s) const;
  void check_same(const GroupElement& w) const;

 private:
  explicit CoxeterSystem(CoxeterMatrix matrix);

  // In-place X <- X sigma_s and X <- sigma_s X.
  void right_multiply_simple(Matrix& x, Generator s) const;
  void left_multiply_simple(Matrix& x, Generator s) const;
  int column_sign(const Matrix& x, Generator s) const;
  std::vector<Generator> descend_to_identity(Matrix& inverse, std::size_t step_cap) const;
  Matrix matrix_of_word(std::span<const Generator> letters) const;

  CoxeterMatrix matrix_;
  std::shared_ptr<const FieldContext> field_;
  Matrix gram_;
  std::vector<Matrix> reflections_;
  // -2 B(alpha_s, alpha_t) for each t adjacent to s (nonzero, t != s).
  std::vector<std::vector<std::pair<Generator, FieldScalar>>> neighbours_;
  std::shared_ptr<const Matrix> identity_matrix_;
};

/// Shortest element of the coset w W_I: strips right descents in I.
GroupElement coset_minimal(const GroupElement& w, GeneratorSet subset);

}  // namespace coxeter
