#pragma once

#include <cstddef>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "coxeter/scalar.hpp"

namespace coxeter {

/// Labels m_st together with generator names. Entries use kInfinity for
/// the "inf" label.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Throws InvalidMatrix unless the entries form a Coxeter matrix: square,
  /// symmetric, 1 on the diagonal, >= 2 or infinity elsewhere, with one
  /// distinct name per generator.
  CoxeterMatrix(std::vector<std::string> labels, std::vector<Label> entries);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Label>& entries() const { return entries_; }
  Label operator()(std::size_t s, std::size_t t) const { return entries_[s * rank() + t]; }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Label> entries_;
};

/// Group definition file:
///
///     rank n
///     labels a b c ...
///     n lines of n entries, each a positive integer or `inf`
///
/// Blank lines and lines starting with '#' are ignored.
CoxeterMatrix parse_group_file(std::istream& in);
CoxeterMatrix load_group_file(const std::string& path);
std::string serialize_group_file(const CoxeterMatrix& matrix);

/// Field in which every (alpha_s, alpha_t) of the matrix lives.
std::shared_ptr<const FieldContext> build_field(const CoxeterMatrix& matrix);

}  // namespace coxeter
