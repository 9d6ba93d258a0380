#include "coxeter/coxeter_matrix.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "coxeter/error.hpp"
#include "coxeter/generator_set.hpp"

namespace coxeter {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> labels, std::vector<Label> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorKind::InvalidMatrix, "rank must be positive");
  if (n > kMaxRank) throw Error(ErrorKind::InvalidMatrix, "rank exceeds " + std::to_string(kMaxRank));
  if (entries_.size() != n * n) throw Error(ErrorKind::InvalidMatrix, "matrix is not n x n");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty() || !seen.insert(l).second)
      throw Error(ErrorKind::InvalidMatrix, "generator names must be distinct and nonempty");
  }
  for (std::size_t s = 0; s < n; ++s) {
    if ((*this)(s, s) != 1)
      throw Error(ErrorKind::InvalidMatrix, "diagonal entry m_" + labels_[s] + labels_[s] + " != 1");
    for (std::size_t t = 0; t < n; ++t) {
      if ((*this)(s, t) != (*this)(t, s))
        throw Error(ErrorKind::InvalidMatrix, "matrix is not symmetric at " + labels_[s] + "," + labels_[t]);
      if (s != t && (*this)(s, t) != kInfinity && (*this)(s, t) < 2)
        throw Error(ErrorKind::InvalidMatrix, "off-diagonal label below 2 at " + labels_[s] + "," + labels_[t]);
    }
  }
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

CoxeterMatrix parse_group_file(std::istream& in) {
  std::string line, keyword;
  if (!next_content_line(in, line)) throw Error(ErrorKind::ParseError, "missing `rank` line");
  std::istringstream rank_line(line);
  long long n = 0;
  if (!(rank_line >> keyword >> n) || keyword != "rank" || n <= 0)
    throw Error(ErrorKind::ParseError, "expected `rank n` with n >= 1");
  if (std::string extra; rank_line >> extra) throw Error(ErrorKind::ParseError, "trailing text after rank");

  if (!next_content_line(in, line)) throw Error(ErrorKind::ParseError, "missing `labels` line");
  std::istringstream label_line(line);
  if (!(label_line >> keyword) || keyword != "labels")
    throw Error(ErrorKind::ParseError, "expected `labels ...`");
  std::vector<std::string> labels;
  for (std::string l; label_line >> l;) labels.push_back(l);
  if (static_cast<long long>(labels.size()) != n)
    throw Error(ErrorKind::ParseError, "label count does not match rank");

  std::vector<Label> entries;
  for (long long row = 0; row < n; ++row) {
    if (!next_content_line(in, line)) throw Error(ErrorKind::ParseError, "missing matrix row");
    std::istringstream row_in(line);
    long long count = 0;
    for (std::string tok; row_in >> tok; ++count) {
      if (tok == "inf") {
        entries.push_back(kInfinity);
        continue;
      }
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || value <= 0 || value > 1'000'000)
        throw Error(ErrorKind::ParseError, "bad matrix entry `" + tok + "`");
      entries.push_back(static_cast<Label>(value));
    }
    if (count != n) throw Error(ErrorKind::ParseError, "matrix row has wrong length");
  }
  if (next_content_line(in, line)) throw Error(ErrorKind::ParseError, "trailing content after matrix");
  return CoxeterMatrix(std::move(labels), std::move(entries));
}

CoxeterMatrix load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return parse_group_file(in);
}

std::string serialize_group_file(const CoxeterMatrix& matrix) {
  std::ostringstream os;
  const std::size_t n = matrix.rank();
  os << "rank " << n << "\nlabels";
  for (const auto& l : matrix.labels()) os << ' ' << l;
  os << '\n';
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (t) os << ' ';
      if (matrix(s, t) == kInfinity)
        os << "inf";
      else
        os << matrix(s, t);
    }
    os << '\n';
  }
  return os.str();
}

std::shared_ptr<const FieldContext> build_field(const CoxeterMatrix& matrix) {
  return std::make_shared<const FieldContext>(field_conductor(matrix.entries()));
}

}  // namespace coxeter
