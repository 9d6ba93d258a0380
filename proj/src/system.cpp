#include "coxeter/system.hpp"

#include <algorithm>
#include <sstream>

#include "coxeter/error.hpp"

namespace coxeter {

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
  return a.word_ < b.word_;
}

std::vector<GeneratorSet> subsets_by_size(std::size_t rank) {
  std::vector<GeneratorSet> out;
  const std::uint32_t limit = GeneratorSet::all(rank).mask();
  for (std::uint64_t m = 0; m <= limit; ++m) out.emplace_back(static_cast<std::uint32_t>(m));
  std::stable_sort(out.begin(), out.end(), [](GeneratorSet a, GeneratorSet b) { return a.size() < b.size(); });
  return out;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(CoxeterMatrix matrix) {
  return std::shared_ptr<const CoxeterSystem>(new CoxeterSystem(std::move(matrix)));
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix) : matrix_(std::move(matrix)), field_(build_field(matrix_)) {
  const std::size_t n = rank();
  const FieldContext& k = *field_;
  gram_ = Matrix(k, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) gram_(s, t) = -cos_pi_over(k, matrix_(s, t));

  neighbours_.resize(n);
  for (std::size_t s = 0; s < n; ++s) {
    Matrix r = Matrix::identity(k, n);
    for (std::size_t t = 0; t < n; ++t) {
      FieldScalar c = gram_(s, t).scaled(-2);
      r(s, t) += c;
      if (t != s && !c.is_zero()) neighbours_[s].emplace_back(static_cast<Generator>(t), c);
    }
    reflections_.push_back(std::move(r));
  }

  for (std::size_t s = 0; s < n; ++s) {
    if (!(gram_(s, s) == k.one())) throw Error(ErrorKind::InvalidMatrix, "Gram diagonal is not 1");
    for (std::size_t t = 0; t < n; ++t)
      if (!(gram_(s, t) == gram_(t, s))) throw Error(ErrorKind::InvalidMatrix, "Gram matrix not symmetric");
    const Matrix& r = reflections_[s];
    if (!(r * r).is_identity()) throw Error(ErrorKind::InvalidMatrix, "simple reflection is not an involution");
    if (!(r.transpose() * gram_ * r == gram_))
      throw Error(ErrorKind::InvalidMatrix, "simple reflection does not preserve the form");
  }
  identity_matrix_ = std::make_shared<const Matrix>(Matrix::identity(k, n));
}

Generator CoxeterSystem::generator_index(std::string_view name) const {
  const auto& labels = matrix_.labels();
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) throw Error(ErrorKind::UnknownGenerator, "no generator named `" + std::string(name) + "`");
  return static_cast<Generator>(it - labels.begin());
}

const std::string& CoxeterSystem::generator_name(Generator s) const {
  check_generator(s);
  return matrix_.labels()[static_cast<std::size_t>(s)];
}

void CoxeterSystem::check_generator(Generator s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= rank())
    throw Error(ErrorKind::UnknownGenerator, "generator index " + std::to_string(s) + " out of range");
}

void CoxeterSystem::check_same(const GroupElement& w) const {
  if (w.sys_ != this) throw Error(ErrorKind::MixedSystems, "element belongs to another Coxeter system");
}

GroupElement CoxeterSystem::identity() const { return GroupElement(this, {}, identity_matrix_); }

GroupElement CoxeterSystem::generator(Generator s) const {
  check_generator(s);
  return GroupElement(this, {s}, std::make_shared<const Matrix>(simple_reflection(s)));
}

void CoxeterSystem::right_multiply_simple(Matrix& x, Generator s) const {
  const auto us = static_cast<std::size_t>(s);
  for (std::size_t r = 0; r < rank(); ++r) {
    const FieldScalar& xs = x(r, us);
    if (xs.is_zero()) continue;
    for (const auto& [t, c] : neighbours_[us]) x(r, static_cast<std::size_t>(t)) += xs * c;
  }
  for (std::size_t r = 0; r < rank(); ++r) x(r, us) = -x(r, us);
}

void CoxeterSystem::left_multiply_simple(Matrix& x, Generator s) const {
  const auto us = static_cast<std::size_t>(s);
  for (std::size_t c = 0; c < rank(); ++c) {
    FieldScalar v = -x(us, c);
    for (const auto& [t, coef] : neighbours_[us]) {
      const FieldScalar& xt = x(static_cast<std::size_t>(t), c);
      if (!xt.is_zero()) v += coef * xt;
    }
    x(us, c) = std::move(v);
  }
}

int CoxeterSystem::column_sign(const Matrix& x, Generator s) const {
  for (std::size_t r = 0; r < rank(); ++r) {
    int sg = x(r, static_cast<std::size_t>(s)).sign();
    if (sg != 0) return sg;
  }
  return 0;
}

Matrix CoxeterSystem::matrix_of_word(std::span<const Generator> letters) const {
  Matrix m = *identity_matrix_;
  for (Generator s : letters) right_multiply_simple(m, s);
  return m;
}

std::vector<Generator> CoxeterSystem::descend_to_identity(Matrix& inverse, std::size_t step_cap) const {
  // Column s of sigma(w^{-1}) is w^{-1}(alpha_s); it is negative exactly when
  // s is a left descent of w. Peeling the smallest one each time yields the
  // lexicographically least reduced word.
  std::vector<Generator> out;
  for (;;) {
    Generator found = -1;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (column_sign(inverse, static_cast<Generator>(s)) < 0) {
        found = static_cast<Generator>(s);
        break;
      }
    }
    if (found < 0) return out;
    if (out.size() >= step_cap) throw Error(ErrorKind::StepCapExceeded, "descent did not terminate");
    out.push_back(found);
    right_multiply_simple(inverse, found);
  }
}

GroupElement CoxeterSystem::normalize(std::span<const Generator> letters) const {
  for (Generator s : letters) check_generator(s);
  Matrix inverse = *identity_matrix_;
  for (Generator s : letters) left_multiply_simple(inverse, s);
  auto word = descend_to_identity(inverse, letters.size());
  auto m = std::make_shared<const Matrix>(matrix_of_word(word));
  return GroupElement(this, std::move(word), std::move(m));
}

std::optional<GroupElement> CoxeterSystem::from_inverse_matrix(Matrix inverse, std::size_t step_cap) const {
  if (inverse.size() != rank()) throw Error(ErrorKind::DimensionMismatch, "matrix size differs from rank");
  std::vector<Generator> word;
  try {
    word = descend_to_identity(inverse, step_cap);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::StepCapExceeded) return std::nullopt;
    throw;
  }
  if (!inverse.is_identity()) return std::nullopt;
  auto m = std::make_shared<const Matrix>(matrix_of_word(word));
  return GroupElement(this, std::move(word), std::move(m));
}

GroupElement CoxeterSystem::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<Generator> letters;
  const auto& labels = matrix_.labels();
  for (std::string tok; in >> tok;) {
    bool is_label = std::find(labels.begin(), labels.end(), tok) != labels.end();
    if (!is_label && (tok == "e" || tok == "1")) continue;
    letters.push_back(generator_index(tok));
  }
  return normalize(letters);
}

std::string CoxeterSystem::format_word(std::span<const Generator> word) const {
  if (word.empty()) return "e";
  std::string out;
  for (Generator s : word) {
    if (!out.empty()) out += ' ';
    out += generator_name(s);
  }
  return out;
}

std::string CoxeterSystem::format(const GroupElement& w) const { return format_word(w.word()); }

std::string CoxeterSystem::format_set(GeneratorSet set) const {
  std::string out = "{";
  for (Generator s : set.members()) {
    if (out.size() > 1) out += ',';
    out += generator_name(s);
  }
  return out + "}";
}

GeneratorSet CoxeterSystem::parse_set(std::string_view text) const {
  std::string cleaned(text);
  for (char& c : cleaned)
    if (c == '{' || c == '}' || c == ',') c = ' ';
  std::istringstream in(cleaned);
  GeneratorSet out;
  for (std::string tok; in >> tok;) out.insert(generator_index(tok));
  return out;
}

GroupElement CoxeterSystem::mult(const GroupElement& a, const GroupElement& b) const {
  check_same(a);
  check_same(b);
  std::vector<Generator> letters(a.word());
  letters.insert(letters.end(), b.word().begin(), b.word().end());
  return normalize(letters);
}

GroupElement CoxeterSystem::inv(const GroupElement& a) const {
  check_same(a);
  std::vector<Generator> letters(a.word().rbegin(), a.word().rend());
  return normalize(letters);
}

GroupElement CoxeterSystem::conjugate(const GroupElement& w, const GroupElement& g) const {
  check_same(w);
  check_same(g);
  std::vector<Generator> letters(w.word());
  letters.insert(letters.end(), g.word().begin(), g.word().end());
  letters.insert(letters.end(), w.word().rbegin(), w.word().rend());
  return normalize(letters);
}

Vector CoxeterSystem::act(const GroupElement& w, const Vector& v) const {
  check_same(w);
  if (v.size() != rank()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from rank");
  return w.matrix() * v;
}

void CoxeterSystem::apply_simple(Generator s, Vector& v) const {
  const auto us = static_cast<std::size_t>(s);
  FieldScalar out = -v[us];
  for (const auto& [t, c] : neighbours_[us]) {
    const FieldScalar& vt = v[static_cast<std::size_t>(t)];
    if (!vt.is_zero()) out += c * vt;
  }
  v[us] = std::move(out);
}

void CoxeterSystem::apply_simple_dual(Generator s, Vector& f) const {
  const auto us = static_cast<std::size_t>(s);
  const FieldScalar fs = f[us];
  if (fs.is_zero()) return;
  for (const auto& [t, c] : neighbours_[us]) f[static_cast<std::size_t>(t)] += c * fs;
  f[us] = -fs;
}

Vector CoxeterSystem::act_dual(const GroupElement& w, const Vector& f) const {
  check_same(w);
  if (f.size() != rank()) throw Error(ErrorKind::DimensionMismatch, "dual point length differs from rank");
  Vector out(f);
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) apply_simple_dual(*it, out);
  return out;
}

FieldScalar CoxeterSystem::form(const Vector& u, const Vector& v) const {
  if (u.size() != rank() || v.size() != rank()) throw Error(ErrorKind::DimensionMismatch, "form arguments");
  return dot(u, gram_ * v);
}

Vector CoxeterSystem::simple_root(Generator s) const {
  check_generator(s);
  Vector v(rank(), field_->zero());
  v[static_cast<std::size_t>(s)] = field_->one();
  return v;
}

int CoxeterSystem::root_sign(const Vector& v) {
  for (const auto& x : v) {
    int s = x.sign();
    if (s != 0) return s;
  }
  return 0;
}

bool CoxeterSystem::is_right_descent(const GroupElement& w, Generator s) const {
  check_same(w);
  check_generator(s);
  return column_sign(w.matrix(), s) < 0;
}

bool CoxeterSystem::is_left_descent(const GroupElement& w, Generator s) const {
  return is_right_descent(inv(w), s);
}

Label CoxeterSystem::order_of_product(Generator s, Generator t, int cap) const {
  check_generator(s);
  check_generator(t);
  const Label m = matrix_(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
  const int limit = std::max(cap, m == kInfinity ? 0 : m);
  const Matrix st = simple_reflection(s) * simple_reflection(t);
  Matrix power = st;
  for (int k = 1; k <= limit; ++k) {
    if (power.is_identity()) return k;
    power = power * st;
  }
  return kInfinity;
}

GroupElement coset_minimal(const GroupElement& w, GeneratorSet subset) {
  const CoxeterSystem& sys = w.system();
  GroupElement cur = w;
  for (;;) {
    bool moved = false;
    for (Generator t : subset.members()) {
      if (sys.is_right_descent(cur, t)) {
        cur = sys.mult(cur, sys.generator(t));
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

}  // namespace coxeter
