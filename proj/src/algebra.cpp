#include "qci/algebra.hpp"

#include <numeric>

namespace qci {
namespace {

constexpr std::size_t kMaxDimension = 4096;

void require_same_spec(const SpecPtr& x, const SpecPtr& y) {
  if (!same_algebra(x, y)) {
    throw Error(ErrorKind::descriptor_mismatch, "elements belong to different algebras");
  }
}

}  // namespace

int ExponentVec::degree() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool ExponentVec::leq(const ExponentVec& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (c_[i] > other.c_[i]) return false;
  }
  return true;
}

bool ExponentVec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

ExponentVec operator+(const ExponentVec& u, const ExponentVec& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::dimension_mismatch, "exponent length mismatch");
  std::vector<int> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return ExponentVec(std::move(out));
}

ExponentVec operator-(const ExponentVec& u, const ExponentVec& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::dimension_mismatch, "exponent length mismatch");
  std::vector<int> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return ExponentVec(std::move(out));
}

std::string ExponentVec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

SpecPtr AlgebraSpec::create(FieldDescriptor field, std::vector<int> a,
                            std::vector<std::vector<Scalar>> q) {
  const std::size_t n = a.size();
  if (n < 2) throw Error(ErrorKind::invalid_spec, "at least two generators are required (n >= 2)");
  std::size_t dim = 1;
  for (int ai : a) {
    if (ai < 2) throw Error(ErrorKind::invalid_spec, "every exponent bound ai must be >= 2");
    dim *= static_cast<std::size_t>(ai);
    if (dim > kMaxDimension) {
      throw Error(ErrorKind::unsupported,
                  "algebra dimension exceeds " + std::to_string(kMaxDimension));
    }
  }
  if (q.size() != n) throw Error(ErrorKind::invalid_spec, "q must be an n x n matrix");
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].size() != n) throw Error(ErrorKind::invalid_spec, "q must be an n x n matrix");
    for (const Scalar& x : q[i]) {
      if (!(x.field() == field)) {
        throw Error(ErrorKind::invalid_spec, "q entries must lie in " + field.to_string());
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(q[i][i] == -one)) {
      throw Error(ErrorKind::invalid_spec, "q" + std::to_string(i + 1) + std::to_string(i + 1) +
                                               " must be -1, got " + q[i][i].to_string());
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(q[i][j] * q[j][i]).is_one()) {
        throw Error(ErrorKind::invalid_spec,
                    "q" + std::to_string(i + 1) + std::to_string(j + 1) + " * q" +
                        std::to_string(j + 1) + std::to_string(i + 1) + " must equal 1");
      }
    }
  }
  return SpecPtr(new AlgebraSpec(field, std::move(a), std::move(q)));
}

SpecPtr AlgebraSpec::uniform(FieldDescriptor field, std::vector<int> a, const Scalar& off_diagonal) {
  const std::size_t n = a.size();
  std::vector<std::vector<Scalar>> q(n, std::vector<Scalar>(n, off_diagonal));
  for (std::size_t i = 0; i < n; ++i) {
    q[i][i] = -Scalar::one(field);
    for (std::size_t j = 0; j < i; ++j) q[i][j] = off_diagonal.inverse();
  }
  return create(field, std::move(a), std::move(q));
}

AlgebraSpec::AlgebraSpec(FieldDescriptor field, std::vector<int> a,
                         std::vector<std::vector<Scalar>> q)
    : field_(field), a_(std::move(a)), q_(std::move(q)) {
  basis_ = enumerate_basis(*this);
  const std::size_t n = a_.size();
  strides_.assign(n, 1);
  for (std::size_t i = n - 1; i-- > 0;) strides_[i] = strides_[i + 1] * a_[i + 1];

  const std::size_t d = basis_.size();
  bracket_.reserve(d * d);
  product_.reserve(d * d);
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      bracket_.push_back(q_bracket(*this, basis_[u], basis_[v]));
      const ExponentVec sum = basis_[u] + basis_[v];
      product_.push_back(contains(sum) ? static_cast<long>(index_of(sum)) : -1L);
    }
  }
}

bool AlgebraSpec::contains(const ExponentVec& v) const {
  if (v.size() != a_.size()) return false;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (v[i] < 0 || v[i] >= a_[i]) return false;
  }
  return true;
}

std::size_t AlgebraSpec::index_of(const ExponentVec& v) const {
  if (!contains(v)) throw Error(ErrorKind::precondition, "exponent " + v.to_string() + " not in V");
  std::size_t index = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) index += static_cast<std::size_t>(v[i] * strides_[i]);
  return index;
}

ExponentVec AlgebraSpec::generator(std::size_t i) const {
  std::vector<int> c(n(), 0);
  c.at(i) = 1;
  return ExponentVec(std::move(c));
}

bool AlgebraSpec::is_commutative_q() const {
  const Scalar minus_one = -Scalar::one(field_);
  for (const auto& row : q_) {
    for (const Scalar& x : row) {
      if (!(x == minus_one)) return false;
    }
  }
  return true;
}

bool AlgebraSpec::q_squares_to_one() const {
  for (const auto& row : q_) {
    for (const Scalar& x : row) {
      if (!(x * x).is_one()) return false;
    }
  }
  return true;
}

bool same_algebra(const SpecPtr& x, const SpecPtr& y) {
  return x == y || (x && y && *x == *y);
}

AlgElem::AlgElem(SpecPtr spec) : spec_(std::move(spec)) {}

AlgElem AlgElem::unit(SpecPtr spec) { return basis(std::move(spec), 0); }

AlgElem AlgElem::basis(SpecPtr spec, std::size_t index, const Scalar& coeff) {
  AlgElem out(std::move(spec));
  out.add_term(index, coeff);
  return out;
}

AlgElem AlgElem::basis(SpecPtr spec, std::size_t index) {
  const Scalar one = Scalar::one(spec->field());
  return basis(std::move(spec), index, one);
}

AlgElem AlgElem::monomial(SpecPtr spec, const ExponentVec& v) {
  const std::size_t index = spec->index_of(v);
  return basis(std::move(spec), index);
}

AlgElem AlgElem::from_vector(SpecPtr spec, const Vector& coeffs) {
  if (coeffs.size() != spec->dim()) {
    throw Error(ErrorKind::dimension_mismatch, "coefficient vector length differs from dim A");
  }
  AlgElem out(std::move(spec));
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.add_term(i, coeffs[i]);
  return out;
}

Scalar AlgElem::coeff_at(std::size_t index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Scalar::zero(spec_->field()) : it->second;
}

void AlgElem::add_term(std::size_t index, const Scalar& coeff) {
  if (index >= spec_->dim()) throw Error(ErrorKind::precondition, "basis index out of range");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElem AlgElem::scaled(const Scalar& c) const {
  AlgElem out(spec_);
  for (const auto& [index, x] : terms_) out.add_term(index, x * c);
  return out;
}

Vector AlgElem::to_vector() const {
  Vector out = zero_vector(spec_->field(), spec_->dim());
  for (const auto& [index, x] : terms_) out[index] = x;
  return out;
}

std::string monomial_name(const ExponentVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    s += "x" + std::to_string(i + 1);
    if (v[i] > 1) s += "^" + std::to_string(v[i]);
  }
  return s.empty() ? "1" : s;
}

namespace {

// One signed term of a rendered sum: "3*x1", "-x2", "(1+i)*x1x2", "1".
std::string render_term(const Scalar& c, const std::string& name, bool is_unit) {
  std::string coeff = c.to_string();
  if (c.is_one()) return name;
  if ((-c).is_one() && c.is_real() && c.rational_sign() != 0) return "-" + name;
  if (!c.is_real()) coeff = "(" + coeff + ")";
  return is_unit ? coeff : coeff + "*" + name;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) {
    s += terms[k].front() == '-' ? terms[k] : "+" + terms[k];
  }
  return s;
}

}  // namespace

std::string AlgElem::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [index, c] : terms_) {
    const ExponentVec& v = spec_->basis_vector(index);
    parts.push_back(render_term(c, monomial_name(v), v.is_zero()));
  }
  return join_terms(parts);
}

AlgElem operator+(const AlgElem& x, const AlgElem& y) {
  require_same_spec(x.spec_, y.spec_);
  AlgElem out = x;
  for (const auto& [index, c] : y.terms_) out.add_term(index, c);
  return out;
}

AlgElem operator-(const AlgElem& x, const AlgElem& y) {
  require_same_spec(x.spec_, y.spec_);
  AlgElem out = x;
  for (const auto& [index, c] : y.terms_) out.add_term(index, -c);
  return out;
}

AlgElem operator*(const AlgElem& x, const AlgElem& y) { return elem_mul(x, y); }

bool operator==(const AlgElem& x, const AlgElem& y) {
  return same_algebra(x.spec_, y.spec_) && x.terms_ == y.terms_;
}

Functional Functional::dual_basis(SpecPtr spec, std::size_t index) {
  return Functional(AlgElem::basis(std::move(spec), index));
}

Functional Functional::sum_of_duals(SpecPtr spec) {
  AlgElem c(spec);
  for (std::size_t i = 0; i < spec->dim(); ++i) c.add_term(i, Scalar::one(spec->field()));
  return Functional(std::move(c));
}

Scalar Functional::operator()(const AlgElem& x) const {
  require_same_spec(spec(), x.spec());
  Scalar sum = Scalar::zero(spec()->field());
  for (const auto& [index, c] : x.terms()) {
    const auto& mine = c_.terms();
    const auto it = mine.find(index);
    if (it != mine.end()) sum += it->second * c;
  }
  return sum;
}

std::string Functional::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [index, c] : c_.terms()) {
    const std::string name = "[" + monomial_name(spec()->basis_vector(index)) + "]*";
    parts.push_back(render_term(c, name, false));
  }
  return join_terms(parts);
}

std::vector<ExponentVec> enumerate_basis(const AlgebraSpec& spec) {
  const std::vector<int>& a = spec.a();
  std::vector<ExponentVec> out;
  std::vector<int> v(a.size(), 0);
  while (true) {
    out.emplace_back(v);
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (++v[i] < a[i]) break;
      v[i] = 0;
      if (i == 0) return out;
    }
  }
}

Scalar q_bracket(const AlgebraSpec& spec, const ExponentVec& u, const ExponentVec& v) {
  const FieldDescriptor& field = spec.field();
  Scalar result = Scalar::one(field);
  for (std::size_t i = 0; i < spec.n(); ++i) {
    for (std::size_t j = i + 1; j < spec.n(); ++j) {
      const long long e = static_cast<long long>(u[j]) * v[i];
      if (e != 0) result *= (-spec.q(i, j).inverse()).pow(e);
    }
  }
  return result;
}

AlgElem mono_mul(const SpecPtr& spec, const ExponentVec& u, const ExponentVec& v) {
  const std::size_t iu = spec->index_of(u);
  const std::size_t iv = spec->index_of(v);
  AlgElem out(spec);
  const long target = spec->product_index(iu, iv);
  if (target >= 0) out.add_term(static_cast<std::size_t>(target), spec->bracket(iu, iv));
  return out;
}

AlgElem elem_mul(const AlgElem& x, const AlgElem& y) {
  require_same_spec(x.spec(), y.spec());
  const AlgebraSpec& spec = *x.spec();
  AlgElem out(x.spec());
  for (const auto& [iu, cu] : x.terms()) {
    for (const auto& [iv, cv] : y.terms()) {
      const long target = spec.product_index(iu, iv);
      if (target >= 0) out.add_term(static_cast<std::size_t>(target), cu * cv * spec.bracket(iu, iv));
    }
  }
  return out;
}

Scalar counit_std(const AlgebraSpec& spec, const ExponentVec& v) {
  if (!spec.contains(v)) throw Error(ErrorKind::precondition, "exponent " + v.to_string() + " not in V");
  return v.is_zero() ? Scalar::one(spec.field()) : Scalar::zero(spec.field());
}

Matrix bilinear_form(const Functional& phi) {
  const AlgebraSpec& spec = *phi.spec();
  const std::size_t d = spec.dim();
  Matrix m(spec.field(), d, d);
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      const long target = spec.product_index(u, v);
      if (target >= 0) m(u, v) = phi.at_basis(static_cast<std::size_t>(target)) * spec.bracket(u, v);
    }
  }
  return m;
}

FrobeniusFunctionalResult is_frobenius_functional(const Functional& phi) {
  const AlgebraSpec& spec = *phi.spec();
  const std::size_t r = rank(bilinear_form(phi));
  const bool by_rank = r == spec.dim();
  const bool closed_form = !phi.at_basis(spec.top_index()).is_zero();
  if (by_rank != closed_form) {
    throw Error(ErrorKind::internal_inconsistency,
                "Frobenius rank test (rank " + std::to_string(r) +
                    ") disagrees with the closed form for phi = " + phi.to_string());
  }
  return {by_rank, r, closed_form};
}

IntegralSpaces integral_spaces(const SpecPtr& spec) {
  const std::size_t d = spec->dim();
  const std::size_t n = spec->n();
  Matrix right(spec->field(), n * d, d);
  Matrix left(spec->field(), n * d, d);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t xi = spec->generator_index(g);
    for (std::size_t col = 0; col < d; ++col) {
      const long r_target = spec->product_index(col, xi);
      if (r_target >= 0) right(g * d + static_cast<std::size_t>(r_target), col) = spec->bracket(col, xi);
      const long l_target = spec->product_index(xi, col);
      if (l_target >= 0) left(g * d + static_cast<std::size_t>(l_target), col) = spec->bracket(xi, col);
    }
  }
  IntegralSpaces out;
  const std::vector<Vector> right_basis = nullspace(right);
  const std::vector<Vector> left_basis = nullspace(left);
  for (const Vector& v : right_basis) out.right.push_back(AlgElem::from_vector(spec, v));
  for (const Vector& v : left_basis) out.left.push_back(AlgElem::from_vector(spec, v));
  out.unimodular = same_span(spec->field(), d, right_basis, left_basis);
  return out;
}

SymmetryCriterion symmetric_criterion(const AlgebraSpec& spec) {
  SymmetryCriterion out;
  out.symmetric = true;
  for (std::size_t j = 0; j < spec.n(); ++j) {
    Scalar product = Scalar::one(spec.field());
    for (std::size_t i = 0; i < spec.n(); ++i) product *= (-spec.q(i, j)).pow(spec.a()[i] - 1);
    const bool ok = product.is_one();
    out.products.push_back(product);
    out.per_column.push_back(ok);
    out.symmetric = out.symmetric && ok;
  }
  return out;
}

bool form_is_symmetric(const Functional& phi) {
  const SpecPtr& spec = phi.spec();
  for (std::size_t u = 0; u < spec->dim(); ++u) {
    for (std::size_t v = u + 1; v < spec->dim(); ++v) {
      const AlgElem xu = AlgElem::basis(spec, u);
      const AlgElem xv = AlgElem::basis(spec, v);
      if (!(phi(xu * xv) == phi(xv * xu))) return false;
    }
  }
  return true;
}

}  // namespace qci
