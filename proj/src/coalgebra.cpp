#include "qci/coalgebra.hpp"

#include <array>

namespace qci {
namespace {

constexpr std::size_t kMaxWitnesses = 16;

using TripleKey = std::array<std::size_t, 3>;
using TripleTensor = std::map<TripleKey, Scalar>;

void add_triple(TripleTensor& t, const TripleKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::string render_factor_term(const Scalar& c, const std::string& name) {
  if (c.is_one()) return name;
  if ((-c).is_one() && c.rational_sign() != 0) return "-" + name;
  std::string coeff = c.to_string();
  if (!c.is_real()) coeff = "(" + coeff + ")";
  return coeff + "*" + name;
}

std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    s += parts[k].front() == '-' ? parts[k] : "+" + parts[k];
  }
  return s;
}

std::string render_triple(const AlgebraSpec& spec, const TripleTensor& t) {
  std::vector<std::string> parts;
  for (const auto& [key, c] : t) {
    const std::string name = monomial_name(spec.basis_vector(key[0])) + "(x)" +
                             monomial_name(spec.basis_vector(key[1])) + "(x)" +
                             monomial_name(spec.basis_vector(key[2]));
    parts.push_back(render_factor_term(c, name));
  }
  return join(parts);
}

void require_same_spec(const SpecPtr& x, const SpecPtr& y) {
  if (!same_algebra(x, y)) {
    throw Error(ErrorKind::descriptor_mismatch, "operands belong to different algebras");
  }
}

}  // namespace

void CheckResult::fail(Witness w) {
  passed = false;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

Scalar TensorElem::coeff(std::size_t u, std::size_t v) const {
  const auto it = terms_.find({u, v});
  return it == terms_.end() ? Scalar::zero(spec_->field()) : it->second;
}

void TensorElem::add_term(std::size_t u, std::size_t v, const Scalar& c) {
  if (u >= spec_->dim() || v >= spec_->dim()) {
    throw Error(ErrorKind::precondition, "tensor basis index out of range");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{u, v}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElem TensorElem::scaled(const Scalar& c) const {
  TensorElem out(spec_);
  for (const auto& [key, x] : terms_) out.add_term(key.first, key.second, x * c);
  return out;
}

TensorElem TensorElem::twisted() const {
  TensorElem out(spec_);
  for (const auto& [key, x] : terms_) out.add_term(key.second, key.first, x);
  return out;
}

Vector TensorElem::to_vector() const {
  const std::size_t d = spec_->dim();
  Vector out = zero_vector(spec_->field(), d * d);
  for (const auto& [key, x] : terms_) out[key.first * d + key.second] = x;
  return out;
}

std::string TensorElem::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [key, c] : terms_) {
    const std::string name = monomial_name(spec_->basis_vector(key.first)) + "(x)" +
                             monomial_name(spec_->basis_vector(key.second));
    parts.push_back(render_factor_term(c, name));
  }
  return join(parts);
}

TensorElem operator+(const TensorElem& x, const TensorElem& y) {
  require_same_spec(x.spec_, y.spec_);
  TensorElem out = x;
  for (const auto& [key, c] : y.terms_) out.add_term(key.first, key.second, c);
  return out;
}

TensorElem operator-(const TensorElem& x, const TensorElem& y) {
  require_same_spec(x.spec_, y.spec_);
  TensorElem out = x;
  for (const auto& [key, c] : y.terms_) out.add_term(key.first, key.second, -c);
  return out;
}

bool operator==(const TensorElem& x, const TensorElem& y) {
  return same_algebra(x.spec_, y.spec_) && x.terms_ == y.terms_;
}

TensorElem tensor(const AlgElem& x, const AlgElem& y) {
  require_same_spec(x.spec(), y.spec());
  TensorElem out(x.spec());
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) out.add_term(u, v, cu * cv);
  }
  return out;
}

CoproductTable::CoproductTable(SpecPtr spec, std::vector<TensorElem> images, std::string kind)
    : spec_(std::move(spec)), images_(std::move(images)), kind_(std::move(kind)) {
  if (images_.size() != spec_->dim()) {
    throw Error(ErrorKind::dimension_mismatch, "coproduct table must have one image per basis vector");
  }
  for (const TensorElem& image : images_) require_same_spec(spec_, image.spec());
  counit_.reserve(spec_->dim());
  for (std::size_t i = 0; i < spec_->dim(); ++i) {
    counit_.push_back(counit_std(*spec_, spec_->basis_vector(i)));
  }
}

TensorElem CoproductTable::apply(const AlgElem& x) const {
  require_same_spec(spec_, x.spec());
  TensorElem out(spec_);
  for (const auto& [index, c] : x.terms()) out = out + images_[index].scaled(c);
  return out;
}

Scalar CoproductTable::counit(const AlgElem& x) const {
  require_same_spec(spec_, x.spec());
  Scalar sum = Scalar::zero(spec_->field());
  for (const auto& [index, c] : x.terms()) sum += counit_[index] * c;
  return sum;
}

CoproductTable CoproductTable::with_image(std::size_t index, TensorElem image) const {
  require_same_spec(spec_, image.spec());
  CoproductTable out = *this;
  out.images_.at(index) = std::move(image);
  return out;
}

CoproductTable CoproductTable::with_counit(std::size_t index, const Scalar& value) const {
  CoproductTable out = *this;
  out.counit_.at(index) = value;
  return out;
}

CoproductTable CoproductTable::with_kind(std::string kind) const {
  CoproductTable out = *this;
  out.kind_ = std::move(kind);
  return out;
}

CoproductTable CoproductTable::with_note(std::string note) const {
  CoproductTable out = *this;
  out.notes_.push_back(std::move(note));
  return out;
}

CheckResult check_coassociativity(const CoproductTable& d) {
  const AlgebraSpec& spec = *d.spec();
  CheckResult result{"coassociativity"};
  for (std::size_t v = 0; v < spec.dim(); ++v) {
    TripleTensor lhs;
    TripleTensor rhs;
    for (const auto& [key, c] : d.image(v).terms()) {
      const auto [w1, w2] = key;
      for (const auto& [inner, c1] : d.image(w1).terms()) {
        add_triple(lhs, {inner.first, inner.second, w2}, c * c1);
      }
      for (const auto& [inner, c2] : d.image(w2).terms()) {
        add_triple(rhs, {w1, inner.first, inner.second}, c * c2);
      }
    }
    if (lhs != rhs) {
      result.fail({{spec.basis_vector(v)}, render_triple(spec, lhs), render_triple(spec, rhs)});
    }
  }
  return result;
}

CheckResult check_counit(const CoproductTable& d) {
  const SpecPtr& spec = d.spec();
  CheckResult result{"counit"};
  for (std::size_t v = 0; v < spec->dim(); ++v) {
    AlgElem left(spec);
    AlgElem right(spec);
    for (const auto& [key, c] : d.image(v).terms()) {
      left.add_term(key.second, d.counit_at(key.first) * c);
      right.add_term(key.first, d.counit_at(key.second) * c);
    }
    const AlgElem expected = AlgElem::basis(spec, v);
    if (!(left == expected)) {
      result.fail({{spec->basis_vector(v)}, "(eps(x)Id)Delta = " + left.to_string(), expected.to_string()});
    }
    if (!(right == expected)) {
      result.fail({{spec->basis_vector(v)}, "(Id(x)eps)Delta = " + right.to_string(), expected.to_string()});
    }
  }
  return result;
}

AlgElem dual_left_action(const Functional& f, const AlgElem& c, const CoproductTable& d) {
  require_same_spec(f.spec(), c.spec());
  require_same_spec(d.spec(), c.spec());
  AlgElem out(c.spec());
  for (const auto& [index, alpha] : c.terms()) {
    for (const auto& [key, beta] : d.image(index).terms()) {
      const Scalar fv = f.at_basis(key.second);
      if (!fv.is_zero()) out.add_term(key.first, alpha * beta * fv);
    }
  }
  return out;
}

AlgElem dual_right_action(const AlgElem& c, const Functional& f, const CoproductTable& d) {
  require_same_spec(f.spec(), c.spec());
  require_same_spec(d.spec(), c.spec());
  AlgElem out(c.spec());
  for (const auto& [index, alpha] : c.terms()) {
    for (const auto& [key, beta] : d.image(index).terms()) {
      const Scalar fv = f.at_basis(key.first);
      if (!fv.is_zero()) out.add_term(key.second, alpha * beta * fv);
    }
  }
  return out;
}

Functional convolution(const Functional& f, const Functional& g, const CoproductTable& d) {
  require_same_spec(f.spec(), g.spec());
  const SpecPtr& spec = d.spec();
  AlgElem coeffs(spec);
  for (std::size_t i = 0; i < spec->dim(); ++i) {
    for (const auto& [key, beta] : d.image(i).terms()) {
      coeffs.add_term(i, beta * f.at_basis(key.first) * g.at_basis(key.second));
    }
  }
  return Functional(std::move(coeffs));
}

FrobeniusCoalgebraResult is_frobenius_coalgebra(const CoproductTable& d, const AlgElem& t) {
  const SpecPtr& spec = d.spec();
  std::vector<Vector> columns;
  columns.reserve(spec->dim());
  for (std::size_t v = 0; v < spec->dim(); ++v) {
    columns.push_back(dual_right_action(t, Functional::dual_basis(spec, v), d).to_vector());
  }
  const std::size_t r = rank(from_columns(spec->field(), spec->dim(), columns));
  return {r == spec->dim(), r};
}

CointegralSpaces cointegral_spaces(const CoproductTable& d) {
  const SpecPtr& spec = d.spec();
  if (!grouplike_check(d, AlgElem::unit(spec))) {
    throw Error(ErrorKind::precondition, "cointegrals need the unit to be group-like");
  }
  const std::size_t dim = spec->dim();
  const Scalar one = Scalar::one(spec->field());
  // Unknowns: coefficients phi_w of phi on the dual basis.  Row (i, u) of the
  // right system: sum_w phi_w Delta(x_i)[w, u] - delta_{u,0} phi_i = 0.
  Matrix right(spec->field(), dim * dim, dim);
  Matrix left(spec->field(), dim * dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (const auto& [key, c] : d.image(i).terms()) {
      right(i * dim + key.second, key.first) += c;
      left(i * dim + key.first, key.second) += c;
    }
    right(i * dim + 0, i) -= one;
    left(i * dim + 0, i) -= one;
  }
  CointegralSpaces out;
  const std::vector<Vector> right_basis = nullspace(right);
  const std::vector<Vector> left_basis = nullspace(left);
  for (const Vector& v : right_basis) out.right.emplace_back(AlgElem::from_vector(spec, v));
  for (const Vector& v : left_basis) out.left.emplace_back(AlgElem::from_vector(spec, v));
  out.counimodular = same_span(spec->field(), dim, right_basis, left_basis);
  return out;
}

PrimitiveSpace primitive_space(const CoproductTable& d) {
  const SpecPtr& spec = d.spec();
  const std::size_t dim = spec->dim();
  const AlgElem unit = AlgElem::unit(spec);
  std::vector<Vector> columns;
  columns.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const AlgElem xj = AlgElem::basis(spec, j);
    columns.push_back((d.image(j) - tensor(unit, xj) - tensor(xj, unit)).to_vector());
  }
  PrimitiveSpace out;
  for (const Vector& v : nullspace(from_columns(spec->field(), dim * dim, columns))) {
    out.basis.push_back(AlgElem::from_vector(spec, v));
  }
  out.dim = out.basis.size();
  return out;
}

bool grouplike_check(const CoproductTable& d, const AlgElem& c) {
  return d.apply(c) == tensor(c, c) && d.counit(c).is_one();
}

bool is_cocommutative(const CoproductTable& d) {
  for (const TensorElem& image : d.images()) {
    if (!(image.twisted() == image)) return false;
  }
  return true;
}

InvariantComparison coalgebra_invariant_compare(const CoproductTable& d1, const CoproductTable& d2) {
  if (!same_algebra(d1.spec(), d2.spec())) {
    throw Error(ErrorKind::precondition, "invariant comparison needs tables on the same algebra");
  }
  InvariantComparison out;
  out.primitive_dim_first = primitive_space(d1).dim;
  out.primitive_dim_second = primitive_space(d2).dim;
  out.cocommutative_first = is_cocommutative(d1);
  out.cocommutative_second = is_cocommutative(d2);
  if (out.primitive_dim_first != out.primitive_dim_second) {
    out.distinguished = true;
    out.certificate = "primitive space dimensions differ: " +
                      std::to_string(out.primitive_dim_first) +
                      " != " + std::to_string(out.primitive_dim_second);
  } else if (out.cocommutative_first != out.cocommutative_second) {
    out.distinguished = true;
    out.certificate = "exactly one of the coalgebras is cocommutative";
  } else {
    out.distinguished = false;
    out.certificate = "inconclusive";
  }
  return out;
}

}  // namespace qci
