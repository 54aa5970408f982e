#ifndef QCI_ALGEBRA_HPP
#define QCI_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qci/linalg.hpp"
#include "qci/scalars.hpp"

namespace qci {

/// Exponent vector v indexing the monomial x_v = x1^v1 ... xn^vn.
class ExponentVec {
 public:
  ExponentVec() = default;
  explicit ExponentVec(std::vector<int> components) : c_(std::move(components)) {}
  ExponentVec(std::initializer_list<int> components) : c_(components) {}

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  const std::vector<int>& components() const { return c_; }

  /// Total degree |v|.
  int degree() const;
  /// Componentwise partial order u <= v.
  bool leq(const ExponentVec& other) const;
  bool is_zero() const;

  friend ExponentVec operator+(const ExponentVec& u, const ExponentVec& v);
  friend ExponentVec operator-(const ExponentVec& u, const ExponentVec& v);
  friend auto operator<=>(const ExponentVec&, const ExponentVec&) = default;
  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;

  /// "(1,2)"
  std::string to_string() const;

 private:
  std::vector<int> c_;
};

class AlgebraSpec;
using SpecPtr = std::shared_ptr<const AlgebraSpec>;

/// The quantum complete intersection A(q, a1, ..., an):
///
///   k<x1..xn> / (xi^ai, xi xj + qij xj xi),  qii = -1, qij qji = 1.
///
/// Owns the lexicographic basis indexing every matrix in the library and
/// precomputed structure constants x_u x_v = q^<u|v> x_{u+v}.
class AlgebraSpec {
 public:
  /// Validates n >= 2, ai >= 2, the q-matrix shape, its field and the
  /// relations qii = -1, qij qji = 1.  Violations throw ErrorKind::invalid_spec.
  static SpecPtr create(FieldDescriptor field, std::vector<int> a,
                        std::vector<std::vector<Scalar>> q);
  /// Convenience: every off-diagonal qij equal to `off_diagonal` (must be +-1
  /// for the relations to hold).
  static SpecPtr uniform(FieldDescriptor field, std::vector<int> a, const Scalar& off_diagonal);

  const FieldDescriptor& field() const { return field_; }
  std::size_t n() const { return a_.size(); }
  const std::vector<int>& a() const { return a_; }
  const Scalar& q(std::size_t i, std::size_t j) const { return q_[i][j]; }
  const std::vector<std::vector<Scalar>>& q_matrix() const { return q_; }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<ExponentVec>& basis() const { return basis_; }
  const ExponentVec& basis_vector(std::size_t index) const { return basis_[index]; }
  bool contains(const ExponentVec& v) const;
  /// Throws ErrorKind::precondition for vectors outside V.
  std::size_t index_of(const ExponentVec& v) const;

  /// a - 1, the exponent of the top monomial.
  const ExponentVec& top() const { return basis_.back(); }
  std::size_t top_index() const { return basis_.size() - 1; }
  ExponentVec generator(std::size_t i) const;
  std::size_t generator_index(std::size_t i) const { return index_of(generator(i)); }
  /// Index of a - 1 - v.
  std::size_t complement_index(std::size_t index) const { return top_index() - index; }

  /// q^<u|v> by basis index.
  const Scalar& bracket(std::size_t u, std::size_t v) const { return bracket_[u * dim() + v]; }
  /// Index of u + v, or -1 when some component reaches ai.
  long product_index(std::size_t u, std::size_t v) const { return product_[u * dim() + v]; }

  /// True when all qij = -1 (the commutative case).
  bool is_commutative_q() const;
  bool q_squares_to_one() const;

  friend bool operator==(const AlgebraSpec& x, const AlgebraSpec& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.q_ == y.q_;
  }

 private:
  AlgebraSpec(FieldDescriptor field, std::vector<int> a, std::vector<std::vector<Scalar>> q);

  FieldDescriptor field_;
  std::vector<int> a_;
  std::vector<std::vector<Scalar>> q_;
  std::vector<int> strides_;
  std::vector<ExponentVec> basis_;
  std::vector<Scalar> bracket_;
  std::vector<long> product_;
};

bool same_algebra(const SpecPtr& x, const SpecPtr& y);

/// Element of A as a sparse combination of basis monomials.  Keys are basis
/// indices (lexicographic order of exponent vectors); zero coefficients are
/// never stored.
class AlgElem {
 public:
  explicit AlgElem(SpecPtr spec);
  static AlgElem unit(SpecPtr spec);
  static AlgElem basis(SpecPtr spec, std::size_t index, const Scalar& coeff);
  static AlgElem basis(SpecPtr spec, std::size_t index);
  static AlgElem monomial(SpecPtr spec, const ExponentVec& v);
  static AlgElem from_vector(SpecPtr spec, const Vector& coeffs);

  const SpecPtr& spec() const { return spec_; }
  const std::map<std::size_t, Scalar>& terms() const { return terms_; }
  Scalar coeff_at(std::size_t index) const;
  Scalar coeff(const ExponentVec& v) const { return coeff_at(spec_->index_of(v)); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::size_t index, const Scalar& coeff);
  AlgElem scaled(const Scalar& c) const;
  Vector to_vector() const;

  /// "1+x2^2", "3*x1x2", "0".
  std::string to_string() const;

  friend AlgElem operator+(const AlgElem& x, const AlgElem& y);
  friend AlgElem operator-(const AlgElem& x, const AlgElem& y);
  /// elem_mul
  friend AlgElem operator*(const AlgElem& x, const AlgElem& y);
  friend bool operator==(const AlgElem& x, const AlgElem& y);

 private:
  SpecPtr spec_;
  std::map<std::size_t, Scalar> terms_;
};

/// Name of the monomial x_v, "1" for v = 0.
std::string monomial_name(const ExponentVec& v);

/// Linear functional on A stored on the dual basis {x_v*}; shares the
/// AlgElem container with pairing x_u*(x_v) = delta_uv.
class Functional {
 public:
  explicit Functional(AlgElem coefficients) : c_(std::move(coefficients)) {}
  static Functional dual_basis(SpecPtr spec, std::size_t index);
  /// Sum of all dual basis functionals.
  static Functional sum_of_duals(SpecPtr spec);

  const AlgElem& coefficients() const { return c_; }
  const SpecPtr& spec() const { return c_.spec(); }
  Scalar at_basis(std::size_t index) const { return c_.coeff_at(index); }
  Scalar operator()(const AlgElem& x) const;
  Functional scaled(const Scalar& c) const { return Functional(c_.scaled(c)); }

  std::string to_string() const;

  friend bool operator==(const Functional& x, const Functional& y) { return x.c_ == y.c_; }

 private:
  AlgElem c_;
};

std::vector<ExponentVec> enumerate_basis(const AlgebraSpec& spec);

/// q^<u|v> = prod_{i<j} (-1/qij)^(uj vi), evaluated directly.
Scalar q_bracket(const AlgebraSpec& spec, const ExponentVec& u, const ExponentVec& v);

AlgElem mono_mul(const SpecPtr& spec, const ExponentVec& u, const ExponentVec& v);
AlgElem elem_mul(const AlgElem& x, const AlgElem& y);

/// eps(x_v) = delta_{v,0}
Scalar counit_std(const AlgebraSpec& spec, const ExponentVec& v);

struct FrobeniusFunctionalResult {
  bool frobenius;
  std::size_t rank;
  bool closed_form;  // coefficient of x_{a-1}* is nonzero
};

/// Rank test of the form (x, y) -> phi(xy) on the monomial basis,
/// cross-checked against the closed form c_{a-1} != 0.  A disagreement
/// throws ErrorKind::internal_inconsistency.
FrobeniusFunctionalResult is_frobenius_functional(const Functional& phi);

/// Matrix of (u, v) -> phi(x_u x_v).
Matrix bilinear_form(const Functional& phi);

struct IntegralSpaces {
  std::vector<AlgElem> right;
  std::vector<AlgElem> left;
  bool unimodular;
};

/// Right integrals t with t xi = 0 for every generator, left ones with
/// xi t = 0, both via nullspaces.
IntegralSpaces integral_spaces(const SpecPtr& spec);

struct SymmetryCriterion {
  std::vector<Scalar> products;  // prod_i (-qij)^(ai-1), one per j
  std::vector<bool> per_column;
  bool symmetric;
};

SymmetryCriterion symmetric_criterion(const AlgebraSpec& spec);

/// Brute-force check that phi(xy) = phi(yx) on all basis pairs.
bool form_is_symmetric(const Functional& phi);

}  // namespace qci

#endif  // QCI_ALGEBRA_HPP
