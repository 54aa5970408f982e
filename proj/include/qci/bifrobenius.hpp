#ifndef QCI_BIFROBENIUS_HPP
#define QCI_BIFROBENIUS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qci/coalgebra.hpp"

namespace qci {

/// The coefficients g_{v, a-1-v} of the top-element split, keyed by v.
///
/// Invariants: defined on every v in V, all values nonzero, and
/// g_{0,a-1} = 1 = g_{a-1,0}.
class GAssignment {
 public:
  /// `values[i]` is g_{v_i, a-1-v_i} for the i-th basis vector.  Throws
  /// ErrorKind::precondition when an invariant fails.
  static GAssignment create(SpecPtr spec, std::vector<Scalar> values);
  static GAssignment all_ones(SpecPtr spec);

  const SpecPtr& spec() const { return spec_; }
  /// g_{v, a-1-v}
  const Scalar& at(std::size_t index) const { return values_.at(index); }
  const Scalar& at(const ExponentVec& v) const { return at(spec_->index_of(v)); }
  /// g_{a-1-v, v}
  const Scalar& paired(std::size_t index) const { return at(spec_->complement_index(index)); }
  const std::vector<Scalar>& values() const { return values_; }

  /// Sign choices h_i made by solve_g; empty for assignments from elsewhere.
  const std::vector<Scalar>& h() const { return h_; }
  GAssignment with_h(std::vector<Scalar> h) const;

  friend bool operator==(const GAssignment& x, const GAssignment& y) {
    return same_algebra(x.spec_, y.spec_) && x.values_ == y.values_;
  }

 private:
  GAssignment(SpecPtr spec, std::vector<Scalar> values)
      : spec_(std::move(spec)), values_(std::move(values)) {}

  SpecPtr spec_;
  std::vector<Scalar> values_;
  std::vector<Scalar> h_;
};

inline constexpr const char* kGCoproductKind = "paper31";
inline constexpr const char* kPathCoproductKind = "path61";
inline constexpr const char* kSignedCoproductKind = "signed62";

/// Every monomial other than 1 and x_{a-1} primitive; the top monomial
/// splits as Delta(x_{a-1}) = sum_v g_{v,a-1-v} x_v (x) x_{a-1-v}.
CoproductTable build_g_coproduct(const GAssignment& g);

/// Delta(x_v) = sum_{v1+v2=v} x_{v1} (x) x_{v2}.  Meant for q = -1; other q
/// are accepted and flagged in the table notes.
CoproductTable build_path_coproduct(const SpecPtr& spec);

/// Delta(x_v) = sum_{v1,v2 <= v <= v1+v2} (-1)^|v1+v2-v| x_{v1} (x) x_{v2}.
/// Bi-Frobenius only for all ai = 2 and q = -1; other specs are flagged.
CoproductTable build_signed_coproduct(const SpecPtr& spec);

/// Sign-twisted coefficients making the g-coproduct bi-Frobenius when all
/// qij = +-1.  Preconditions: qij^2 = 1, and sqrt(-1) in k unless q = -1.
///
/// Per generator, g_{a-1-ei, ei} = h_i prod_j s_ij^(aj-1) with s_ij =
/// sqrt_of(-qij); the h_i are all 1 unless P = prod_{i<j} (-qij)^((ai-1)(aj-1))
/// is -1, in which case the first generator with even ai gets h = -1.  The
/// rest follows multiplicatively, g_{a-1-v, v} = prod_i g_{a-1-ei, ei}^vi.
/// Before returning, the normalisation, the multiplicativity and squaring
/// conditions and g^2 = +-1 are all re-checked; a failure throws
/// ErrorKind::internal_inconsistency.
GAssignment solve_g(const SpecPtr& spec);

/// S as a matrix on the monomial basis.
class AntipodeMap {
 public:
  AntipodeMap(SpecPtr spec, Matrix matrix);

  const SpecPtr& spec() const { return spec_; }
  const Matrix& matrix() const { return matrix_; }
  AlgElem apply(const AlgElem& x) const;
  AlgElem image_of_basis(std::size_t index) const;

  static AntipodeMap identity(SpecPtr spec);

  friend bool operator==(const AntipodeMap& x, const AntipodeMap& y) {
    return same_algebra(x.spec_, y.spec_) && x.matrix_ == y.matrix_;
  }

 private:
  SpecPtr spec_;
  Matrix matrix_;
};

/// S(a) = sum phi(t1 a) t2
AntipodeMap antipode(const Functional& phi, const AlgElem& t, const CoproductTable& d);

/// S(1) = 1 and S(x_u x_v) = S(x_v) S(x_u) on all basis pairs.
CheckResult check_anti_algebra_hom(const AntipodeMap& s);
/// eps o S = eps and Delta(S(x_v)) = sum S(v2) (x) S(v1) on the basis.
CheckResult check_anti_coalgebra_hom(const AntipodeMap& s, const CoproductTable& d);

bool s_fourth_power_check(const AntipodeMap& s);

/// (A, phi, t, S) with S derived from the other three.
class BiFrobeniusCandidate {
 public:
  BiFrobeniusCandidate(CoproductTable coproduct, Functional phi, AlgElem t);

  const SpecPtr& spec() const { return coproduct_.spec(); }
  const CoproductTable& coproduct() const { return coproduct_; }
  const Functional& phi() const { return phi_; }
  const AlgElem& t() const { return t_; }
  const AntipodeMap& s() const { return s_; }

 private:
  CoproductTable coproduct_;
  Functional phi_;
  AlgElem t_;
  AntipodeMap s_;
};

struct VerificationReport {
  /// Checks entering the verdict, in a fixed order.
  std::vector<CheckResult> checks;
  /// right integral / right cointegral / S^4 = Id; reported, not judged.
  std::vector<CheckResult> informational;
  std::vector<std::string> notes;

  bool overall() const;
  const CheckResult* find(const std::string& name) const;
};

/// Runs the coalgebra axioms and every bi-Frobenius condition: counit is an
/// algebra map, 1 is group-like, (A, phi) Frobenius algebra, (A, t)
/// Frobenius coalgebra, S anti-algebra and anti-coalgebra morphism.
VerificationReport verify_bifrobenius(const BiFrobeniusCandidate& candidate);

/// Conditions on a g-assignment: q^2 = 1, normalisation, multiplicativity
/// g_{a-1-(u+v),u+v} = g_{a-1-u,u} g_{a-1-v,v} for u+v <= a-1, and
/// g_{v,a-1-v}^2 = q^-<v|a-1-v> q^-<a-1-v|v>.
std::vector<CheckResult> check_g_conditions(const GAssignment& g);

inline constexpr std::uint64_t kDefaultSearchBound = 1'000'000;

struct GSearchResult {
  std::uint64_t examined = 0;
  std::vector<GAssignment> passing;  // lexicographic order on the free values
};

/// Tries every nonzero value for each of the dim A - 2 free coefficients
/// over F_p.  Throws ErrorKind::search_too_large when (p-1)^(dim-2) > bound,
/// and ErrorKind::unsupported over non-prime fields.
GSearchResult exhaustive_g_search(const SpecPtr& spec, std::uint64_t bound = kDefaultSearchBound,
                                  unsigned threads = 0);

using CijTuple = std::array<Scalar, 4>;  // c11, c12, c21, c22

struct CijSolutions {
  std::vector<CijTuple> solutions;
  std::uint64_t examined = 0;
  std::string scope;
};

/// All (c11, c12, c21, c22) in F_p^4 satisfying the necessary system derived
/// for A(q, 2, 2): the three cubic coefficient equations, invertibility of
/// [[c11, c12], [c21, c22]], (c21 c22)(1-q) = 0, c11 c12 (1-q) = 0 and
/// c12 c21 - q c11 c22 = q^2.
CijSolutions aq_cij_solutions(const Scalar& q);

/// Residuals of the cubic coefficient equations; all zero on a solution.
std::array<Scalar, 3> cij_equation_residuals(const Scalar& q, const CijTuple& c);

}  // namespace qci

#endif  // QCI_BIFROBENIUS_HPP
