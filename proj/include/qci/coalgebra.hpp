#ifndef QCI_COALGEBRA_HPP
#define QCI_COALGEBRA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qci/algebra.hpp"

namespace qci {

/// Element of A (x) A over the basis pairs x_u (x) x_v.
class TensorElem {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  explicit TensorElem(SpecPtr spec) : spec_(std::move(spec)) {}

  const SpecPtr& spec() const { return spec_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Scalar coeff(std::size_t u, std::size_t v) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::size_t u, std::size_t v, const Scalar& c);
  TensorElem scaled(const Scalar& c) const;
  /// Swap of tensor factors.
  TensorElem twisted() const;
  Vector to_vector() const;

  /// "x1(x)x2-2*x1x2(x)1"
  std::string to_string() const;

  friend TensorElem operator+(const TensorElem& x, const TensorElem& y);
  friend TensorElem operator-(const TensorElem& x, const TensorElem& y);
  friend bool operator==(const TensorElem& x, const TensorElem& y);

 private:
  SpecPtr spec_;
  std::map<Key, Scalar> terms_;
};

TensorElem tensor(const AlgElem& x, const AlgElem& y);

/// A failed identity: where it failed and both sides, rendered.
struct Witness {
  std::vector<ExponentVec> at;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::vector<Witness> witnesses;
  std::string note;

  void fail(Witness w);
};

/// Coproduct and counit stored as explicit tables on the monomial basis.
class CoproductTable {
 public:
  /// `images[i]` is Delta(x_i); the counit defaults to eps(x_v) = delta_{v,0}.
  CoproductTable(SpecPtr spec, std::vector<TensorElem> images, std::string kind);

  const SpecPtr& spec() const { return spec_; }
  const std::string& kind() const { return kind_; }
  const std::vector<TensorElem>& images() const { return images_; }
  const TensorElem& image(std::size_t index) const { return images_.at(index); }
  const Scalar& counit_at(std::size_t index) const { return counit_.at(index); }
  const std::vector<std::string>& notes() const { return notes_; }

  TensorElem apply(const AlgElem& x) const;
  Scalar counit(const AlgElem& x) const;

  /// Copies with one entry replaced; used for third-party and mutated tables.
  CoproductTable with_image(std::size_t index, TensorElem image) const;
  CoproductTable with_counit(std::size_t index, const Scalar& value) const;
  CoproductTable with_kind(std::string kind) const;
  CoproductTable with_note(std::string note) const;

  friend bool operator==(const CoproductTable& x, const CoproductTable& y) {
    return same_algebra(x.spec_, y.spec_) && x.images_ == y.images_ && x.counit_ == y.counit_;
  }

 private:
  SpecPtr spec_;
  std::vector<TensorElem> images_;
  std::vector<Scalar> counit_;
  std::string kind_;
  std::vector<std::string> notes_;
};

/// (Delta (x) Id) Delta = (Id (x) Delta) Delta on every basis vector.
CheckResult check_coassociativity(const CoproductTable& d);
/// (eps (x) Id) Delta = Id = (Id (x) eps) Delta on every basis vector.
CheckResult check_counit(const CoproductTable& d);

/// f -> c = sum c1 f(c2)
AlgElem dual_left_action(const Functional& f, const AlgElem& c, const CoproductTable& d);
/// c <- f = sum f(c1) c2
AlgElem dual_right_action(const AlgElem& c, const Functional& f, const CoproductTable& d);
/// Convolution product on A*: (fg)(x) = sum f(x1) g(x2).
Functional convolution(const Functional& f, const Functional& g, const CoproductTable& d);

struct FrobeniusCoalgebraResult {
  bool frobenius;
  std::size_t rank;
};

/// Rank of {t <- x_v* : v in V}; Frobenius iff it equals dim A.
FrobeniusCoalgebraResult is_frobenius_coalgebra(const CoproductTable& d, const AlgElem& t);

struct CointegralSpaces {
  std::vector<Functional> right;  // x <- phi = phi(x) 1
  std::vector<Functional> left;   // phi -> x = phi(x) 1
  bool counimodular;
};

/// Requires 1 to be group-like in d (ErrorKind::precondition otherwise).
CointegralSpaces cointegral_spaces(const CoproductTable& d);

struct PrimitiveSpace {
  std::vector<AlgElem> basis;
  std::size_t dim;
};

/// Kernel of x -> Delta(x) - 1(x)x - x(x)1 over all of A.
PrimitiveSpace primitive_space(const CoproductTable& d);

/// Delta(c) = c (x) c and eps(c) = 1.
bool grouplike_check(const CoproductTable& d, const AlgElem& c);

/// tau o Delta = Delta.
bool is_cocommutative(const CoproductTable& d);

struct InvariantComparison {
  bool distinguished;
  std::string certificate;  // non-isomorphism reason, or "inconclusive"
  std::size_t primitive_dim_first;
  std::size_t primitive_dim_second;
  bool cocommutative_first;
  bool cocommutative_second;
};

/// Compares coalgebra isomorphism invariants.  Never claims isomorphism:
/// equal invariants yield "inconclusive".
InvariantComparison coalgebra_invariant_compare(const CoproductTable& d1, const CoproductTable& d2);

}  // namespace qci

#endif  // QCI_COALGEBRA_HPP
