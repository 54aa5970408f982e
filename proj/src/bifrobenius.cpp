#include "qci/bifrobenius.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace qci {
namespace {

void require_same_spec(const SpecPtr& x, const SpecPtr& y) {
  if (!same_algebra(x, y)) {
    throw Error(ErrorKind::descriptor_mismatch, "operands belong to different algebras");
  }
}

std::vector<AlgElem> antipode_columns(const AntipodeMap& s) {
  std::vector<AlgElem> out;
  out.reserve(s.spec()->dim());
  for (std::size_t w = 0; w < s.spec()->dim(); ++w) out.push_back(s.image_of_basis(w));
  return out;
}

bool has_top_split_hypotheses(const AlgebraSpec& spec) {
  return std::all_of(spec.a().begin(), spec.a().end(), [](int ai) { return ai == 2; }) &&
         spec.is_commutative_q();
}

// q^<u|v> for arbitrary u, v in V, via the cached table.
const Scalar& bracket_of(const AlgebraSpec& spec, const ExponentVec& u, const ExponentVec& v) {
  return spec.bracket(spec.index_of(u), spec.index_of(v));
}

}  // namespace

GAssignment GAssignment::create(SpecPtr spec, std::vector<Scalar> values) {
  if (values.size() != spec->dim()) {
    throw Error(ErrorKind::precondition, "g-assignment needs one value per basis vector, got " +
                                             std::to_string(values.size()) + " for dimension " +
                                             std::to_string(spec->dim()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i].field() == spec->field())) {
      throw Error(ErrorKind::descriptor_mismatch, "g-value outside the algebra's field");
    }
    if (values[i].is_zero()) {
      throw Error(ErrorKind::precondition,
                  "g-value at " + spec->basis_vector(i).to_string() + " is zero");
    }
  }
  if (!values.front().is_one() || !values.back().is_one()) {
    throw Error(ErrorKind::precondition, "g_{0,a-1} and g_{a-1,0} must both be 1");
  }
  return GAssignment(std::move(spec), std::move(values));
}

GAssignment GAssignment::all_ones(SpecPtr spec) {
  std::vector<Scalar> values(spec->dim(), Scalar::one(spec->field()));
  return create(std::move(spec), std::move(values));
}

GAssignment GAssignment::with_h(std::vector<Scalar> h) const {
  GAssignment copy = *this;
  copy.h_ = std::move(h);
  return copy;
}

CoproductTable build_g_coproduct(const GAssignment& g) {
  const SpecPtr& spec = g.spec();
  const std::size_t dim = spec->dim();
  const std::size_t top = spec->top_index();
  const Scalar one = Scalar::one(spec->field());
  std::vector<TensorElem> images;
  images.reserve(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    TensorElem image(spec);
    if (v == 0) {
      image.add_term(0, 0, one);
    } else if (v == top) {
      for (std::size_t w = 0; w < dim; ++w) image.add_term(w, spec->complement_index(w), g.at(w));
    } else {
      image.add_term(0, v, one);
      image.add_term(v, 0, one);
    }
    images.push_back(std::move(image));
  }
  return CoproductTable(spec, std::move(images), kGCoproductKind);
}

CoproductTable build_path_coproduct(const SpecPtr& spec) {
  const std::size_t dim = spec->dim();
  const Scalar one = Scalar::one(spec->field());
  std::vector<TensorElem> images;
  images.reserve(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    const ExponentVec& target = spec->basis_vector(v);
    TensorElem image(spec);
    for (std::size_t w = 0; w < dim; ++w) {
      const ExponentVec& first = spec->basis_vector(w);
      if (first.leq(target)) image.add_term(w, spec->index_of(target - first), one);
    }
    images.push_back(std::move(image));
  }
  CoproductTable table(spec, std::move(images), kPathCoproductKind);
  if (!spec->is_commutative_q()) {
    table = table.with_note("path coproduct on a non-commutative q; built as requested");
  }
  return table;
}

CoproductTable build_signed_coproduct(const SpecPtr& spec) {
  const std::size_t dim = spec->dim();
  const Scalar one = Scalar::one(spec->field());
  std::vector<TensorElem> images;
  images.reserve(dim);
  for (std::size_t v = 0; v < dim; ++v) {
    const ExponentVec& target = spec->basis_vector(v);
    TensorElem image(spec);
    for (std::size_t w1 = 0; w1 < dim; ++w1) {
      const ExponentVec& v1 = spec->basis_vector(w1);
      if (!v1.leq(target)) continue;
      for (std::size_t w2 = 0; w2 < dim; ++w2) {
        const ExponentVec& v2 = spec->basis_vector(w2);
        if (!v2.leq(target)) continue;
        const ExponentVec sum = v1 + v2;
        if (!target.leq(sum)) continue;
        const int excess = (sum - target).degree();
        image.add_term(w1, w2, excess % 2 == 0 ? one : -one);
      }
    }
    images.push_back(std::move(image));
  }
  CoproductTable table(spec, std::move(images), kSignedCoproductKind);
  if (!has_top_split_hypotheses(*spec)) {
    table = table.with_note(
        "signed coproduct outside its bi-Frobenius range (needs every ai = 2 and q = -1)");
  }
  return table;
}

GAssignment solve_g(const SpecPtr& spec) {
  const AlgebraSpec& sp = *spec;
  const FieldDescriptor& field = sp.field();
  const std::size_t n = sp.n();
  const Scalar one = Scalar::one(field);
  if (!sp.q_squares_to_one()) {
    throw Error(ErrorKind::precondition, "q^2 = 1 fails for some qij; no g-coefficients exist");
  }
  if (!sp.is_commutative_q() && !field.has_sqrt_minus_one()) {
    throw Error(ErrorKind::field_insufficient,
                "sqrt(-1) is not in " + field.to_string() + " and q is not -1 everywhere");
  }

  std::vector<Scalar> generator_values;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar value = one;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::optional<Scalar> s = sqrt_of(-sp.q(i, j));
      if (!s) {
        throw Error(ErrorKind::field_insufficient,
                    "no square root of " + (-sp.q(i, j)).to_string() + " in " + field.to_string());
      }
      value *= s->pow(sp.a()[j] - 1);
    }
    generator_values.push_back(value);
  }

  Scalar parity = one;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      parity *= (-sp.q(i, j)).pow(static_cast<long long>(sp.a()[i] - 1) * (sp.a()[j] - 1));
    }
  }
  std::vector<Scalar> h(n, one);
  if (!parity.is_one()) {
    const auto even = std::find_if(sp.a().begin(), sp.a().end(), [](int ai) { return ai % 2 == 0; });
    if (even == sp.a().end()) {
      throw Error(ErrorKind::internal_inconsistency,
                  "sign product is -1 but every ai is odd; no sign flip available");
    }
    const std::size_t i0 = static_cast<std::size_t>(even - sp.a().begin());
    h[i0] = -one;
    generator_values[i0] = -generator_values[i0];
  }

  // values[v] = g_{v,a-1-v}; the multiplicative rule fixes g_{a-1-w,w}.
  std::vector<Scalar> values(sp.dim(), one);
  for (std::size_t w = 0; w < sp.dim(); ++w) {
    Scalar value = one;
    const ExponentVec& exps = sp.basis_vector(w);
    for (std::size_t i = 0; i < n; ++i) value *= generator_values[i].pow(exps[i]);
    values[sp.complement_index(w)] = value;
  }
  if (!values.front().is_one()) {
    throw Error(ErrorKind::internal_inconsistency,
                "prod_i g_{a-1-ei,ei}^(ai-1) = " + values.front().to_string() + ", expected 1");
  }

  GAssignment g = GAssignment::create(spec, std::move(values)).with_h(std::move(h));
  for (const CheckResult& check : check_g_conditions(g)) {
    if (!check.passed) {
      throw Error(ErrorKind::internal_inconsistency, "solved g-coefficients fail " + check.name);
    }
  }
  for (const Scalar& value : g.values()) {
    const Scalar sq = value * value;
    if (!sq.is_one() && !(-sq).is_one()) {
      throw Error(ErrorKind::internal_inconsistency, "solved g-coefficient squares to " + sq.to_string());
    }
  }
  return g;
}

AntipodeMap::AntipodeMap(SpecPtr spec, Matrix matrix)
    : spec_(std::move(spec)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != spec_->dim() || matrix_.cols() != spec_->dim()) {
    throw Error(ErrorKind::dimension_mismatch, "antipode matrix must be dim A x dim A");
  }
}

AlgElem AntipodeMap::image_of_basis(std::size_t index) const {
  return AlgElem::from_vector(spec_, matrix_.column(index));
}

AlgElem AntipodeMap::apply(const AlgElem& x) const {
  require_same_spec(spec_, x.spec());
  return AlgElem::from_vector(spec_, matrix_ * x.to_vector());
}

AntipodeMap AntipodeMap::identity(SpecPtr spec) {
  Matrix m = Matrix::identity(spec->field(), spec->dim());
  return AntipodeMap(std::move(spec), std::move(m));
}

AntipodeMap antipode(const Functional& phi, const AlgElem& t, const CoproductTable& d) {
  require_same_spec(phi.spec(), t.spec());
  require_same_spec(d.spec(), t.spec());
  const SpecPtr& spec = d.spec();
  const AlgebraSpec& sp = *spec;
  Matrix m(sp.field(), sp.dim(), sp.dim());
  const TensorElem dt = d.apply(t);
  for (std::size_t w = 0; w < sp.dim(); ++w) {
    for (const auto& [key, c] : dt.terms()) {
      const long product = sp.product_index(key.first, w);
      if (product < 0) continue;
      const Scalar value = phi.at_basis(static_cast<std::size_t>(product));
      if (value.is_zero()) continue;
      m(key.second, w) += c * sp.bracket(key.first, w) * value;
    }
  }
  return AntipodeMap(spec, std::move(m));
}

CheckResult check_anti_algebra_hom(const AntipodeMap& s) {
  const SpecPtr& spec = s.spec();
  const AlgebraSpec& sp = *spec;
  CheckResult result{"S-anti-algebra"};
  const std::vector<AlgElem> images = antipode_columns(s);
  const AlgElem unit = AlgElem::unit(spec);
  if (!(images[0] == unit)) {
    result.fail({{sp.basis_vector(0)}, "S(1) = " + images[0].to_string(), unit.to_string()});
  }
  for (std::size_t u = 0; u < sp.dim(); ++u) {
    for (std::size_t v = 0; v < sp.dim(); ++v) {
      const long product = sp.product_index(u, v);
      const AlgElem lhs = product < 0 ? AlgElem(spec)
                                      : images[static_cast<std::size_t>(product)].scaled(
                                            sp.bracket(u, v));
      const AlgElem rhs = images[v] * images[u];
      if (!(lhs == rhs)) {
        const std::string pair =
            monomial_name(sp.basis_vector(u)) + "*" + monomial_name(sp.basis_vector(v));
        result.fail({{sp.basis_vector(u), sp.basis_vector(v)},
                     "S(" + pair + ") = " + lhs.to_string(),
                     rhs.to_string()});
      }
    }
  }
  return result;
}

CheckResult check_anti_coalgebra_hom(const AntipodeMap& s, const CoproductTable& d) {
  require_same_spec(s.spec(), d.spec());
  const SpecPtr& spec = s.spec();
  const AlgebraSpec& sp = *spec;
  CheckResult result{"S-anti-coalgebra"};
  const std::vector<AlgElem> images = antipode_columns(s);
  for (std::size_t w = 0; w < sp.dim(); ++w) {
    const Scalar lhs = d.counit(images[w]);
    if (!(lhs == d.counit_at(w))) {
      result.fail({{sp.basis_vector(w)}, "eps(S(x)) = " + lhs.to_string(),
                   d.counit_at(w).to_string()});
    }
  }
  for (std::size_t w = 0; w < sp.dim(); ++w) {
    const TensorElem lhs = d.apply(images[w]);
    TensorElem rhs(spec);
    for (const auto& [key, c] : d.image(w).terms()) {
      rhs = rhs + tensor(images[key.second], images[key.first]).scaled(c);
    }
    if (!(lhs == rhs)) {
      result.fail({{sp.basis_vector(w)}, "Delta(S(x)) = " + lhs.to_string(), rhs.to_string()});
    }
  }
  return result;
}

bool s_fourth_power_check(const AntipodeMap& s) {
  return matrix_power(s.matrix(), 4).is_identity();
}

BiFrobeniusCandidate::BiFrobeniusCandidate(CoproductTable coproduct, Functional phi, AlgElem t)
    : coproduct_(std::move(coproduct)),
      phi_(std::move(phi)),
      t_(std::move(t)),
      s_(antipode(phi_, t_, coproduct_)) {}

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto* list : {&checks, &informational}) {
    for (const CheckResult& c : *list) {
      if (c.name == name) return &c;
    }
  }
  return nullptr;
}

VerificationReport verify_bifrobenius(const BiFrobeniusCandidate& candidate) {
  const CoproductTable& d = candidate.coproduct();
  const SpecPtr& spec = candidate.spec();
  const AlgebraSpec& sp = *spec;
  const AlgElem unit = AlgElem::unit(spec);
  VerificationReport report;
  report.notes = d.notes();
  if (sp.field().is_prime_field() && sp.field().characteristic() == 2) {
    report.notes.push_back("characteristic 2: the defining relations are commutative");
  }

  report.checks.push_back(check_coassociativity(d));
  report.checks.push_back(check_counit(d));

  CheckResult counit_hom{"counit-is-algebra-map"};
  if (!d.counit_at(0).is_one()) {
    counit_hom.fail({{sp.basis_vector(0)}, "eps(1) = " + d.counit_at(0).to_string(), "1"});
  }
  for (std::size_t u = 0; u < sp.dim(); ++u) {
    for (std::size_t v = 0; v < sp.dim(); ++v) {
      const long product = sp.product_index(u, v);
      const Scalar lhs = product < 0 ? Scalar::zero(sp.field())
                                     : sp.bracket(u, v) * d.counit_at(static_cast<std::size_t>(product));
      const Scalar rhs = d.counit_at(u) * d.counit_at(v);
      if (!(lhs == rhs)) {
        counit_hom.fail({{sp.basis_vector(u), sp.basis_vector(v)}, "eps(xy) = " + lhs.to_string(),
                         rhs.to_string()});
      }
    }
  }
  report.checks.push_back(std::move(counit_hom));

  CheckResult grouplike{"unit-grouplike"};
  if (!grouplike_check(d, unit)) {
    grouplike.fail({{sp.basis_vector(0)}, "Delta(1) = " + d.image(0).to_string(),
                    tensor(unit, unit).to_string()});
  }
  report.checks.push_back(std::move(grouplike));

  CheckResult frob_alg{"frobenius-algebra"};
  const FrobeniusFunctionalResult fa = is_frobenius_functional(candidate.phi());
  frob_alg.note = "rank " + std::to_string(fa.rank) + " of " + std::to_string(sp.dim());
  if (!fa.frobenius) {
    frob_alg.fail({{}, "rank of (x,y) -> phi(xy) = " + std::to_string(fa.rank),
                   std::to_string(sp.dim())});
  }
  report.checks.push_back(std::move(frob_alg));

  CheckResult frob_coalg{"frobenius-coalgebra"};
  const FrobeniusCoalgebraResult fc = is_frobenius_coalgebra(d, candidate.t());
  frob_coalg.note = "rank " + std::to_string(fc.rank) + " of " + std::to_string(sp.dim());
  if (!fc.frobenius) {
    frob_coalg.fail({{}, "rank of {t <- f} = " + std::to_string(fc.rank), std::to_string(sp.dim())});
  }
  report.checks.push_back(std::move(frob_coalg));

  report.checks.push_back(check_anti_algebra_hom(candidate.s()));
  report.checks.push_back(check_anti_coalgebra_hom(candidate.s(), d));

  CheckResult s4{"S4-identity"};
  if (!s_fourth_power_check(candidate.s())) s4.fail({{}, "S^4", "Id"});
  report.informational.push_back(std::move(s4));

  CheckResult integral{"t-right-integral"};
  for (std::size_t w = 0; w < sp.dim(); ++w) {
    const AlgElem x = AlgElem::basis(spec, w);
    const AlgElem lhs = candidate.t() * x;
    const AlgElem rhs = candidate.t().scaled(d.counit_at(w));
    if (!(lhs == rhs)) {
      integral.fail({{sp.basis_vector(w)}, "t*x = " + lhs.to_string(), rhs.to_string()});
    }
  }
  report.informational.push_back(std::move(integral));

  CheckResult cointegral{"phi-right-cointegral"};
  for (std::size_t w = 0; w < sp.dim(); ++w) {
    const AlgElem x = AlgElem::basis(spec, w);
    const AlgElem lhs = dual_right_action(x, candidate.phi(), d);
    const AlgElem rhs = unit.scaled(candidate.phi().at_basis(w));
    if (!(lhs == rhs)) {
      cointegral.fail({{sp.basis_vector(w)}, "x <- phi = " + lhs.to_string(), rhs.to_string()});
    }
  }
  report.informational.push_back(std::move(cointegral));
  return report;
}

std::vector<CheckResult> check_g_conditions(const GAssignment& g) {
  const AlgebraSpec& sp = *g.spec();
  const std::size_t dim = sp.dim();
  std::vector<CheckResult> out;

  CheckResult squares{"q-squares-to-one"};
  for (std::size_t i = 0; i < sp.n(); ++i) {
    for (std::size_t j = 0; j < sp.n(); ++j) {
      const Scalar sq = sp.q(i, j) * sp.q(i, j);
      if (!sq.is_one()) {
        squares.fail({{sp.generator(i), sp.generator(j)},
                      "q" + std::to_string(i + 1) + std::to_string(j + 1) + "^2 = " + sq.to_string(),
                      "1"});
      }
    }
  }
  out.push_back(std::move(squares));

  CheckResult normal{"g-normalised"};
  if (!g.at(0).is_one()) normal.fail({{sp.basis_vector(0)}, g.at(0).to_string(), "1"});
  if (!g.at(sp.top_index()).is_one()) {
    normal.fail({{sp.top()}, g.at(sp.top_index()).to_string(), "1"});
  }
  out.push_back(std::move(normal));

  // In terms of w = the second slot: g_{a-1-w,w} is multiplicative in w.
  CheckResult multiplicative{"g-multiplicative"};
  for (std::size_t u = 0; u < dim; ++u) {
    for (std::size_t v = 0; v < dim; ++v) {
      const long sum = sp.product_index(u, v);
      if (sum < 0) continue;
      const Scalar lhs = g.paired(static_cast<std::size_t>(sum));
      const Scalar rhs = g.paired(u) * g.paired(v);
      if (!(lhs == rhs)) {
        multiplicative.fail({{sp.basis_vector(u), sp.basis_vector(v)}, lhs.to_string(), rhs.to_string()});
      }
    }
  }
  out.push_back(std::move(multiplicative));

  CheckResult squaring{"g-squares"};
  for (std::size_t v = 0; v < dim; ++v) {
    const ExponentVec& first = sp.basis_vector(v);
    const ExponentVec second = sp.top() - first;
    const Scalar lhs = g.at(v) * g.at(v);
    const Scalar rhs = (bracket_of(sp, first, second) * bracket_of(sp, second, first)).inverse();
    if (!(lhs == rhs)) squaring.fail({{first}, lhs.to_string(), rhs.to_string()});
  }
  out.push_back(std::move(squaring));
  return out;
}

GSearchResult exhaustive_g_search(const SpecPtr& spec, std::uint64_t bound, unsigned threads) {
  const FieldDescriptor& field = spec->field();
  if (!field.is_prime_field()) {
    throw Error(ErrorKind::unsupported, "exhaustive search needs a prime field");
  }
  const std::uint64_t radix = field.modulus() - 1;
  const std::size_t free = spec->dim() - 2;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < free; ++k) {
    if (radix != 0 && total > bound / radix) {
      throw Error(ErrorKind::search_too_large,
                  "search space " + std::to_string(radix) + "^" + std::to_string(free) +
                      " exceeds bound " + std::to_string(bound));
    }
    total *= radix;
  }
  if (total > bound) {
    throw Error(ErrorKind::search_too_large,
                "search space " + std::to_string(total) + " exceeds bound " + std::to_string(bound));
  }

  const Functional phi = Functional::dual_basis(spec, spec->top_index());
  const AlgElem t = AlgElem::basis(spec, spec->top_index());
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<GAssignment> passing;
    for (std::uint64_t code = begin; code < end; ++code) {
      std::vector<Scalar> values(spec->dim(), Scalar::one(field));
      std::uint64_t rest = code;
      for (std::size_t k = free; k-- > 0;) {
        values[k + 1] = Scalar::from_int(field, static_cast<long long>(rest % radix) + 1);
        rest /= radix;
      }
      GAssignment g = GAssignment::create(spec, std::move(values));
      const BiFrobeniusCandidate candidate(build_g_coproduct(g), phi, t);
      if (verify_bifrobenius(candidate).overall()) passing.push_back(std::move(g));
    }
    return passing;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<std::future<std::vector<GAssignment>>> jobs;
  for (std::uint64_t k = 0; k < workers; ++k) {
    const std::uint64_t begin = total * k / workers;
    const std::uint64_t end = total * (k + 1) / workers;
    jobs.push_back(std::async(std::launch::async, run, begin, end));
  }
  GSearchResult result;
  result.examined = total;
  for (auto& job : jobs) {
    for (GAssignment& g : job.get()) result.passing.push_back(std::move(g));
  }
  return result;
}

std::array<Scalar, 3> cij_equation_residuals(const Scalar& q, const CijTuple& c) {
  const auto& [c11, c12, c21, c22] = c;
  const Scalar qi = q.inverse();
  const Scalar qi2 = qi * qi;
  return {
      qi2 * c11 * c21 * c21 - qi * c11 * c12 * c21 - qi * c11 * c21 * c21 + c22 * c11 * c11 - c11,
      qi2 * c11 * c21 * c22 - qi * c11 * c12 * c22 - qi * c12 * c21 * c21 + c22 * c11 * c12 - c12,
      qi2 * c11 * c21 * c22 - qi * c21 * c12 * c12 - qi * c11 * c21 * c22 + c11 * c12 * c22 - c21,
  };
}

CijSolutions aq_cij_solutions(const Scalar& q) {
  const FieldDescriptor& field = q.field();
  if (!field.is_prime_field()) {
    throw Error(ErrorKind::unsupported, "the coefficient system is enumerated over prime fields only");
  }
  if (q.is_zero()) throw Error(ErrorKind::precondition, "q must be nonzero");
  const std::uint32_t p = field.modulus();
  std::vector<Scalar> elements;
  for (std::uint32_t r = 0; r < p; ++r) elements.push_back(Scalar::from_int(field, r));
  const Scalar one_minus_q = Scalar::one(field) - q;
  const Scalar q2 = q * q;

  CijSolutions out;
  out.scope =
      "necessary conditions on the coefficients cij of xi(x)xj in Delta(x1x2) for "
      "A(q,2,2) with t = x1x2; not a search over all coalgebra structures";
  for (const Scalar& c11 : elements) {
    for (const Scalar& c12 : elements) {
      for (const Scalar& c21 : elements) {
        for (const Scalar& c22 : elements) {
          ++out.examined;
          if (c11 * c22 == c12 * c21) continue;
          if (!(c21 * c22 * one_minus_q).is_zero()) continue;
          if (!(c11 * c12 * one_minus_q).is_zero()) continue;
          if (!(c12 * c21 - q * c11 * c22 == q2)) continue;
          const CijTuple c{c11, c12, c21, c22};
          const auto residuals = cij_equation_residuals(q, c);
          if (std::all_of(residuals.begin(), residuals.end(),
                          [](const Scalar& r) { return r.is_zero(); })) {
            out.solutions.push_back(c);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace qci
