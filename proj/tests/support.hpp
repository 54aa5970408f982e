#ifndef QCI_TESTS_SUPPORT_HPP
#define QCI_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qci/bifrobenius.hpp"

namespace qci::testing {

inline FieldDescriptor Q() { return FieldDescriptor::rationals(); }
inline FieldDescriptor QI() { return FieldDescriptor::gaussian_rationals(); }
inline FieldDescriptor F(std::uint64_t p) { return FieldDescriptor::prime_field(p); }

inline Scalar num(const FieldDescriptor& f, long long x) { return Scalar::from_int(f, x); }
inline Scalar lit(const FieldDescriptor& f, const std::string& s) { return Scalar::parse(f, s); }

inline SpecPtr uniform(const FieldDescriptor& f, std::vector<int> a, long long q) {
  return AlgebraSpec::uniform(f, std::move(a), num(f, q));
}

inline Scalar random_scalar(const FieldDescriptor& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> positive(1, 12);
  switch (f.kind()) {
    case FieldDescriptor::Kind::prime_field: {
      std::uniform_int_distribution<std::uint32_t> r(0, f.modulus() - 1);
      return num(f, r(rng));
    }
    case FieldDescriptor::Kind::rationals:
      return Scalar::from_rational(f, mpq_class(small(rng), positive(rng)));
    case FieldDescriptor::Kind::gaussian_rationals: {
      const Scalar re = Scalar::from_rational(f, mpq_class(small(rng), positive(rng)));
      const Scalar im = Scalar::from_rational(f, mpq_class(small(rng), positive(rng)));
      return re + im * Scalar::imaginary_unit(f);
    }
  }
  return Scalar::zero(f);
}

inline Scalar random_nonzero(const FieldDescriptor& f, std::mt19937& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

inline AlgElem random_element(const SpecPtr& spec, std::mt19937& rng) {
  AlgElem x(spec);
  for (std::size_t i = 0; i < spec->dim(); ++i) x.add_term(i, random_scalar(spec->field(), rng));
  return x;
}

/// Product of two monomials by literally rewriting the word
/// x_u x_v with adjacent swaps x_j x_i -> (-1/q_ij) x_i x_j (i < j), then
/// truncating.  Independent of the library's bracket table.
inline AlgElem word_product(const SpecPtr& spec, const ExponentVec& u, const ExponentVec& v) {
  std::vector<std::size_t> word;
  for (const ExponentVec* e : {&u, &v}) {
    for (std::size_t i = 0; i < e->size(); ++i) {
      for (int k = 0; k < (*e)[i]; ++k) word.push_back(i);
    }
  }
  Scalar coeff = Scalar::one(spec->field());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      const std::size_t j = word[k];
      const std::size_t i = word[k + 1];
      if (j > i) {
        coeff *= -spec->q(i, j).inverse();
        std::swap(word[k], word[k + 1]);
        swapped = true;
      }
    }
  }
  std::vector<int> exps(spec->n(), 0);
  for (std::size_t letter : word) ++exps[letter];
  for (std::size_t i = 0; i < spec->n(); ++i) {
    if (exps[i] >= spec->a()[i]) return AlgElem(spec);
  }
  return AlgElem::monomial(spec, ExponentVec(exps)).scaled(coeff);
}

inline std::vector<std::vector<int>> criterion_shapes() {
  return {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
}

/// The specs of the main converse check: four shapes, q = +-1, over Q(i)
/// and F_5.
inline std::vector<SpecPtr> converse_specs() {
  std::vector<SpecPtr> out;
  for (const FieldDescriptor& f : {QI(), F(5)}) {
    for (const auto& a : criterion_shapes()) {
      for (long long q : {1, -1}) out.push_back(uniform(f, a, q));
    }
  }
  return out;
}

inline std::string describe(const AlgebraSpec& spec) {
  std::string s = spec.field().to_string() + " a=(";
  for (std::size_t i = 0; i < spec.n(); ++i) s += (i ? "," : "") + std::to_string(spec.a()[i]);
  return s + ") q12=" + spec.q(0, 1).to_string();
}

inline BiFrobeniusCandidate g_candidate(const GAssignment& g) {
  const SpecPtr& spec = g.spec();
  return BiFrobeniusCandidate(build_g_coproduct(g), Functional::dual_basis(spec, spec->top_index()),
                              AlgElem::basis(spec, spec->top_index()));
}

inline BiFrobeniusCandidate top_candidate(CoproductTable d, Functional phi) {
  const SpecPtr spec = d.spec();
  return BiFrobeniusCandidate(std::move(d), std::move(phi), AlgElem::basis(spec, spec->top_index()));
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

// Plain modular arithmetic for oracles that must not touch Scalar.
inline long long mod(long long x, long long p) { return ((x % p) + p) % p; }

inline long long mod_inverse(long long x, long long p) {
  x = mod(x, p);
  for (long long y = 1; y < p; ++y) {
    if (x * y % p == 1) return y;
  }
  return 0;
}

}  // namespace qci::testing

#endif  // QCI_TESTS_SUPPORT_HPP
