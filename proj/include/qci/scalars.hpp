#ifndef QCI_SCALARS_HPP
#define QCI_SCALARS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "qci/error.hpp"

namespace qci {

/// One of the three supported coefficient fields: Q, Q(i) or F_p.
class FieldDescriptor {
 public:
  enum class Kind { rationals, gaussian_rationals, prime_field };

  static FieldDescriptor rationals() { return FieldDescriptor(Kind::rationals, 0); }
  static FieldDescriptor gaussian_rationals() {
    return FieldDescriptor(Kind::gaussian_rationals, 0);
  }
  /// Throws ErrorKind::unsupported unless p is a prime below 2^31.
  static FieldDescriptor prime_field(std::uint64_t p);

  /// Grammar: `Q | Q(i) | Fp:<decimal prime>`.
  static FieldDescriptor parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t characteristic() const { return modulus_; }
  bool has_sqrt_minus_one() const;

  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;  // zero unless prime field
};

bool is_prime(std::uint64_t n);

/// Exact element of Q, Q(i) or F_p.  Immutable value type.
///
/// Rationals are kept in lowest terms with positive denominator (GMP
/// canonical form); Gaussian rationals as a pair of such fractions; residues
/// as 0 <= r < p.
class Scalar {
 public:
  struct Gaussian {
    mpq_class re;
    mpq_class im;
  };

  static Scalar zero(const FieldDescriptor& field);
  static Scalar one(const FieldDescriptor& field);
  static Scalar from_int(const FieldDescriptor& field, long long value);
  static Scalar from_rational(const FieldDescriptor& field, const mpq_class& value);
  /// The Gaussian unit i; requires the field Q(i).
  static Scalar imaginary_unit(const FieldDescriptor& field);

  /// Literal grammar: rationals "a/b" or "a"; Gaussian "a/b+c/d i" (spaces
  /// optional, "i" and "-i" allowed); residues any integer or fraction,
  /// reduced mod p.
  static Scalar parse(const FieldDescriptor& field, std::string_view text);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long long exponent) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical literal; parse(field, to_string()) reproduces the value.
  std::string to_string() const;

  /// Residue value; only meaningful for prime fields.
  std::uint32_t residue() const;
  /// Real/imaginary parts for Q and Q(i); imaginary part is zero over Q.
  mpq_class real_part() const;
  mpq_class imag_part() const;
  /// True when the value is a rational number (always for Q and F_p).
  bool is_real() const;
  /// Sign of a real rational value (-1, 0, 1); zero for anything else.
  int rational_sign() const;

 private:
  using Value = std::variant<std::uint32_t, mpq_class, Gaussian>;

  Scalar(FieldDescriptor field, Value value) : field_(field), value_(std::move(value)) {}

  FieldDescriptor field_;
  Value value_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar inv(const Scalar& a);
Scalar pow(const Scalar& a, long long exponent);

/// Square root of +1 or -1 with a deterministic branch: 1 for a = 1; i for
/// a = -1 over Q(i); the smallest residue r with r^2 = p - 1 over F_p.
/// Returns nullopt when the root is not in the field.  Any other argument
/// throws ErrorKind::unsupported.
std::optional<Scalar> sqrt_of(const Scalar& a);

}  // namespace qci

#endif  // QCI_SCALARS_HPP
