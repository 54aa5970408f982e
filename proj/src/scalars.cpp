#include "qci/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qci {
namespace {

bool is_decimal(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// [+-]?digits(/digits)?
mpq_class parse_rational(std::string_view s) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den)) {
    throw Error(ErrorKind::parse, "malformed rational literal '" + std::string(s) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(s) + "'");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t reduce_rational(const mpq_class& q, std::uint32_t p) {
  const std::uint32_t den = reduce_mod(q.get_den(), p);
  if (den == 0) {
    throw Error(ErrorKind::division_by_zero,
                "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
  }
  const std::uint64_t num = reduce_mod(q.get_num(), p);
  return static_cast<std::uint32_t>(num * mod_inverse(den, p) % p);
}

void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorKind::descriptor_mismatch,
                "scalar fields differ: " + a.field().to_string() + " vs " + b.field().to_string());
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::unsupported,
                "prime field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  return FieldDescriptor(Kind::prime_field, static_cast<std::uint32_t>(p));
}

FieldDescriptor FieldDescriptor::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Q(i)") return gaussian_rationals();
  if (text.starts_with("Fp:")) {
    const std::string_view digits = text.substr(3);
    if (!is_decimal(digits) || digits.size() > 12) {
      throw Error(ErrorKind::parse, "malformed field descriptor '" + std::string(text) + "'");
    }
    try {
      return prime_field(std::stoull(std::string(digits)));
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, e.what());
    }
  }
  throw Error(ErrorKind::parse, "unknown field descriptor '" + std::string(text) +
                                    "' (expected Q, Q(i) or Fp:<prime>)");
}

bool FieldDescriptor::has_sqrt_minus_one() const {
  switch (kind_) {
    case Kind::rationals: return false;
    case Kind::gaussian_rationals: return true;
    case Kind::prime_field: return modulus_ == 2 || modulus_ % 4 == 1;
  }
  return false;
}

std::string FieldDescriptor::to_string() const {
  switch (kind_) {
    case Kind::rationals: return "Q";
    case Kind::gaussian_rationals: return "Q(i)";
    case Kind::prime_field: return "Fp:" + std::to_string(modulus_);
  }
  return "?";
}

Scalar Scalar::zero(const FieldDescriptor& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldDescriptor& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldDescriptor& field, long long value) {
  if (field.is_prime_field()) {
    const long long p = field.modulus();
    return Scalar(field, static_cast<std::uint32_t>(((value % p) + p) % p));
  }
  static_assert(sizeof(long) == sizeof(long long));
  return from_rational(field, mpq_class(static_cast<long>(value)));
}

Scalar Scalar::from_rational(const FieldDescriptor& field, const mpq_class& value) {
  // Callers may hand over 6/-4; every stored rational is kept canonical.
  mpq_class q = value;
  q.canonicalize();
  switch (field.kind()) {
    case FieldDescriptor::Kind::rationals: return Scalar(field, q);
    case FieldDescriptor::Kind::gaussian_rationals:
      return Scalar(field, Gaussian{q, mpq_class(0)});
    case FieldDescriptor::Kind::prime_field:
      return Scalar(field, reduce_rational(q, field.modulus()));
  }
  throw Error(ErrorKind::unsupported, "unknown field kind");
}

Scalar Scalar::imaginary_unit(const FieldDescriptor& field) {
  if (field.kind() != FieldDescriptor::Kind::gaussian_rationals) {
    throw Error(ErrorKind::unsupported, "imaginary unit requested over " + field.to_string());
  }
  return Scalar(field, Gaussian{mpq_class(0), mpq_class(1)});
}

Scalar Scalar::parse(const FieldDescriptor& field, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorKind::parse, "empty scalar literal");
  if (field.kind() != FieldDescriptor::Kind::gaussian_rationals) {
    return from_rational(field, parse_rational(s));
  }
  if (s.back() != 'i') return Scalar(field, Gaussian{parse_rational(s), mpq_class(0)});

  const std::string_view body(s.data(), s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string_view real_text = split == std::string_view::npos ? "" : body.substr(0, split);
  std::string_view imag_text = split == std::string_view::npos ? body : body.substr(split);
  mpq_class im;
  if (imag_text.empty() || imag_text == "+") {
    im = 1;
  } else if (imag_text == "-") {
    im = -1;
  } else {
    im = parse_rational(imag_text);
  }
  const mpq_class re = real_text.empty() ? mpq_class(0) : parse_rational(real_text);
  return Scalar(field, Gaussian{re, im});
}

bool Scalar::is_zero() const {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return v == 0;
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          return v == 0;
        } else {
          return v.re == 0 && v.im == 0;
        }
      },
      value_);
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator-() const {
  return std::visit(
      [this](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return Scalar(field_, v == 0 ? 0u : field_.modulus() - v);
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(field_, mpq_class(-v));
        } else {
          return Scalar(field_, Gaussian{mpq_class(-v.re), mpq_class(-v.im)});
        }
      },
      value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero");
  return std::visit(
      [this](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return Scalar(field_, mod_inverse(v, field_.modulus()));
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(field_, mpq_class(1 / v));
        } else {
          // 1/(a+bi) = (a-bi)/(a^2+b^2)
          const mpq_class norm = v.re * v.re + v.im * v.im;
          return Scalar(field_, Gaussian{mpq_class(v.re / norm), mpq_class(-v.im / norm)});
        }
      },
      value_);
}

Scalar Scalar::pow(long long exponent) const {
  if (exponent < 0 && is_zero()) throw Error(ErrorKind::division_by_zero, "negative power of zero");
  Scalar base = exponent < 0 ? inverse() : *this;
  auto e = exponent < 0 ? 0ull - static_cast<unsigned long long>(exponent)
                        : static_cast<unsigned long long>(exponent);
  Scalar result = one(field_);
  while (e != 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e != 0) base *= base;
  }
  return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.field_.modulus();
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return Scalar(a.field_, static_cast<std::uint32_t>((std::uint64_t{x} + y) % p));
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(a.field_, mpq_class(x + y));
        } else {
          return Scalar(a.field_, Scalar::Gaussian{mpq_class(x.re + y.re), mpq_class(x.im + y.im)});
        }
      },
      a.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.field_.modulus();
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return Scalar(a.field_, static_cast<std::uint32_t>(std::uint64_t{x} * y % p));
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          return Scalar(a.field_, mpq_class(x * y));
        } else {
          return Scalar(a.field_, Scalar::Gaussian{mpq_class(x.re * y.re - x.im * y.im),
                                                   mpq_class(x.re * y.im + x.im * y.re)});
        }
      },
      a.value_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.value_);
        if constexpr (std::is_same_v<T, Scalar::Gaussian>) {
          return x.re == y.re && x.im == y.im;
        } else {
          return x == y;
        }
      },
      a.value_);
}

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::uint32_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, mpq_class>) {
          return v.get_str();
        } else {
          if (v.im == 0) return v.re.get_str();
          std::string imag;
          if (v.im == 1) {
            imag = "i";
          } else if (v.im == -1) {
            imag = "-i";
          } else {
            imag = v.im.get_str() + "i";
          }
          if (v.re == 0) return imag;
          return v.re.get_str() + (v.im > 0 ? "+" : "") + imag;
        }
      },
      value_);
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
  throw Error(ErrorKind::unsupported, "residue() on a non prime-field scalar");
}

mpq_class Scalar::real_part() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  if (const auto* g = std::get_if<Gaussian>(&value_)) return g->re;
  return mpq_class(std::get<std::uint32_t>(value_));
}

mpq_class Scalar::imag_part() const {
  if (const auto* g = std::get_if<Gaussian>(&value_)) return g->im;
  return mpq_class(0);
}

bool Scalar::is_real() const {
  if (const auto* g = std::get_if<Gaussian>(&value_)) return g->im == 0;
  return true;
}

int Scalar::rational_sign() const {
  if (std::holds_alternative<std::uint32_t>(value_) || !is_real()) return 0;
  return sgn(real_part());
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar neg(const Scalar& a) { return -a; }
Scalar inv(const Scalar& a) { return a.inverse(); }
Scalar pow(const Scalar& a, long long exponent) { return a.pow(exponent); }

std::optional<Scalar> sqrt_of(const Scalar& a) {
  const FieldDescriptor& field = a.field();
  const Scalar one = Scalar::one(field);
  if (a == one) return one;
  if (!(a == -one)) {
    throw Error(ErrorKind::unsupported, "sqrt_of supports only +1 and -1, got " + a.to_string());
  }
  switch (field.kind()) {
    case FieldDescriptor::Kind::rationals: return std::nullopt;
    case FieldDescriptor::Kind::gaussian_rationals: return Scalar::imaginary_unit(field);
    case FieldDescriptor::Kind::prime_field: {
      if (!field.has_sqrt_minus_one()) return std::nullopt;
      const long long p = field.modulus();
      if (p == 2) return one;
      // c^((p-1)/4) squares to -1 for any non-residue c; the two roots are r and p - r.
      for (long long c = 2; c < p; ++c) {
        const Scalar base = Scalar::from_int(field, c);
        if (base.pow((p - 1) / 2) == -one) {
          const std::uint32_t r = base.pow((p - 1) / 4).residue();
          return Scalar::from_int(field, std::min<long long>(r, p - r));
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace qci
