#include "qci/obstructions.hpp"

#include <algorithm>

#include "qci/error.hpp"
#include "qci/scalars.hpp"

namespace qci {
namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::precondition, std::to_string(p) + " is not prime");
}

bool is_power_of(std::uint64_t x, std::uint64_t p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace

unsigned padic_valuation(std::uint64_t x, std::uint64_t p) {
  require_prime(p);
  if (x == 0) throw Error(ErrorKind::precondition, "valuation of 0 is undefined");
  unsigned s = 0;
  while (x % p == 0) {
    x /= p;
    ++s;
  }
  return s;
}

unsigned binom_valuation_kummer(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  require_prime(p);
  if (m > n) throw Error(ErrorKind::precondition, "binom(n, m) needs m <= n");
  std::uint64_t x = m;
  std::uint64_t y = n - m;
  unsigned carries = 0;
  std::uint64_t carry = 0;
  while (x > 0 || y > 0 || carry > 0) {
    const std::uint64_t digit = x % p + y % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    x /= p;
    y /= p;
  }
  return carries;
}

bool kummer_fact_check(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n == 0) throw Error(ErrorKind::precondition, "n must be positive");
  std::uint64_t m = 1;
  for (unsigned r = padic_valuation(n, p); r > 0; --r) m *= p;
  return binom_valuation_kummer(n, m, p) == 0;
}

mpz_class binomial(unsigned long n, unsigned long m) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, m);
  return out;
}

std::string to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::no_bialgebra: return "no-bialgebra";
    case ObstructionKind::hopf_exists: return "hopf-exists";
    case ObstructionKind::not_obstructed: return "not-obstructed";
  }
  return "unknown";
}

ObstructionVerdict bialgebra_obstruction(const std::vector<int>& a, std::uint64_t characteristic) {
  if (a.size() < 2) throw Error(ErrorKind::invalid_spec, "need at least two exponents");
  for (int ai : a) {
    if (ai < 2) throw Error(ErrorKind::invalid_spec, "every exponent must be at least 2");
  }
  if (characteristic != 0) require_prime(characteristic);

  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ai = static_cast<std::uint64_t>(a[i]);
    if (characteristic != 0 && is_power_of(ai, characteristic)) continue;
    unsigned long m = 1;
    if (characteristic != 0) {
      for (unsigned r = padic_valuation(ai, characteristic); r > 0; --r) m *= characteristic;
    }
    ObstructionWitness w{i, m, binomial(ai, m), {}};
    const std::string term = "binom(" + std::to_string(ai) + "," + std::to_string(m) + ") = " +
                             w.binomial.get_str();
    if (characteristic == 0) {
      w.reason = term + " is nonzero in characteristic 0";
    } else {
      const mpz_class residue = w.binomial % characteristic;
      w.reason = term + " is " + residue.get_str() + " mod " + std::to_string(characteristic);
    }
    return {ObstructionKind::no_bialgebra, std::move(w)};
  }
  if (characteristic == 2 &&
      std::all_of(a.begin(), a.end(), [](int ai) { return ai == 2; })) {
    return {ObstructionKind::hopf_exists, std::nullopt};
  }
  return {ObstructionKind::not_obstructed, std::nullopt};
}

}  // namespace qci
