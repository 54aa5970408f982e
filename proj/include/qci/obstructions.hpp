#ifndef QCI_OBSTRUCTIONS_HPP
#define QCI_OBSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qci {

/// Largest s with p^s | x.  x = 0 throws ErrorKind::precondition.
unsigned padic_valuation(std::uint64_t x, std::uint64_t p);

/// Number of carries when adding m and n - m in base p, which is the
/// p-adic valuation of binom(n, m).  m > n throws ErrorKind::precondition.
unsigned binom_valuation_kummer(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// p does not divide binom(n, p^r) for r = nu_p(n).  For p not dividing n
/// this degenerates to p not dividing binom(n, 1) = n.
bool kummer_fact_check(std::uint64_t n, std::uint64_t p);

mpz_class binomial(unsigned long n, unsigned long m);

enum class ObstructionKind { no_bialgebra, hopf_exists, not_obstructed };

std::string to_string(ObstructionKind kind);

struct ObstructionWitness {
  std::size_t index;  // 0-based position in a
  unsigned long m;
  mpz_class binomial;  // binom(a_index, m)
  std::string reason;
};

struct ObstructionVerdict {
  ObstructionKind verdict;
  std::optional<ObstructionWitness> witness;
};

/// Decision procedure for bialgebra structures on A(q, a) over a field of
/// the given characteristic (0 or a prime):
///  - some ai not a power of char k: no bialgebra, with a witness m such
///    that binom(ai, m) is nonzero in k (m = 1 when char k does not divide
///    ai, else m = p^nu_p(ai));
///  - char 2 and every ai = 2: a Hopf algebra structure exists;
///  - otherwise not-obstructed, meaning no conclusion.
ObstructionVerdict bialgebra_obstruction(const std::vector<int>& a, std::uint64_t characteristic);

}  // namespace qci

#endif  // QCI_OBSTRUCTIONS_HPP
