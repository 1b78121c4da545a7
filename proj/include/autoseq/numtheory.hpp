#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace autoseq {

// Arbitrary-precision nonnegative integer. Entry points that require
// nonnegative input check the sign and throw std::invalid_argument.
using Natural = mpz_class;

namespace numtheory {

// Base-q expansion, least significant digit first. Canonical form has no
// trailing zero digit, except the single digit [0] representing zero.
struct DigitString {
  unsigned base = 2;
  std::vector<unsigned> digits;

  bool operator==(const DigitString&) const = default;
};

DigitString to_digits(const Natural& n, unsigned base);
Natural from_digits(const DigitString& d);

// n as q^e with e maximal, i.e. the exponent of p in n. Requires n >= 1;
// n = 0 has infinite valuation and is signalled with std::invalid_argument.
unsigned nu(const Natural& p, const Natural& n);

// Least k >= 1 with b^k = 1 mod m. Requires m >= 2 and gcd(b, m) = 1.
Natural mult_order(const Natural& b, const Natural& m);

// Count of units mod m, from the factorization of m. Requires m >= 1.
Natural euler_phi(const Natural& m);

// Prime factorization by trial division plus Pollard rho on the cofactor.
std::map<Natural, unsigned> factorize(const Natural& n);

// Multiplicative order and exact p-valuation of b^ord - 1, the data the
// lifting-the-exponent law needs along the subsequence b^(ord*n) - 1.
struct LteContext {
  Natural p;
  Natural b;
  Natural ord;
  unsigned gamma = 0;
};

LteContext lte_context(const Natural& p, const Natural& b);

// gamma + nu(p, n), which equals nu(p, b^(ord*n) - 1). For p = 2 the law
// holds only when gamma >= 2 (b = 1 mod 4); other p = 2 inputs are rejected
// rather than silently miscomputed.
unsigned lte_valuation(const LteContext& ctx, const Natural& n);

// Largest alpha with B^alpha dividing p^(delta*phi(B^e)) - 1, where B^e is q
// itself when q is prime and otherwise a prime-power divisor of q (default:
// the smallest prime factor of q with its full exponent). Requires
// gcd(p, q) = 1.
unsigned alpha_p_delta(const Natural& p, unsigned delta, unsigned q,
                       std::optional<std::pair<Natural, unsigned>> divisor =
                           std::nullopt);

// Unique solution in [0, prod moduli) of x = r_i mod m_i. Moduli must be
// pairwise coprime and >= 1. An empty list yields 0.
Natural crt_solve(const std::vector<std::pair<Natural, Natural>>& congruences);

std::vector<std::uint64_t> primes_upto(std::uint64_t n);

// Deterministic (Miller-Rabin, fixed base set) below 2^64; above that, 40
// fixed-base rounds, so results stay reproducible.
bool is_prime(const Natural& n);

// Helpers shared across modules.
Natural pow_nat(const Natural& base, unsigned long exp);
Natural powm(const Natural& base, const Natural& exp, const Natural& mod);
Natural gcd(const Natural& a, const Natural& b);
std::optional<Natural> invert(const Natural& a, const Natural& m);

}  // namespace numtheory
}  // namespace autoseq
