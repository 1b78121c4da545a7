#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoseq/dfao.hpp"
#include "autoseq/multiplicative.hpp"
#include "autoseq/numtheory.hpp"

namespace autoseq::proofkit {

// Two shift exponents i < j in (A, A + s0 + 1] whose subsequences
// f(q^i m + r) and f(q^j m + r) agree for all m (so 0 < j - i <= s0), plus,
// when present, m0 <= k0 with f(q^i m0 + r) = 1.
struct ShiftWitness {
  Natural r;
  unsigned A = 0;
  unsigned i = 0;
  unsigned j = 0;
  std::optional<Natural> m0;
  std::string certificate;
};

// First pair in (j - i, i) order certified by the exact equality decision.
// Requires q^A > r. Absence (no collision in the interval) is a value.
std::optional<ShiftWitness> find_equal_shifts(const dfao::Dfao& a,
                                              const Natural& r, unsigned A);

// Exponents A, C and m0 <= k0 with f(q^(A+C*n) m0 + r) = 1 for every n,
// certified by an all-ones eventually-periodic probe.
struct GeometricWitness {
  Natural r;
  unsigned A = 0;
  unsigned C = 1;
  Natural m0;
  dfao::EventuallyPeriodic certificate;
};

// Minimal (A, C, m0) with A in [A_min, A_min + s0], C <= s0, m0 <= k0,
// where A_min is the least A with q^A > r. Requires f(r) = 1.
std::optional<GeometricWitness> find_geometric_one(const dfao::Dfao& a,
                                                   const Natural& r);

// n_k with p^k exactly dividing q^(A+C*n_k) * m0 + r, built by the
// lifting-the-exponent climb/descend steps and verified by direct
// valuation. Requires gcd(p, q*m0) = 1, k >= gamma, and a seed exponent
// with valuation above gamma inside the search range (std::domain_error
// when no seed exists there).
Natural lte_divisibility_witness(const Natural& p, unsigned q, unsigned A,
                                 unsigned C, const Natural& m0,
                                 const Natural& r, unsigned k);

// r_A in (0, Q^2), Q the product of the given primes, with p_s exactly
// dividing r_A + q^A * s for s = 1..len, via the Chinese remainder theorem.
// Requires distinct primes > q and q^A > 100 * Q^2.
Natural build_r_A(const std::vector<Natural>& zero_primes, unsigned q,
                  unsigned A);

struct CoverageReport {
  unsigned alpha = 0;
  unsigned alpha1 = 0;
  Natural modulus;                // q^alpha1
  std::uint64_t subsets = 0;      // products formed
  std::vector<Natural> attained;  // targets hit, ascending
  std::vector<Natural> missing;   // targets not hit, ascending
  bool full_coverage = false;
};

// Subset products prod p^(eps_p * delta_p) mod q^alpha1 against the coset
// {u = 1 mod q^alpha}. Requires alpha1 > alpha >= 1 and all p coprime to q.
CoverageReport unit_patch_products(
    const std::vector<std::pair<Natural, unsigned>>& y, unsigned q,
    unsigned alpha, unsigned alpha1);

// Histogram alpha -> count over profiles with alpha_p defined.
std::map<unsigned, std::uint64_t> alpha_statistics(
    const std::vector<multiplicative::PrimeProfile>& profiles);

}  // namespace autoseq::proofkit
