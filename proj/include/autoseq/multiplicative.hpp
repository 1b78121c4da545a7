#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "autoseq/dfao.hpp"
#include "autoseq/numtheory.hpp"
#include "autoseq/value.hpp"

namespace autoseq::multiplicative {

enum class MultStatus {
  multiplicative,
  completely_multiplicative,
  counterexample,
};

struct MultReport {
  Natural bound;
  bool complete = false;  // pairs restricted to gcd(m, n) = 1 when false
  MultStatus status = MultStatus::multiplicative;
  std::optional<std::pair<Natural, Natural>> witness;  // (m, n)
  std::uint64_t pairs_checked = 0;
};

// Exhaustive over pairs 2 <= m <= n with m*n <= N (coprime only unless
// complete), reported in increasing (m+n, m) order; machines that pass the
// pair scan but have f(1) != 1 are reported as the conventional witness
// (1, 1).
MultReport check_multiplicative(const dfao::Dfao& a, const Natural& bound,
                                bool complete);

// Output relabeling v -> (v == 0 ? 0 : 1). Preserves base and state
// structure; for multiplicative f this equals the nonzero-indicator
// reduction at every n.
dfao::Dfao binary_reduction(const dfao::Dfao& a);

struct PrimeProfile {
  Natural p;
  bool divides_base = false;
  std::vector<Value> values;  // f(p^e) for 1 <= e <= E
  bool in_P0 = false;         // f(p) = 0
  bool in_P1hat = false;      // some f(p^e) != 0 (reduced value 1)
  bool in_Pgt1 = false;       // some |f(p^e)| > 1
  bool in_Plt1 = false;       // some 0 < |f(p^e)| < 1
  std::optional<unsigned> alpha_p;  // min alpha_{p,delta} over reduced-1 delta
  std::optional<unsigned> delta_p;  // least delta attaining alpha_p
};

// One profile per prime p <= P; the alpha/delta search is truncated at
// exponent E (bounded search). Primes dividing the base are flagged and
// carry no alpha/delta.
std::vector<PrimeProfile> prime_profiles(const dfao::Dfao& a, const Natural& P,
                                         unsigned E);

}  // namespace autoseq::multiplicative
