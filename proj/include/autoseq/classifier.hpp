#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "autoseq/dfao.hpp"
#include "autoseq/multiplicative.hpp"
#include "autoseq/numtheory.hpp"
#include "autoseq/value.hpp"

namespace autoseq::classifier {

// Dirichlet character table: unit residues mod Q mapped to roots of unity.
// For Q = 1 the single residue is 0 (representing 1 mod 1).
struct CharacterTable {
  Natural modulus{1};
  std::map<Natural, Value> values;
};

// Exhaustive homomorphism check: values(1) = 1, unit magnitudes, and
// values(u*v) = values(u) * values(v) over all unit pairs.
bool is_homomorphism(const CharacterTable& table);

// All characters mod Q, built from a generating set of the unit group;
// deterministic order. Requires Q >= 1 at desk scale.
std::vector<CharacterTable> enumerate_characters(const Natural& modulus);

// Periodic machine for the character extended by zero off the units.
dfao::Dfao character_machine(const CharacterTable& table, unsigned base);

// Indicator of gcd(n, Q) = 1 as a periodic machine.
dfao::Dfao coprime_indicator(const Natural& modulus, unsigned base);

struct CharacterMatch {
  CharacterTable table;
  std::string certificate;  // description of the exact automaton equality
};

// Smallest Q <= Qmax whose character table, read off f, survives the
// periodicity/homomorphism screen and the exact automaton equality
// f * 1_{gcd(n,Q)=1} == chi. Absence is a value, not an error.
std::optional<CharacterMatch> match_character(const dfao::Dfao& a,
                                              const Natural& qmax);

struct VanishingEvidence {
  std::vector<Natural> exceptional;  // primes p <= P with f(p) != 0
  Natural checked_to;
  // Refinement: primes p <= P with some f(p^e) != 0, e <= refinement_E.
  std::vector<Natural> p1hat_primes;
  unsigned refinement_E = 6;
};

VanishingEvidence vanishing_check(const dfao::Dfao& a, const Natural& bound,
                                  unsigned refinement_E = 6);

struct ClassifyParams {
  Natural mult_bound{10000};    // N
  Natural prime_bound{100000};  // P
  std::optional<Natural> qmax;  // default 2 * q^(2*s0), capped at 10^4
  unsigned profile_exponent = 6;  // E
};

struct Character {
  CharacterTable table;
  std::string certificate;
};

struct VanishingOnLargePrimes {
  VanishingEvidence evidence;
};

struct NotMultiplicative {
  Natural witness_m;
  Natural witness_n;
  std::uint64_t pairs_checked = 0;
};

struct Inconclusive {
  std::string reason;
  VanishingEvidence evidence;
};

using Outcome = std::variant<Character, VanishingOnLargePrimes,
                             NotMultiplicative, Inconclusive>;

struct Classification {
  Outcome outcome;
  ClassifyParams params;  // with the resolved Qmax filled in
};

// The dichotomy pipeline: multiplicativity scan, then exact character
// recovery, then the vanishing certificate with its stability window
// (no exceptional prime in (P/4, P]).
Classification classify(const dfao::Dfao& a, ClassifyParams params = {});

}  // namespace autoseq::classifier
