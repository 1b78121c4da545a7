#include "autoseq/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace autoseq::classifier {

namespace nt = autoseq::numtheory;

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<Natural> units_mod(const Natural& modulus) {
  std::vector<Natural> units;
  if (modulus == 1) {
    units.push_back(0);  // 0 represents 1 mod 1
    return units;
  }
  for (Natural u = 1; u < modulus; ++u)
    if (nt::gcd(u, modulus) == 1) units.push_back(u);
  return units;
}

// Independent generators of the unit group with their orders, one cyclic
// factor per entry, combined across the prime-power parts of the modulus.
std::vector<std::pair<Natural, Natural>> unit_group_generators(
    const Natural& modulus) {
  std::vector<std::pair<Natural, Natural>> generators;  // (g, order)
  for (const auto& [p, e] : nt::factorize(modulus)) {
    Natural pe = nt::pow_nat(p, e);
    Natural rest = modulus / pe;
    auto lift = [&](const Natural& g) {
      // x = g mod p^e, x = 1 mod rest.
      return nt::crt_solve({{g, pe}, {Natural(1), rest}});
    };
    if (p == 2) {
      if (e == 1) continue;  // trivial factor
      generators.emplace_back(lift(pe - 1), 2);  // -1
      if (e >= 3)
        generators.emplace_back(lift(5), nt::pow_nat(2, e - 2));
      continue;
    }
    // Odd prime power: find a primitive root mod p, lift to p^e if needed.
    Natural phi_p = p - 1;
    Natural g = 0;
    for (Natural cand = 2; cand < p; ++cand) {
      if (nt::mult_order(cand, p) == phi_p) {
        g = cand;
        break;
      }
    }
    if (e > 1 && nt::powm(g, phi_p, p * p) == 1) g += p;
    generators.emplace_back(lift(g), nt::euler_phi(pe));
  }
  return generators;
}

}  // namespace

bool is_homomorphism(const CharacterTable& table) {
  const Natural& Q = table.modulus;
  auto units = units_mod(Q);
  if (table.values.size() != units.size()) return false;
  for (const auto& u : units)
    if (!table.values.count(u)) return false;
  Natural one = Q == 1 ? Natural(0) : Natural(1);
  auto at_one = table.values.find(one);
  if (at_one == table.values.end() || !at_one->second.is_one()) return false;
  for (const auto& [u, vu] : table.values) {
    if (!vu.unit_magnitude()) return false;
    for (const auto& [w, vw] : table.values) {
      Natural prod = Q == 1 ? Natural(0) : (u * w) % Q;
      if (!(table.values.at(prod) == vu * vw)) return false;
    }
  }
  return true;
}

std::vector<CharacterTable> enumerate_characters(const Natural& modulus) {
  require(modulus >= 1, "enumerate_characters: modulus must be >= 1");
  require(modulus <= 100000, "enumerate_characters: modulus too large");
  auto generators = unit_group_generators(modulus);
  std::vector<CharacterTable> tables;
  // One character per tuple of exponent choices on the cyclic factors.
  std::vector<unsigned long> choice(generators.size(), 0);
  for (;;) {
    CharacterTable table;
    table.modulus = modulus;
    // Enumerate the group as products of generator powers.
    std::vector<unsigned long> a(generators.size(), 0);
    for (;;) {
      Natural u = modulus == 1 ? Natural(0) : Natural(1);
      Value v = Value::one();
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (modulus > 1)
          u = (u * nt::powm(generators[i].first, Natural(a[i]), modulus)) %
              modulus;
        unsigned long ord = mpz_get_ui(generators[i].second.get_mpz_t());
        v = v * Value::root_of_unity(choice[i] * a[i] % ord, ord);
      }
      table.values[u] = v;
      std::size_t k = 0;
      for (; k < a.size(); ++k) {
        if (++a[k] < mpz_get_ui(generators[k].second.get_mpz_t())) break;
        a[k] = 0;
      }
      if (k == a.size()) break;
    }
    tables.push_back(std::move(table));
    std::size_t k = 0;
    for (; k < choice.size(); ++k) {
      if (++choice[k] < mpz_get_ui(generators[k].second.get_mpz_t())) break;
      choice[k] = 0;
    }
    if (k == choice.size()) break;
  }
  return tables;
}

dfao::Dfao character_machine(const CharacterTable& table, unsigned base) {
  unsigned long Q = mpz_get_ui(table.modulus.get_mpz_t());
  std::vector<Value> values;
  for (unsigned long v = 0; v < Q; ++v) {
    Natural residue(static_cast<unsigned long>(v));
    auto it = table.values.find(residue);
    values.push_back(it != table.values.end() ? it->second : Value::zero());
  }
  return dfao::from_periodic(values, base);
}

dfao::Dfao coprime_indicator(const Natural& modulus, unsigned base) {
  unsigned long Q = mpz_get_ui(modulus.get_mpz_t());
  std::vector<Value> values;
  for (unsigned long v = 0; v < Q; ++v)
    values.push_back(nt::gcd(Natural(v), modulus) == 1 ? Value::one()
                                                       : Value::zero());
  return dfao::from_periodic(values, base);
}

std::optional<CharacterMatch> match_character(const dfao::Dfao& a,
                                              const Natural& qmax) {
  require(a.validated, "match_character: machine must be validated");
  require(qmax >= 1 && qmax <= 1000000, "match_character: Qmax out of range");
  unsigned long limit = mpz_get_ui(qmax.get_mpz_t());
  for (unsigned long Q = 1; Q <= limit; ++Q) {
    Natural modulus(Q);
    // Screen: f on coprime n <= 3Q must be Q-periodic with unit values.
    CharacterTable table;
    table.modulus = modulus;
    bool ok = true;
    if (Q == 1) {
      table.values[0] = Value::one();
      for (unsigned long n = 0; n <= 3 && ok; ++n)
        ok = dfao::eval(a, Natural(n)).is_one();
    } else {
      for (unsigned long n = 1; n <= 3 * Q && ok; ++n) {
        Natural u(n % Q);
        if (nt::gcd(u, modulus) != 1) continue;
        Value v = dfao::eval(a, Natural(n));
        if (!v.unit_magnitude()) {
          ok = false;
          break;
        }
        auto [it, inserted] = table.values.try_emplace(u, v);
        if (!inserted && !(it->second == v)) ok = false;
      }
    }
    if (!ok || !is_homomorphism(table)) continue;
    // Exact verification: f masked to gcd(n, Q) = 1 must equal the
    // character machine as an automaton, for all n.
    dfao::Dfao masked = dfao::product(a, coprime_indicator(modulus, a.base),
                                      dfao::Combine::multiply);
    dfao::Dfao chi = character_machine(table, a.base);
    auto eq = dfao::equal(masked, chi);
    if (!eq.equal) continue;
    CharacterMatch match;
    match.table = std::move(table);
    match.certificate =
        "exact-equality: product(f, coprime_indicator(" + modulus.get_str() +
        ")) == character_machine; pairs explored over " +
        std::to_string(masked.state_count()) + "x" +
        std::to_string(chi.state_count()) + " states";
    return match;
  }
  return std::nullopt;
}

VanishingEvidence vanishing_check(const dfao::Dfao& a, const Natural& bound,
                                  unsigned refinement_E) {
  require(a.validated, "vanishing_check: machine must be validated");
  require(bound >= 2 && bound <= 100000000,
          "vanishing_check: prime bound out of range");
  VanishingEvidence evidence;
  evidence.checked_to = bound;
  evidence.refinement_E = refinement_E;
  for (std::uint64_t p : nt::primes_upto(mpz_get_ui(bound.get_mpz_t()))) {
    Natural prime(static_cast<unsigned long>(p));
    if (!dfao::eval(a, prime).is_zero()) evidence.exceptional.push_back(prime);
    Natural power = 1;
    for (unsigned e = 1; e <= refinement_E; ++e) {
      power *= prime;
      if (!dfao::eval(a, power).is_zero()) {
        evidence.p1hat_primes.push_back(prime);
        break;
      }
    }
  }
  return evidence;
}

Classification classify(const dfao::Dfao& a, ClassifyParams params) {
  require(a.validated, "classify: machine must be validated");
  // (1) Multiplicativity scan.
  auto mult = multiplicative::check_multiplicative(a, params.mult_bound, false);
  if (mult.status == multiplicative::MultStatus::counterexample) {
    // qmax stays unresolved (null in reports): the character search never ran.
    return {NotMultiplicative{mult.witness->first, mult.witness->second,
                              mult.pairs_checked},
            params};
  }
  // (2) Exact character recovery. Default Qmax ties the candidate period to
  // the automaton complexity: 2 * q^s0 * k0, capped at 10^4. Heuristic: no
  // effective bound on the period in terms of the machine is known.
  if (!params.qmax) {
    auto info = dfao::kernel(a);
    Natural heuristic = 2 * nt::pow_nat(a.base, info.s0) * info.k0;
    params.qmax = std::min(heuristic, Natural(10000));
  }
  if (auto match = match_character(a, *params.qmax))
    return {Character{std::move(match->table), std::move(match->certificate)},
            params};
  // (3) Vanishing certificate with the stability window (P/4, P].
  auto evidence = vanishing_check(a, params.prime_bound,
                                  params.profile_exponent);
  Natural window = params.prime_bound / 4;
  bool stable = std::all_of(
      evidence.exceptional.begin(), evidence.exceptional.end(),
      [&](const Natural& p) { return p <= window; });
  if (stable) return {VanishingOnLargePrimes{std::move(evidence)}, params};
  return {Inconclusive{"no character modulus <= Qmax matched exactly, and "
                       "exceptional primes persist in the stability window "
                       "(P/4, P]",
                       std::move(evidence)},
          params};
}

}  // namespace autoseq::classifier
