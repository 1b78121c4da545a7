#include <doctest.h>

#include <set>

#include "autoseq/generators.hpp"
#include "autoseq/proofkit.hpp"
#include "testutil.hpp"

using namespace autoseq;
using namespace autoseq::proofkit;
namespace gen = autoseq::generators;
namespace nt = autoseq::numtheory;

namespace {

unsigned division_valuation(const Natural& p, Natural n) {
  unsigned count = 0;
  while (n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

// nu_p(q^(A + C n) m0 + r) without size limits, via modular arithmetic.
unsigned direct_valuation(const Natural& p, unsigned q, unsigned A, unsigned C,
                          const Natural& m0, const Natural& r,
                          const Natural& n) {
  for (unsigned cap = 8;; cap *= 2) {
    Natural modulus = nt::pow_nat(p, cap);
    Natural exponent = Natural(A) + Natural(C) * n;
    Natural x = (nt::powm(q, exponent, modulus) * (m0 % modulus) + r) % modulus;
    if (x != 0) return division_valuation(p, x);
  }
}

}  // namespace

TEST_CASE("equal shifts on the constant machine") {
  auto one = gen::constant(Value::one(), 2);
  auto witness = find_equal_shifts(one, 1, 1);
  REQUIRE(witness.has_value());
  CHECK(witness->i == 2);
  CHECK(witness->j == 3);
  REQUIRE(witness->m0.has_value());
  CHECK(*witness->m0 == 1);
  CHECK_THROWS_AS(find_equal_shifts(one, 5, 1), std::invalid_argument);
}

TEST_CASE("equal shifts on thue-morse are certified") {
  auto tm = gen::thue_morse(false);  // 0/1 outputs
  auto info = dfao::kernel(tm);
  auto witness = find_equal_shifts(tm, 1, 2);
  REQUIRE(witness.has_value());
  CHECK(witness->i > 2);
  CHECK(witness->j <= 2 + info.s0 + 1);
  CHECK(witness->j - witness->i <= info.s0);
  // Re-verify the certificate from scratch.
  CHECK(dfao::equal(dfao::ap_subsequence(tm, witness->i, 1),
                    dfao::ap_subsequence(tm, witness->j, 1)).equal);
}

TEST_CASE("equal shifts m0 search against exhaustive scan") {
  auto pow2 = gen::power_indicator(2);
  auto info = dfao::kernel(pow2);
  auto witness = find_equal_shifts(pow2, 1, 2);
  REQUIRE(witness.has_value());
  // Oracle: m0 <= k0 with f(2^i m0 + 1) = 1 means 2^i m0 + 1 a power of 2,
  // impossible for m0 >= 1; the witness must agree with the scan.
  bool oracle_found = false;
  for (Natural m = 1; m <= info.k0; ++m)
    oracle_found =
        oracle_found ||
        dfao::eval(pow2, nt::pow_nat(2, witness->i) * m + 1).is_one();
  CHECK_FALSE(oracle_found);
  CHECK_FALSE(witness->m0.has_value());
}

TEST_CASE("geometric witness on the constant machine") {
  auto one = gen::constant(Value::one(), 2);
  auto witness = find_geometric_one(one, 1);
  REQUIRE(witness.has_value());
  CHECK(witness->A == 1);
  CHECK(witness->C == 1);
  CHECK(witness->m0 == 1);
  CHECK(witness->certificate.all_equal(Value::one()));
}

TEST_CASE("geometric witness absent for the power indicator") {
  auto pow2 = gen::power_indicator(2);
  // 2^(A+Cn) m0 + 1 is odd and > 1, never a power of two.
  CHECK_FALSE(find_geometric_one(pow2, 1).has_value());
  CHECK_THROWS_AS(find_geometric_one(pow2, 3), std::invalid_argument);
}

TEST_CASE("geometric witness for chi mod 5 re-verifies") {
  auto chi = gen::dirichlet(5, {{2, Value::root_of_unity(1, 4)}}, 2);
  auto witness = find_geometric_one(chi, 1);
  REQUIRE(witness.has_value());
  auto probe = dfao::geometric_probe(chi, witness->A, witness->C, witness->m0,
                                     witness->r);
  CHECK(probe.all_equal(Value::one()));
  for (unsigned long n = 0; n <= 30; ++n) {
    Natural arg =
        nt::pow_nat(2, witness->A + witness->C * static_cast<unsigned>(n)) *
            witness->m0 +
        1;
    CHECK(dfao::eval(chi, arg).is_one());
  }
}

TEST_CASE("lte witness examples") {
  CHECK(lte_divisibility_witness(3, 2, 1, 1, 1, 1, 1) == 0);  // 2^1 + 1 = 3
  CHECK(lte_divisibility_witness(3, 2, 1, 1, 1, 1, 2) == 2);  // 2^3 + 1 = 9
  CHECK_THROWS_AS(lte_divisibility_witness(3, 2, 1, 1, 6, 1, 1),
                  std::invalid_argument);  // gcd(p, m0) != 1
  CHECK_THROWS_AS(lte_divisibility_witness(3, 6, 1, 1, 1, 1, 1),
                  std::invalid_argument);  // gcd(p, q) != 1
}

TEST_CASE("lte witness achieves every requested exact valuation") {
  struct Setting {
    unsigned long p;
    unsigned q, A, C;
    unsigned long m0, r;
  };
  for (const Setting& s : {Setting{3, 2, 1, 1, 1, 1}, Setting{3, 2, 2, 1, 1, 5},
                           Setting{5, 2, 1, 1, 1, 1}, Setting{7, 2, 1, 1, 1, 3},
                           Setting{5, 3, 1, 1, 1, 1}, Setting{7, 3, 2, 2, 2, 5},
                           Setting{11, 2, 1, 1, 3, 7}}) {
    Natural p(s.p);
    auto ctx = nt::lte_context(p, nt::pow_nat(s.q, s.C));
    bool seed_exists = false;
    for (Natural n = 0; n < ctx.ord * p && !seed_exists; ++n)
      seed_exists = direct_valuation(p, s.q, s.A, s.C, s.m0, s.r, n) >
                    ctx.gamma;
    for (unsigned k = ctx.gamma; k <= ctx.gamma + 4; ++k) {
      if (!seed_exists) break;
      Natural n_k = lte_divisibility_witness(p, s.q, s.A, s.C, s.m0, s.r, k);
      REQUIRE(direct_valuation(p, s.q, s.A, s.C, s.m0, s.r, n_k) == k);
    }
  }
}

TEST_CASE("lte witness survives a long climb") {
  // nu_3(2^(1+n) + 1) = 8 forces several climb iterations.
  Natural n8 = lte_divisibility_witness(3, 2, 1, 1, 1, 1, 8);
  CHECK(direct_valuation(3, 2, 1, 1, 1, 1, n8) == 8);
  Natural n10 = lte_divisibility_witness(5, 2, 1, 1, 1, 1, 7);
  CHECK(direct_valuation(5, 2, 1, 1, 1, 1, n10) == 7);
}

TEST_CASE("lte witness signals when no seed exists") {
  // 2^n + 1 is never divisible by 7 (2^n mod 7 cycles 1, 2, 4).
  CHECK_THROWS_AS(lte_divisibility_witness(7, 2, 0, 1, 1, 1, 1),
                  std::domain_error);
}

TEST_CASE("lte witness rejects p = 2 when the lifting law fails") {
  // q^C = 3 mod 4 gives gamma = 1.
  CHECK_THROWS_AS(lte_divisibility_witness(2, 3, 1, 1, 1, 1, 2),
                  std::invalid_argument);
}

TEST_CASE("build_r_A reproduces the worked constants") {
  Natural r = build_r_A({3, 5}, 2, 15);
  CHECK(r == 94);
  CHECK(division_valuation(3, r + nt::pow_nat(2, 15) * 1) == 1);
  CHECK(division_valuation(5, r + nt::pow_nat(2, 15) * 2) == 1);
  // Independent oracle: scan all residues mod 225 for the two conditions.
  std::vector<Natural> hits;
  for (Natural cand = 1; cand < 225; ++cand) {
    if (division_valuation(3, cand + nt::pow_nat(2, 15) * 1) == 1 &&
        cand % 9 == Natural(94) % 9 &&
        division_valuation(5, cand + nt::pow_nat(2, 15) * 2) == 1 &&
        cand % 25 == Natural(94) % 25)
      hits.push_back(cand);
  }
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == 94);
}

TEST_CASE("build_r_A single prime and error cases") {
  Natural r = build_r_A({3}, 2, 10);
  CHECK(r > 0);
  CHECK(r < 9);
  CHECK(division_valuation(3, r + nt::pow_nat(2, 10)) == 1);
  CHECK_THROWS_AS(build_r_A({}, 2, 10), std::invalid_argument);
  CHECK_THROWS_AS(build_r_A({3, 3}, 2, 15), std::invalid_argument);
  CHECK_THROWS_AS(build_r_A({3, 5}, 2, 10), std::invalid_argument);  // bound
  CHECK_THROWS_AS(build_r_A({2, 5}, 2, 15), std::invalid_argument);  // p <= q
  CHECK_THROWS_AS(build_r_A({9}, 2, 15), std::invalid_argument);  // not prime
}

TEST_CASE("unit patch coverage examples") {
  auto c1 = unit_patch_products({{3, 1}}, 2, 1, 2);
  CHECK(c1.full_coverage);
  CHECK(c1.attained == std::vector<Natural>{1, 3});
  auto c2 = unit_patch_products({{5, 1}}, 2, 2, 3);
  CHECK(c2.full_coverage);
  CHECK(c2.attained == std::vector<Natural>{1, 5});
  auto c3 = unit_patch_products({}, 2, 1, 3);
  CHECK_FALSE(c3.full_coverage);
  CHECK(c3.attained == std::vector<Natural>{1});
  CHECK(c3.missing == std::vector<Natural>{3, 5, 7});
  CHECK_THROWS_AS(unit_patch_products({}, 2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(unit_patch_products({{2, 1}}, 2, 1, 2),
                  std::invalid_argument);
}

TEST_CASE("unit patch coverage against the exhaustive subset oracle") {
  std::vector<std::pair<Natural, unsigned>> y = {{3, 1}, {5, 2}, {7, 1}};
  auto report = unit_patch_products(y, 2, 1, 4);
  std::set<Natural> oracle;
  Natural modulus = nt::pow_nat(2, 4);
  for (unsigned mask = 0; mask < 8; ++mask) {
    Natural prod = 1;
    for (unsigned bit = 0; bit < 3; ++bit)
      if (mask & (1u << bit))
        prod = prod * nt::powm(y[bit].first, y[bit].second, modulus) % modulus;
    oracle.insert(prod);  // products of odd primes are odd, so all are targets
  }
  std::set<Natural> attained(report.attained.begin(), report.attained.end());
  CHECK(attained == oracle);
  // Every odd residue in [1, 16) is either attained or missing.
  CHECK(report.attained.size() + report.missing.size() == 8);
}

TEST_CASE("unit patch coverage is monotone in Y") {
  std::vector<std::pair<Natural, unsigned>> small = {{3, 1}};
  std::vector<std::pair<Natural, unsigned>> large = {{3, 1}, {5, 1}, {7, 2}};
  auto a = unit_patch_products(small, 2, 1, 4);
  auto b = unit_patch_products(large, 2, 1, 4);
  // Every target attained with the smaller Y stays attained.
  std::set<Natural> attained_b(b.attained.begin(), b.attained.end());
  for (const auto& t : a.attained) CHECK(attained_b.count(t) == 1);
}

TEST_CASE("alpha statistics histogram") {
  auto profiles = multiplicative::prime_profiles(
      gen::constant(Value::one(), 2), 100, 6);
  auto histogram = alpha_statistics(profiles);
  // Oracle: for the constant sequence alpha_p = nu_2(p - 1) for odd p.
  std::map<unsigned, std::uint64_t> oracle;
  for (std::uint64_t p : nt::primes_upto(100)) {
    if (p == 2) continue;
    ++oracle[division_valuation(2, Natural(static_cast<unsigned long>(p)) -
                                       1)];
  }
  CHECK(histogram == oracle);
  CHECK(histogram.at(1) == 13);  // primes 3 mod 4 up to 100

  CHECK(alpha_statistics({}).empty());
  auto none = alpha_statistics(
      multiplicative::prime_profiles(gen::power_indicator(2), 100, 6));
  CHECK(none.empty());
}
