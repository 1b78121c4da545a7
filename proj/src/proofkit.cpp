#include "autoseq/proofkit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace autoseq::proofkit {

namespace nt = autoseq::numtheory;

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Caps for the bounded witness searches; absences within these ranges are
// reported, not retried.
constexpr unsigned long kM0ScanCap = 100000;

}  // namespace

std::optional<ShiftWitness> find_equal_shifts(const dfao::Dfao& a,
                                              const Natural& r, unsigned A) {
  require(a.validated, "find_equal_shifts: machine must be validated");
  require(nt::pow_nat(a.base, A) > r, "find_equal_shifts: require q^A > r");
  auto info = dfao::kernel(a);
  const unsigned s0 = info.s0;
  // Pairs i < j in (A, A+s0+1], first in (j - i, i) order: s0 + 1 slots over
  // s0 classes, so a collision is guaranteed when every class appears.
  for (unsigned gap = 1; gap <= s0; ++gap) {
    for (unsigned i = A + 1; i + gap <= A + s0 + 1; ++i) {
      unsigned j = i + gap;
      auto eq = dfao::equal(dfao::ap_subsequence(a, i, r),
                            dfao::ap_subsequence(a, j, r));
      if (!eq.equal) continue;
      ShiftWitness w;
      w.r = r;
      w.A = A;
      w.i = i;
      w.j = j;
      w.certificate = "exact-equality: f(q^" + std::to_string(i) +
                      " m + r) == f(q^" + std::to_string(j) + " m + r)";
      Natural cap = std::min(info.k0, Natural(kM0ScanCap));
      Natural qi = nt::pow_nat(a.base, i);
      for (Natural m0 = 1; m0 <= cap; ++m0) {
        if (dfao::eval(a, qi * m0 + r).is_one()) {
          w.m0 = m0;
          break;
        }
      }
      return w;
    }
  }
  return std::nullopt;
}

std::optional<GeometricWitness> find_geometric_one(const dfao::Dfao& a,
                                                   const Natural& r) {
  require(a.validated, "find_geometric_one: machine must be validated");
  require(dfao::eval(a, r).is_one(), "find_geometric_one: require f(r) = 1");
  auto info = dfao::kernel(a);
  unsigned a_min = 1;
  while (nt::pow_nat(a.base, a_min) <= r) ++a_min;
  Natural cap = std::min(info.k0, Natural(kM0ScanCap));
  for (unsigned A = a_min; A <= a_min + info.s0; ++A) {
    for (unsigned C = 1; C <= info.s0; ++C) {
      for (Natural m0 = 1; m0 <= cap; ++m0) {
        auto probe = dfao::geometric_probe(a, A, C, m0, r);
        if (!probe.all_equal(Value::one())) continue;
        GeometricWitness w;
        w.r = r;
        w.A = A;
        w.C = C;
        w.m0 = m0;
        w.certificate = std::move(probe);
        return w;
      }
    }
  }
  return std::nullopt;
}

namespace {

// min(nu_p(q^(A + C n) m0 + r), cap + 1), computed mod p^(cap+1); exact
// whenever the result is <= cap.
unsigned capped_valuation(const Natural& p, unsigned q, unsigned A, unsigned C,
                          const Natural& m0, const Natural& r,
                          const Natural& n, unsigned cap) {
  Natural modulus = nt::pow_nat(p, cap + 1);
  Natural exponent = Natural(A) + Natural(C) * n;
  Natural x = (nt::powm(q, exponent, modulus) * (m0 % modulus) + r) % modulus;
  if (x == 0) return cap + 1;
  return nt::nu(p, x);
}

}  // namespace

Natural lte_divisibility_witness(const Natural& p, unsigned q, unsigned A,
                                 unsigned C, const Natural& m0,
                                 const Natural& r, unsigned k) {
  require(q >= 2 && C >= 1, "lte_divisibility_witness: require q >= 2, C >= 1");
  require(nt::is_prime(p), "lte_divisibility_witness: p must be prime");
  require(nt::gcd(p, Natural(q) * m0) == 1,
          "lte_divisibility_witness: require gcd(p, q*m0) = 1");
  require(m0 >= 1 && r >= 1, "lte_divisibility_witness: require m0, r >= 1");
  Natural b = nt::pow_nat(q, C);
  auto ctx = nt::lte_context(p, b);  // ord_p(q^C) and p^gamma || q^(C ord) - 1
  const unsigned gamma = ctx.gamma;
  require(!(p == 2 && gamma < 2),
          "lte_divisibility_witness: p = 2 requires q^C = 1 mod 4 "
          "(gamma >= 2); the lifting law fails otherwise");
  require(k >= gamma, "lte_divisibility_witness: require k >= gamma");

  auto measure = [&](const Natural& n) {
    return capped_valuation(p, q, A, C, m0, r, n, k);
  };
  // Exact valuation k via the descent n* + ord * p^(k - gamma), valid
  // whenever nu(X(n*)) > k.
  auto descend = [&](const Natural& n_star) -> Natural {
    return n_star + ctx.ord * nt::pow_nat(p, k - gamma);
  };

  // Seed: some n with valuation above gamma (or already exactly k). If one
  // exists at all, one exists below ord * p.
  std::optional<Natural> seed;
  unsigned seed_val = 0;
  Natural scan_bound = ctx.ord * p;
  for (Natural n = 0; n < scan_bound; ++n) {
    unsigned v = measure(n);
    if (v == k) return n;
    if (v > gamma) {
      seed = n;
      seed_val = v;
      break;
    }
  }
  if (!seed)
    throw std::domain_error(
        "lte_divisibility_witness: no n < ord*p with nu_p(q^(A+Cn) m0 + r) > "
        "gamma; precondition unverifiable in search range");

  Natural n_cur = *seed;
  unsigned val = seed_val;  // min(nu, k+1)
  while (val < k) {
    // Climb one level: q^(C ord p^(delta-gamma)) = 1 + B p^delta with B a
    // unit; pick t so the leading terms cancel mod p^(delta+1).
    const unsigned delta = val;  // exact, since val <= k
    Natural pd = nt::pow_nat(p, delta);
    Natural pd1 = pd * p;
    Natural exponent = Natural(A) + Natural(C) * n_cur;
    Natural x = (nt::powm(q, exponent, pd1) * (m0 % pd1) + r) % pd1;
    Natural u = (x / pd) % p;  // X(n_cur) / p^delta mod p, a unit
    Natural step = ctx.ord * nt::pow_nat(p, delta - gamma);
    Natural w = nt::powm(b, step, pd1);
    Natural big_b = ((w + pd1 - 1) % pd1) / pd % p;  // (q^(C step) - 1)/p^delta
    auto inv = nt::invert(r % p * big_b % p, p);
    if (!inv)
      throw std::domain_error(
          "lte_divisibility_witness: climb step degenerated (p divides r*B)");
    Natural t = u * *inv % p;
    n_cur += t * step;
    unsigned next = measure(n_cur);
    if (next <= val)
      throw std::domain_error(
          "lte_divisibility_witness: climb failed to raise the valuation");
    val = next;
  }
  Natural n_k = val == k ? n_cur : descend(n_cur);
  if (measure(n_k) != k)
    throw std::domain_error(
        "lte_divisibility_witness: direct valuation check failed");
  return n_k;
}

Natural build_r_A(const std::vector<Natural>& zero_primes, unsigned q,
                  unsigned A) {
  require(!zero_primes.empty(), "build_r_A: prime list must be nonempty");
  require(q >= 2, "build_r_A: base must be >= 2");
  std::set<Natural> distinct(zero_primes.begin(), zero_primes.end());
  require(distinct.size() == zero_primes.size(),
          "build_r_A: primes must be distinct");
  Natural product = 1;
  for (const auto& p : zero_primes) {
    require(nt::is_prime(p), "build_r_A: " + p.get_str() + " is not prime");
    require(p > q, "build_r_A: primes must exceed the base q");
    product *= p;
  }
  Natural qA = nt::pow_nat(q, A);
  require(qA > 100 * product * product,
          "build_r_A: require q^A > 100 * (prod p_s)^2");
  // r_A = -s q^A + p_s mod p_s^2, s = 1-based position.
  std::vector<std::pair<Natural, Natural>> congruences;
  for (std::size_t s = 1; s <= zero_primes.size(); ++s) {
    const Natural& p = zero_primes[s - 1];
    Natural p2 = p * p;
    Natural residue = (p - Natural(static_cast<unsigned long>(s)) * qA % p2 +
                       p2) % p2;
    congruences.emplace_back(residue, p2);
  }
  Natural r_a = nt::crt_solve(congruences);
  if (r_a == 0)
    throw std::domain_error("build_r_A: the CRT solution is 0, not in (0, Q^2)");
  for (std::size_t s = 1; s <= zero_primes.size(); ++s) {
    if (nt::nu(zero_primes[s - 1],
               r_a + qA * Natural(static_cast<unsigned long>(s))) != 1)
      throw std::domain_error(
          "build_r_A: exact divisibility p_s || r_A + q^A s failed for s = " +
          std::to_string(s));
  }
  return r_a;
}

CoverageReport unit_patch_products(
    const std::vector<std::pair<Natural, unsigned>>& y, unsigned q,
    unsigned alpha, unsigned alpha1) {
  require(q >= 2, "unit_patch_products: base must be >= 2");
  require(alpha >= 1 && alpha1 > alpha,
          "unit_patch_products: require alpha1 > alpha >= 1");
  require(y.size() <= 24, "unit_patch_products: subset budget exceeded");
  CoverageReport report;
  report.alpha = alpha;
  report.alpha1 = alpha1;
  report.modulus = nt::pow_nat(q, alpha1);
  Natural q_alpha = nt::pow_nat(q, alpha);
  Natural coset_size = report.modulus / q_alpha;
  require(coset_size <= 1000000, "unit_patch_products: coset too large");
  std::set<Natural> products{Natural(1)};
  for (const auto& [p, delta] : y) {
    require(nt::gcd(p, Natural(q)) == 1,
            "unit_patch_products: primes must be coprime to q");
    require(delta >= 1, "unit_patch_products: exponents must be >= 1");
    Natural factor = nt::powm(p, delta, report.modulus);
    std::set<Natural> extended = products;
    for (const auto& x : products) extended.insert(x * factor % report.modulus);
    products = std::move(extended);
  }
  report.subsets = static_cast<std::uint64_t>(1)
                   << static_cast<unsigned>(y.size());
  for (Natural t = 0; t < coset_size; ++t) {
    Natural target = (1 + t * q_alpha) % report.modulus;
    if (products.count(target))
      report.attained.push_back(target);
    else
      report.missing.push_back(target);
  }
  std::sort(report.attained.begin(), report.attained.end());
  std::sort(report.missing.begin(), report.missing.end());
  report.full_coverage = report.missing.empty();
  return report;
}

std::map<unsigned, std::uint64_t> alpha_statistics(
    const std::vector<multiplicative::PrimeProfile>& profiles) {
  std::map<unsigned, std::uint64_t> histogram;
  for (const auto& profile : profiles)
    if (profile.alpha_p) ++histogram[*profile.alpha_p];
  return histogram;
}

}  // namespace autoseq::proofkit
