#include "autoseq/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace autoseq::numtheory {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_nonnegative(const Natural& n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

}  // namespace

Natural pow_nat(const Natural& base, unsigned long exp) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Natural powm(const Natural& base, const Natural& exp, const Natural& mod) {
  Natural out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           mod.get_mpz_t());
  return out;
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::optional<Natural> invert(const Natural& a, const Natural& m) {
  Natural out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    return std::nullopt;
  return out;
}

DigitString to_digits(const Natural& n, unsigned base) {
  require(base >= 2, "to_digits: base must be >= 2");
  require_nonnegative(n, "to_digits: n");
  DigitString d;
  d.base = base;
  if (n == 0) {
    d.digits = {0};
    return d;
  }
  Natural rest = n;
  while (rest > 0) {
    unsigned long digit = mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                                        static_cast<unsigned long>(base));
    d.digits.push_back(static_cast<unsigned>(digit));
  }
  return d;
}

Natural from_digits(const DigitString& d) {
  require(d.base >= 2, "from_digits: base must be >= 2");
  Natural n = 0;
  for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it) {
    require(*it < d.base, "from_digits: digit out of range for base");
    n = n * static_cast<unsigned long>(d.base) + static_cast<unsigned long>(*it);
  }
  return n;
}

unsigned nu(const Natural& p, const Natural& n) {
  require(p >= 2, "nu: p must be >= 2");
  require(n != 0, "nu: n = 0 has infinite valuation");
  require_nonnegative(n, "nu: n");
  Natural reduced;
  mp_bitcnt_t count =
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return static_cast<unsigned>(count);
}

std::map<Natural, unsigned> factorize(const Natural& n) {
  require(n >= 1, "factorize: n must be >= 1");
  std::map<Natural, unsigned> factors;
  Natural rest = n;
  auto strip = [&](const Natural& p) {
    Natural reduced;
    mp_bitcnt_t count =
        mpz_remove(reduced.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (count > 0) {
      factors[p] += static_cast<unsigned>(count);
      rest = reduced;
    }
  };
  strip(2);
  for (Natural p = 3; p * p <= rest && p < 1000000; p += 2) strip(p);
  // Pollard rho (Brent) on what trial division left behind.
  std::vector<Natural> stack;
  if (rest > 1) stack.push_back(rest);
  while (!stack.empty()) {
    Natural m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      factors[m] += 1;
      continue;
    }
    Natural d = m;  // find a nontrivial divisor
    for (unsigned long c = 1; d == m || d == 1; ++c) {
      Natural x = 2, y = 2, diff, g = 1;
      while (g == 1) {
        x = (x * x + c) % m;
        y = (y * y + c) % m;
        y = (y * y + c) % m;
        diff = x > y ? x - y : y - x;
        if (diff == 0) break;  // cycle without factor; retry with next c
        g = gcd(diff, m);
      }
      if (g != 1 && g != m) d = g;
    }
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return factors;
}

Natural euler_phi(const Natural& m) {
  require(m >= 1, "euler_phi: m must be >= 1");
  Natural phi = 1;
  for (const auto& [p, e] : factorize(m))
    phi *= pow_nat(p, e - 1) * (p - 1);
  return phi;
}

Natural mult_order(const Natural& b, const Natural& m) {
  require(m >= 2, "mult_order: modulus must be >= 2");
  Natural bm = b % m;
  if (bm < 0) bm += m;
  require(gcd(bm, m) == 1, "mult_order: gcd(b, m) must be 1");
  Natural order = euler_phi(m);
  for (const auto& [ell, e] : factorize(order)) {
    (void)e;
    while (order % ell == 0 && powm(bm, order / ell, m) == 1) order /= ell;
  }
  return order;
}

LteContext lte_context(const Natural& p, const Natural& b) {
  require(is_prime(p), "lte_context: p must be prime");
  require(gcd(b, p) == 1, "lte_context: gcd(b, p) must be 1");
  require(b >= 2, "lte_context: b = 1 gives b^ord - 1 = 0 (no finite gamma)");
  LteContext ctx;
  ctx.p = p;
  ctx.b = b;
  ctx.ord = p == 2 ? Natural(1) : mult_order(b, p);
  // gamma = nu_p(b^ord - 1) via modular valuation; b^ord != 1 since b >= 2.
  unsigned gamma = 1;
  while (powm(b, ctx.ord, pow_nat(p, gamma + 1)) == 1) ++gamma;
  ctx.gamma = gamma;
  return ctx;
}

unsigned lte_valuation(const LteContext& ctx, const Natural& n) {
  require(n >= 1, "lte_valuation: n must be >= 1");
  if (ctx.p == 2 && ctx.gamma < 2)
    throw std::invalid_argument(
        "lte_valuation: p = 2 requires gamma >= 2 (b = 1 mod 4); the law "
        "does not hold for this context");
  return ctx.gamma + nu(ctx.p, n);
}

unsigned alpha_p_delta(const Natural& p, unsigned delta, unsigned q,
                       std::optional<std::pair<Natural, unsigned>> divisor) {
  require(q >= 2, "alpha_p_delta: base must be >= 2");
  require(delta >= 1, "alpha_p_delta: delta must be >= 1");
  require(gcd(p, Natural(q)) == 1, "alpha_p_delta: gcd(p, q) must be 1");
  Natural q1;
  unsigned e1 = 1;
  if (divisor) {
    q1 = divisor->first;
    e1 = divisor->second;
    require(is_prime(q1) && e1 >= 1 && Natural(q) % pow_nat(q1, e1) == 0,
            "alpha_p_delta: divisor must be a prime-power divisor of q");
  } else if (is_prime(Natural(q))) {
    q1 = q;
  } else {
    auto factors = factorize(q);
    q1 = factors.begin()->first;
    e1 = factors.begin()->second;
  }
  Natural phi = euler_phi(pow_nat(q1, e1));
  Natural x = pow_nat(p, mpz_get_ui(Natural(phi * delta).get_mpz_t())) - 1;
  return nu(q1, x);
}

Natural crt_solve(
    const std::vector<std::pair<Natural, Natural>>& congruences) {
  Natural x = 0, modulus = 1;
  for (const auto& [residue, m] : congruences) {
    require(m >= 1, "crt_solve: moduli must be >= 1");
    if (m == 1) continue;
    require(gcd(modulus, m) == 1, "crt_solve: moduli must be pairwise coprime");
    Natural r = residue % m;
    if (r < 0) r += m;
    auto inv = invert(modulus % m, m);
    // gcd(modulus, m) = 1, so the inverse exists.
    Natural t = ((r - x % m + m) % m * *inv) % m;
    x += modulus * t;
    modulus *= m;
  }
  return x;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  require(n <= (1ull << 32), "primes_upto: sieve bound too large");
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

namespace {

bool miller_rabin_round(const Natural& n, const Natural& base,
                        const Natural& odd_part, unsigned two_exp) {
  Natural b = base % n;
  if (b == 0) return true;
  Natural x = powm(b, odd_part, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < two_exp; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                          29ul, 31ul, 37ul}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Natural odd_part = n - 1;
  unsigned two_exp = 0;
  while (odd_part % 2 == 0) {
    odd_part /= 2;
    ++two_exp;
  }
  // Deterministic for n < 2^64 with the first twelve primes as bases.
  static const Natural two_pow_64 = pow_nat(2, 64);
  std::vector<Natural> bases = {2,  3,  5,  7,  11, 13,
                                17, 19, 23, 29, 31, 37};
  if (n >= two_pow_64) {
    // Fixed 40-base battery above 2^64: reproducible runs, heuristic error
    // bound comparable to 40 random rounds.
    auto ps = primes_upto(200);
    bases.assign(ps.begin(), ps.begin() + 40);
  }
  for (const Natural& b : bases)
    if (!miller_rabin_round(n, b, odd_part, two_exp)) return false;
  return true;
}

}  // namespace autoseq::numtheory
