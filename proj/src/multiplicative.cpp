#include "autoseq/multiplicative.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace autoseq::multiplicative {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

MultReport check_multiplicative(const dfao::Dfao& a, const Natural& bound,
                                bool complete) {
  require(a.validated, "check_multiplicative: machine must be validated");
  require(bound >= 2, "check_multiplicative: bound must be >= 2");
  require(bound <= 10000000, "check_multiplicative: bound too large for the "
                             "exhaustive pair scan");
  const std::uint64_t N = mpz_get_ui(bound.get_mpz_t());

  MultReport report;
  report.bound = bound;
  report.complete = complete;

  // f(1..N) as state indices; outputs stay shared.
  std::vector<unsigned> state_of(N + 1, 0);
  for (std::uint64_t n = 1; n <= N; ++n) {
    unsigned s = a.initial;
    for (std::uint64_t rest = n; rest > 0; rest /= a.base)
      s = a.transitions[s][static_cast<unsigned>(rest % a.base)];
    state_of[n] = s;
  }
  auto f = [&](std::uint64_t n) { return a.outputs[state_of[n]]; };

  // All pairs 2 <= m <= n with m*n <= N, then the (m+n, m) scan order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t m = 2; m * m <= N; ++m)
    for (std::uint64_t n = m; m * n <= N; ++n) {
      if (!complete && std::gcd(m, n) != 1) continue;
      pairs.emplace_back(m, n);
    }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) {
              return std::pair(x.first + x.second, x.first) <
                     std::pair(y.first + y.second, y.first);
            });
  for (const auto& [m, n] : pairs) {
    ++report.pairs_checked;
    if (!(f(m * n) == f(m) * f(n))) {
      report.status = MultStatus::counterexample;
      report.witness = {Natural(static_cast<unsigned long>(m)),
                        Natural(static_cast<unsigned long>(n))};
      return report;
    }
  }
  // Pair scan clean; f(1) = 1 is still required, reported as the
  // conventional witness (1, 1).
  ++report.pairs_checked;
  if (!f(1).is_one()) {
    report.status = MultStatus::counterexample;
    report.witness = {Natural(1), Natural(1)};
    return report;
  }
  report.status = complete ? MultStatus::completely_multiplicative
                           : MultStatus::multiplicative;
  return report;
}

dfao::Dfao binary_reduction(const dfao::Dfao& a) {
  require(a.validated, "binary_reduction: machine must be validated");
  return dfao::map_output(a, [](const Value& v) {
    return v.is_zero() ? Value::zero() : Value::one();
  });
}

std::vector<PrimeProfile> prime_profiles(const dfao::Dfao& a, const Natural& P,
                                         unsigned E) {
  require(a.validated, "prime_profiles: machine must be validated");
  require(P >= 1 && E >= 1, "prime_profiles: require P, E >= 1");
  require(P <= 100000000, "prime_profiles: prime bound too large");
  std::vector<PrimeProfile> profiles;
  for (std::uint64_t p : numtheory::primes_upto(mpz_get_ui(P.get_mpz_t()))) {
    PrimeProfile profile;
    profile.p = Natural(static_cast<unsigned long>(p));
    profile.divides_base = a.base % p == 0;
    Natural power = 1;
    for (unsigned e = 1; e <= E; ++e) {
      power *= profile.p;
      profile.values.push_back(dfao::eval(a, power));
    }
    profile.in_P0 = profile.values.front().is_zero();
    for (const Value& v : profile.values) {
      if (!v.is_zero()) profile.in_P1hat = true;  // reduced value 1
      if (v.magnitude() > 1) profile.in_Pgt1 = true;
      if (!v.is_zero() && v.magnitude() < 1) profile.in_Plt1 = true;
    }
    if (!profile.divides_base && profile.in_P1hat) {
      for (unsigned delta = 1; delta <= E; ++delta) {
        if (profile.values[delta - 1].is_zero()) continue;
        unsigned alpha = numtheory::alpha_p_delta(profile.p, delta, a.base);
        if (!profile.alpha_p || alpha < *profile.alpha_p) {
          profile.alpha_p = alpha;
          profile.delta_p = delta;
        }
      }
    }
    profiles.push_back(std::move(profile));
  }
  return profiles;
}

}  // namespace autoseq::multiplicative
