#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "autoseq/dfao.hpp"
#include "autoseq/generators.hpp"
#include "autoseq/numtheory.hpp"
#include "autoseq/value.hpp"

namespace testutil {

using autoseq::Natural;
using autoseq::Value;

// Deterministic RNG (splitmix64); tests never read AUTOSEQ_SEED.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Random validated machine: random transitions, outputs constant on each
// component of the zero-digit functional graph so zero-padding consistency
// holds by construction.
inline autoseq::dfao::Dfao random_dfao(Rng& rng, unsigned max_states,
                                       unsigned base,
                                       const std::vector<Value>& palette) {
  unsigned n = 1 + static_cast<unsigned>(rng.below(max_states));
  autoseq::dfao::Dfao a;
  a.base = base;
  a.transitions.resize(n);
  for (unsigned s = 0; s < n; ++s)
    for (unsigned d = 0; d < base; ++d)
      a.transitions[s].push_back(static_cast<unsigned>(rng.below(n)));
  // Union-find over s ~ delta(s, 0).
  std::vector<unsigned> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (unsigned s = 0; s < n; ++s) {
    unsigned x = find(s), y = find(a.transitions[s][0]);
    if (x != y) parent[x] = y;
  }
  std::vector<Value> component_output(n);
  for (unsigned s = 0; s < n; ++s)
    if (find(s) == s)
      component_output[s] = palette[rng.below(palette.size())];
  a.outputs.resize(n);
  for (unsigned s = 0; s < n; ++s) a.outputs[s] = component_output[find(s)];
  a.initial = static_cast<unsigned>(rng.below(n));
  return autoseq::dfao::validate(std::move(a));
}

inline std::vector<Value> binary_palette() {
  return {Value::zero(), Value::one()};
}

inline std::vector<Value> mixed_palette() {
  return {Value::zero(), Value::one(), Value::integer(-1),
          Value::root_of_unity(1, 4)};
}

// Independent oracles for the built-in sequences.
inline int thue_morse_parity(std::uint64_t n) {
  int parity = 0;
  for (; n; n >>= 1) parity ^= static_cast<int>(n & 1);
  return parity;
}

inline int rudin_shapiro_sign(std::uint64_t n) {
  int pairs = 0;
  for (; n; n >>= 1)
    if ((n & 3) == 3) ++pairs;
  return pairs % 2 == 0 ? 1 : -1;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t b) {
  if (n == 0) return false;
  while (n % b == 0) n /= b;
  return n == 1;
}

}  // namespace testutil
