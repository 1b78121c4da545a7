#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoseq/numtheory.hpp"
#include "autoseq/value.hpp"

namespace autoseq::dfao {

// Deterministic finite automaton with output. eval feeds the base-q digits
// of n least significant first; zero-padding consistency
// (output(delta(s, 0)) == output(s) for every reachable s) makes the result
// independent of leading zeros of n.
struct Dfao {
  unsigned base = 2;
  unsigned initial = 0;
  std::vector<std::vector<unsigned>> transitions;  // [state][digit] -> state
  std::vector<Value> outputs;
  std::vector<std::string> names;  // optional; assigned on serialization
  bool validated = false;

  std::size_t state_count() const { return transitions.size(); }
};

// Checks totality, prunes unreachable states and verifies zero-padding
// consistency. Throws std::invalid_argument naming the offending state.
Dfao validate(Dfao a);

Value eval(const Dfao& a, const Natural& n);

// Renumbers states in first-reachability (BFS, digit-ascending) order.
Dfao canonicalize(const Dfao& a);

// Moore partition refinement; the result is canonical. Semantics preserved:
// equal(a, minimize(a)) holds for every validated machine.
Dfao minimize(const Dfao& a);

// Pointwise combiners the value alphabet is closed under.
enum class Combine {
  multiply,         // exact product
  difference_flag,  // zero iff the two values are equal, else one
};

Dfao product(const Dfao& a, const Dfao& b, Combine op);

// Output relabeling: same base, states and transitions, outputs mapped.
Dfao map_output(const Dfao& a, const std::function<Value(const Value&)>& fn);

struct EqualityResult {
  bool equal = false;
  // Least differing n, minimizing digit length first and value second.
  std::optional<Natural> counterexample;
};

// Exact equality of the evaluated sequences over all n >= 0.
EqualityResult equal(const Dfao& a, const Dfao& b);

// Machine computing n -> eval(a, q^i * n + r). Requires r < q^i.
Dfao ap_subsequence(const Dfao& a, unsigned i, const Natural& r);

// True iff eval(a, q^i * n + r) = 0 for every n >= 0 (all states reachable
// in the subsequence machine output zero).
bool zero_on_ap(const Dfao& a, unsigned i, const Natural& r);

struct KernelInfo {
  unsigned s0 = 0;                // distinct subsequences over i >= 1
  unsigned s0_with_identity = 0;  // including the i = 0 class
  // One (i, r) per class, minimal in (i, then r) order, 0 <= r < q^i.
  std::vector<std::pair<unsigned, Natural>> representatives;
  Natural k0;  // q^s0
};

KernelInfo kernel(const Dfao& a);

struct EventuallyPeriodic {
  std::vector<Value> preperiod;  // minimal length
  std::vector<Value> period;     // primitive, nonempty

  bool all_equal(const Value& v) const;
  Value at(std::size_t n) const;
};

// Exact eventually-periodic description of n -> eval(a, q^(A+C*n) * m0 + r),
// by cycle detection on the C-fold zero-digit map. Requires r < q^A.
EventuallyPeriodic geometric_probe(const Dfao& a, unsigned A, unsigned C,
                                   const Natural& m0, const Natural& r);

// Machine with eval(result, n) = values[n mod values.size()].
Dfao from_periodic(const std::vector<Value>& values, unsigned base);

}  // namespace autoseq::dfao
