#include "autoseq/dfao.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace autoseq::dfao {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_validated(const Dfao& a) {
  if (!a.validated)
    throw std::invalid_argument("machine must pass validate() first");
}

std::string state_label(const Dfao& a, unsigned s) {
  if (s < a.names.size() && !a.names[s].empty()) return a.names[s];
  return "#" + std::to_string(s);
}

// First-reachability order: BFS from the initial state, digits ascending.
std::vector<unsigned> reach_order(const Dfao& a) {
  std::vector<unsigned> order;
  std::vector<bool> seen(a.state_count(), false);
  std::deque<unsigned> queue{a.initial};
  seen[a.initial] = true;
  while (!queue.empty()) {
    unsigned s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (unsigned d = 0; d < a.base; ++d) {
      unsigned t = a.transitions[s][d];
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return order;
}

Dfao reindex(const Dfao& a, const std::vector<unsigned>& order) {
  std::vector<unsigned> position(a.state_count(), 0);
  for (unsigned idx = 0; idx < order.size(); ++idx) position[order[idx]] = idx;
  Dfao out;
  out.base = a.base;
  out.initial = position[a.initial];
  out.transitions.resize(order.size());
  out.outputs.resize(order.size());
  for (unsigned idx = 0; idx < order.size(); ++idx) {
    unsigned s = order[idx];
    out.outputs[idx] = a.outputs[s];
    out.transitions[idx].resize(a.base);
    for (unsigned d = 0; d < a.base; ++d)
      out.transitions[idx][d] = position[a.transitions[s][d]];
    if (s < a.names.size() && !a.names[s].empty()) {
      out.names.resize(order.size());
      out.names[idx] = a.names[s];
    }
  }
  out.validated = a.validated;
  return out;
}

unsigned walk(const Dfao& a, unsigned from, const Natural& n) {
  unsigned s = from;
  for (unsigned d : numtheory::to_digits(n, a.base).digits)
    s = a.transitions[s][d];
  return s;
}

// State after reading the low `width` digits of r (zero padded).
unsigned walk_padded(const Dfao& a, unsigned from, const Natural& r,
                     unsigned width) {
  auto digits = numtheory::to_digits(r, a.base).digits;
  if (r == 0) digits.clear();
  digits.resize(width, 0);
  unsigned s = from;
  for (unsigned d : digits) s = a.transitions[s][d];
  return s;
}

std::vector<bool> reachable_from(const Dfao& a, unsigned start) {
  std::vector<bool> seen(a.state_count(), false);
  std::deque<unsigned> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    unsigned s = queue.front();
    queue.pop_front();
    for (unsigned d = 0; d < a.base; ++d) {
      unsigned t = a.transitions[s][d];
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

Dfao validate(Dfao a) {
  require(a.base >= 2, "validate: base must be >= 2");
  require(a.state_count() > 0, "validate: machine has no states");
  require(a.outputs.size() == a.state_count(),
          "validate: outputs and transitions disagree on state count");
  require(a.initial < a.state_count(), "validate: initial state out of range");
  for (unsigned s = 0; s < a.state_count(); ++s) {
    if (a.transitions[s].size() != a.base)
      throw std::invalid_argument("validate: state " + state_label(a, s) +
                                  " must have exactly one successor per "
                                  "digit (missing transition)");
    for (unsigned d = 0; d < a.base; ++d)
      require(a.transitions[s][d] < a.state_count(),
              "validate: transition target out of range at state " +
                  state_label(a, s));
  }
  // Prune unreachable states, preserving relative order.
  auto seen = reachable_from(a, a.initial);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    std::vector<unsigned> keep;
    for (unsigned s = 0; s < a.state_count(); ++s)
      if (seen[s]) keep.push_back(s);
    a = reindex(a, keep);
  }
  for (unsigned s = 0; s < a.state_count(); ++s) {
    if (!(a.outputs[a.transitions[s][0]] == a.outputs[s]))
      throw std::invalid_argument(
          "validate: zero-padding inconsistency at state " +
          state_label(a, s) + ": output(delta(s, 0)) != output(s)");
  }
  a.validated = true;
  return a;
}

Value eval(const Dfao& a, const Natural& n) {
  require_validated(a);
  if (n < 0) throw std::invalid_argument("eval: n must be >= 0");
  return a.outputs[walk(a, a.initial, n)];
}

Dfao canonicalize(const Dfao& a) {
  require_validated(a);
  return reindex(a, reach_order(a));
}

Dfao minimize(const Dfao& a) {
  require_validated(a);
  // Moore refinement: split by output, then by successor classes.
  std::vector<unsigned> cls(a.state_count());
  {
    std::map<Value, unsigned> by_output;
    for (unsigned s = 0; s < a.state_count(); ++s) {
      auto [it, inserted] = by_output.try_emplace(
          a.outputs[s], static_cast<unsigned>(by_output.size()));
      cls[s] = it->second;
    }
  }
  for (;;) {
    std::map<std::vector<unsigned>, unsigned> by_signature;
    std::vector<unsigned> next(a.state_count());
    for (unsigned s = 0; s < a.state_count(); ++s) {
      std::vector<unsigned> sig;
      sig.reserve(a.base + 1);
      sig.push_back(cls[s]);
      for (unsigned d = 0; d < a.base; ++d)
        sig.push_back(cls[a.transitions[s][d]]);
      auto [it, inserted] = by_signature.try_emplace(
          std::move(sig), static_cast<unsigned>(by_signature.size()));
      next[s] = it->second;
    }
    bool stable = by_signature.size() ==
                  static_cast<std::size_t>(
                      1 + *std::max_element(cls.begin(), cls.end()));
    cls = std::move(next);
    if (stable) break;
  }
  unsigned class_count = 1 + *std::max_element(cls.begin(), cls.end());
  Dfao out;
  out.base = a.base;
  out.initial = cls[a.initial];
  out.transitions.assign(class_count, std::vector<unsigned>(a.base, 0));
  out.outputs.assign(class_count, Value());
  std::vector<bool> done(class_count, false);
  for (unsigned s = 0; s < a.state_count(); ++s) {
    unsigned c = cls[s];
    if (done[c]) continue;
    done[c] = true;
    out.outputs[c] = a.outputs[s];
    for (unsigned d = 0; d < a.base; ++d)
      out.transitions[c][d] = cls[a.transitions[s][d]];
  }
  out.validated = true;  // quotient preserves all validate() invariants
  return reindex(out, reach_order(out));
}

Dfao product(const Dfao& a, const Dfao& b, Combine op) {
  require_validated(a);
  require_validated(b);
  require(a.base == b.base, "product: base mismatch");
  auto combine = [op](const Value& x, const Value& y) {
    switch (op) {
      case Combine::multiply:
        return x * y;
      case Combine::difference_flag:
        return x == y ? Value::zero() : Value::one();
    }
    throw std::logic_error("unknown combiner");
  };
  std::map<std::pair<unsigned, unsigned>, unsigned> index;
  std::vector<std::pair<unsigned, unsigned>> pairs;
  auto intern = [&](unsigned s, unsigned t) {
    auto [it, inserted] =
        index.try_emplace({s, t}, static_cast<unsigned>(pairs.size()));
    if (inserted) pairs.emplace_back(s, t);
    return it->second;
  };
  Dfao out;
  out.base = a.base;
  out.initial = intern(a.initial, b.initial);
  for (unsigned i = 0; i < pairs.size(); ++i) {
    auto [s, t] = pairs[i];
    out.outputs.push_back(combine(a.outputs[s], b.outputs[t]));
    out.transitions.emplace_back();
    for (unsigned d = 0; d < a.base; ++d)
      out.transitions[i].push_back(
          intern(a.transitions[s][d], b.transitions[t][d]));
  }
  out.validated = true;  // all pairs reachable; consistency is inherited
  return out;
}

Dfao map_output(const Dfao& a, const std::function<Value(const Value&)>& fn) {
  require_validated(a);
  Dfao out = a;
  for (auto& v : out.outputs) v = fn(v);
  return out;  // relabeling commutes with the zero-digit step
}

EqualityResult equal(const Dfao& a, const Dfao& b) {
  require_validated(a);
  require_validated(b);
  require(a.base == b.base, "equal: base mismatch");
  const unsigned q = a.base;
  std::map<std::pair<unsigned, unsigned>, unsigned> index;
  std::vector<std::pair<unsigned, unsigned>> pairs;
  std::vector<bool> differs;
  auto intern = [&](unsigned s, unsigned t) {
    auto [it, inserted] =
        index.try_emplace({s, t}, static_cast<unsigned>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(s, t);
      differs.push_back(!(a.outputs[s] == b.outputs[t]));
    }
    return it->second;
  };
  unsigned start = intern(a.initial, b.initial);
  bool any_differ = false;
  for (unsigned i = 0; i < pairs.size(); ++i) {
    auto [s, t] = pairs[i];
    any_differ = any_differ || differs[i];
    for (unsigned d = 0; d < q; ++d)
      intern(a.transitions[s][d], b.transitions[t][d]);
  }
  if (!any_differ) return {true, std::nullopt};

  // Least witness: layer k holds the minimal value of a length-k digit
  // string reaching each pair. The first layer that touches a differing
  // pair yields the least n (its argmin string is canonical, because a
  // trailing zero could be stripped to reach a differing pair earlier).
  std::vector<std::optional<Natural>> layer(pairs.size());
  layer[start] = Natural(0);
  Natural place = 1;  // q^k
  for (;;) {
    std::optional<Natural> best;
    for (unsigned i = 0; i < pairs.size(); ++i)
      if (differs[i] && layer[i] && (!best || *layer[i] < *best))
        best = *layer[i];
    if (best) return {false, best};
    std::vector<std::pair<Natural, unsigned>> frontier;
    for (unsigned i = 0; i < pairs.size(); ++i)
      if (layer[i]) frontier.emplace_back(*layer[i], i);
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::optional<Natural>> next(pairs.size());
    for (unsigned d = 0; d < q; ++d) {
      Natural high = place * d;
      for (const auto& [val, i] : frontier) {
        auto [s, t] = pairs[i];
        unsigned j = index.at({a.transitions[s][d], b.transitions[t][d]});
        if (!next[j]) next[j] = high + val;
      }
    }
    layer = std::move(next);
    place *= q;
  }
}

Dfao ap_subsequence(const Dfao& a, unsigned i, const Natural& r) {
  require_validated(a);
  require(r >= 0 && r < numtheory::pow_nat(a.base, i),
          "ap_subsequence: require 0 <= r < q^i");
  Dfao out = a;
  out.initial = walk_padded(a, a.initial, r, i);
  return validate(std::move(out));
}

bool zero_on_ap(const Dfao& a, unsigned i, const Natural& r) {
  require_validated(a);
  require(r >= 0 && r < numtheory::pow_nat(a.base, i),
          "zero_on_ap: require 0 <= r < q^i");
  unsigned start = walk_padded(a, a.initial, r, i);
  auto seen = reachable_from(a, start);
  for (unsigned s = 0; s < a.state_count(); ++s)
    if (seen[s] && !a.outputs[s].is_zero()) return false;
  return true;
}

KernelInfo kernel(const Dfao& a) {
  require_validated(a);
  Dfao m = minimize(a);
  const unsigned q = m.base;
  // Kernel classes over i >= 1 are the states of the minimized machine
  // reachable by at least one digit.
  std::vector<bool> in_kernel(m.state_count(), false);
  {
    std::deque<unsigned> queue;
    for (unsigned d = 0; d < q; ++d) {
      unsigned t = m.transitions[m.initial][d];
      if (!in_kernel[t]) {
        in_kernel[t] = true;
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      unsigned s = queue.front();
      queue.pop_front();
      for (unsigned d = 0; d < q; ++d) {
        unsigned t = m.transitions[s][d];
        if (!in_kernel[t]) {
          in_kernel[t] = true;
          queue.push_back(t);
        }
      }
    }
  }
  KernelInfo info;
  info.s0 = static_cast<unsigned>(
      std::count(in_kernel.begin(), in_kernel.end(), true));
  info.s0_with_identity = info.s0 + (in_kernel[m.initial] ? 0 : 1);
  info.k0 = numtheory::pow_nat(q, info.s0);

  // Minimal (i, r) per class by a layered search: layer i holds the least
  // r < q^i reaching each state via exactly i digits.
  std::vector<bool> repped(m.state_count(), false);
  std::vector<std::optional<Natural>> layer(m.state_count());
  layer[m.initial] = Natural(0);  // zero digits read
  Natural place = 1;              // q^i
  unsigned found = 0;
  for (unsigned i = 1; found < info.s0; ++i) {
    std::vector<std::pair<Natural, unsigned>> frontier;
    for (unsigned s = 0; s < m.state_count(); ++s)
      if (layer[s]) frontier.emplace_back(*layer[s], s);
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::optional<Natural>> next(m.state_count());
    for (unsigned d = 0; d < q; ++d) {
      Natural high = place * d;
      for (const auto& [val, s] : frontier) {
        unsigned t = m.transitions[s][d];
        if (!next[t]) {
          next[t] = high + val;
          if (!repped[t]) {
            repped[t] = true;
            ++found;
            info.representatives.emplace_back(i, *next[t]);
          }
        }
      }
    }
    layer = std::move(next);
    place *= q;
  }
  return info;
}

bool EventuallyPeriodic::all_equal(const Value& v) const {
  auto pred = [&](const Value& x) { return x == v; };
  return std::all_of(preperiod.begin(), preperiod.end(), pred) &&
         std::all_of(period.begin(), period.end(), pred);
}

Value EventuallyPeriodic::at(std::size_t n) const {
  if (n < preperiod.size()) return preperiod[n];
  return period[(n - preperiod.size()) % period.size()];
}

EventuallyPeriodic geometric_probe(const Dfao& a, unsigned A, unsigned C,
                                   const Natural& m0, const Natural& r) {
  require_validated(a);
  require(C >= 1, "geometric_probe: C must be >= 1");
  require(m0 >= 0, "geometric_probe: m0 must be >= 0");
  require(r >= 0 && r < numtheory::pow_nat(a.base, A),
          "geometric_probe: require r < q^A");
  // State after the A digits of r, then n blocks of C zero digits, then the
  // digits of m0; cycle detection on the C-fold zero step.
  unsigned u = walk_padded(a, a.initial, r, A);
  std::map<unsigned, unsigned> first_seen;
  std::vector<unsigned> states;
  while (!first_seen.count(u)) {
    first_seen[u] = static_cast<unsigned>(states.size());
    states.push_back(u);
    for (unsigned step = 0; step < C; ++step) u = a.transitions[u][0];
  }
  unsigned mu = first_seen[u];
  auto h = [&](unsigned state) { return a.outputs[walk(a, state, m0)]; };
  EventuallyPeriodic ep;
  for (unsigned n = 0; n < mu; ++n) ep.preperiod.push_back(h(states[n]));
  for (unsigned n = mu; n < states.size(); ++n)
    ep.period.push_back(h(states[n]));
  // Primitive period.
  for (std::size_t d = 1; d <= ep.period.size(); ++d) {
    if (ep.period.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t k = d; k < ep.period.size() && ok; ++k)
      ok = ep.period[k] == ep.period[k % d];
    if (ok) {
      ep.period.resize(d);
      break;
    }
  }
  // Minimal preperiod: absorb a matching tail into the cycle.
  while (!ep.preperiod.empty() && ep.preperiod.back() == ep.period.back()) {
    ep.preperiod.pop_back();
    std::rotate(ep.period.rbegin(), ep.period.rbegin() + 1, ep.period.rend());
  }
  return ep;
}

Dfao from_periodic(const std::vector<Value>& values, unsigned base) {
  require(!values.empty(), "from_periodic: period must be nonempty");
  require(base >= 2, "from_periodic: base must be >= 2");
  const unsigned long Q = values.size();
  // States are pairs (n mod Q so far, q^i mod Q); built lazily from (0, 1).
  std::map<std::pair<unsigned long, unsigned long>, unsigned> index;
  std::vector<std::pair<unsigned long, unsigned long>> states;
  auto intern = [&](unsigned long v, unsigned long p) {
    auto [it, inserted] =
        index.try_emplace({v, p}, static_cast<unsigned>(states.size()));
    if (inserted) states.emplace_back(v, p);
    return it->second;
  };
  Dfao out;
  out.base = base;
  out.initial = intern(0, 1 % Q);
  for (unsigned i = 0; i < states.size(); ++i) {
    require(states.size() <= 200000,
            "from_periodic: period too large for machine construction");
    auto [v, p] = states[i];
    out.outputs.push_back(values[v]);
    out.transitions.emplace_back();
    for (unsigned d = 0; d < base; ++d)
      out.transitions[i].push_back(intern((v + d * p) % Q, p * base % Q));
  }
  out.validated = true;
  return minimize(out);
}

}  // namespace autoseq::dfao
