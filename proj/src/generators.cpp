#include "autoseq/generators.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace autoseq::generators {

namespace nt = autoseq::numtheory;

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.push_back("");
  return parts;
}

Natural parse_natural(const std::string& text) {
  require(!text.empty(), "empty integer literal");
  Natural n;
  require(mpz_set_str(n.get_mpz_t(), text.c_str(), 10) == 0 && n >= 0,
          "malformed nonnegative integer: " + text);
  return n;
}

}  // namespace

dfao::Dfao constant(const Value& v, unsigned base) {
  dfao::Dfao a;
  a.base = base;
  a.initial = 0;
  a.transitions = {std::vector<unsigned>(base, 0)};
  a.outputs = {v};
  return dfao::validate(std::move(a));
}

dfao::Dfao periodic(const std::vector<Value>& values, unsigned base) {
  return dfao::from_periodic(values, base);
}

classifier::CharacterTable dirichlet_table(
    const Natural& modulus,
    const std::vector<std::pair<Natural, Value>>& assignments) {
  require(modulus >= 1, "dirichlet: modulus must be >= 1");
  classifier::CharacterTable table;
  table.modulus = modulus;
  Natural one = modulus == 1 ? Natural(0) : Natural(1);
  table.values[one] = Value::one();
  std::vector<std::pair<Natural, Value>> gens;
  for (const auto& [g, v] : assignments) {
    Natural residue = g % modulus;
    require(nt::gcd(residue, modulus) == 1,
            "dirichlet: generator " + g.get_str() +
                " is not coprime to the modulus");
    require(v.unit_magnitude(),
            "dirichlet: character values must have magnitude 1");
    gens.emplace_back(residue, v);
  }
  // Close under multiplication by the generators; conflicts mean the
  // assignments are not a homomorphism.
  std::deque<Natural> queue{one};
  while (!queue.empty()) {
    Natural u = queue.front();
    queue.pop_front();
    Value vu = table.values.at(u);
    for (const auto& [g, vg] : gens) {
      Natural ug = modulus == 1 ? one : (u * g) % modulus;
      Value vug = vu * vg;
      auto [it, inserted] = table.values.try_emplace(ug, vug);
      if (inserted)
        queue.push_back(ug);
      else
        require(it->second == vug,
                "dirichlet: assignments are inconsistent (no homomorphism "
                "extends them)");
    }
  }
  require(table.values.size() == mpz_get_ui(nt::euler_phi(modulus).get_mpz_t()),
          "dirichlet: generators do not generate the unit group");
  require(classifier::is_homomorphism(table),
          "dirichlet: assignments do not define a character");
  return table;
}

dfao::Dfao dirichlet(const Natural& modulus,
                     const std::vector<std::pair<Natural, Value>>& assignments,
                     unsigned base) {
  return classifier::character_machine(dirichlet_table(modulus, assignments),
                                       base);
}

dfao::Dfao thue_morse(bool signed_output) {
  dfao::Dfao a;
  a.base = 2;
  a.initial = 0;
  a.transitions = {{0, 1}, {1, 0}};  // digit-sum parity
  a.outputs = signed_output
                  ? std::vector<Value>{Value::one(), Value::integer(-1)}
                  : std::vector<Value>{Value::zero(), Value::one()};
  return dfao::validate(std::move(a));
}

dfao::Dfao rudin_shapiro() {
  dfao::Dfao a;
  a.base = 2;
  a.initial = 0;
  // State = (previous digit, parity of adjacent 11 pairs so far).
  a.transitions.resize(4);
  for (unsigned last = 0; last < 2; ++last)
    for (unsigned par = 0; par < 2; ++par) {
      unsigned s = last + 2 * par;
      for (unsigned d = 0; d < 2; ++d) {
        unsigned npar = par ^ (last & d);
        a.transitions[s].push_back(d + 2 * npar);
      }
    }
  a.outputs = {Value::one(), Value::one(), Value::integer(-1),
               Value::integer(-1)};
  return dfao::validate(std::move(a));
}

dfao::Dfao power_indicator(unsigned powers_of) {
  require(powers_of >= 2, "power_indicator: base must be >= 2");
  dfao::Dfao a;
  a.base = powers_of;
  a.initial = 0;
  // 0: only zeros read, 1: exactly one digit 1 read, 2: dead.
  a.transitions.resize(3, std::vector<unsigned>(powers_of, 2));
  a.transitions[0][0] = 0;
  a.transitions[0][1] = 1;
  a.transitions[1][0] = 1;
  a.transitions[2].assign(powers_of, 2);
  a.outputs = {Value::zero(), Value::one(), Value::zero()};
  return dfao::validate(std::move(a));
}

dfao::Dfao ap_indicator(const Natural& a, const Natural& m, unsigned base) {
  require(m >= 1, "ap_indicator: modulus must be >= 1");
  require(m <= 100000, "ap_indicator: modulus too large");
  unsigned long period = mpz_get_ui(m.get_mpz_t());
  Natural residue = a % m;
  std::vector<Value> values(period, Value::zero());
  values[mpz_get_ui(residue.get_mpz_t())] = Value::one();
  return dfao::from_periodic(values, base);
}

dfao::Dfao from_spec(const std::string& spec,
                     std::optional<unsigned> base_override) {
  auto parts = split(spec, ':');
  require(!parts.empty() && !parts[0].empty(), "empty generator spec");
  const std::string& kind = parts[0];
  unsigned base = base_override.value_or(2);
  require(base >= 2, "generator base must be >= 2");
  auto want_args = [&](std::size_t n) {
    require(parts.size() == n + 1,
            "generator " + kind + " takes " + std::to_string(n) +
                " ':'-separated argument(s)");
  };
  if (kind == "constant") {
    want_args(1);
    return constant(Value::parse(parts[1]), base);
  }
  if (kind == "periodic") {
    want_args(1);
    std::vector<Value> values;
    for (const auto& lit : split(parts[1], ','))
      values.push_back(Value::parse(lit));
    return periodic(values, base);
  }
  if (kind == "dirichlet") {
    want_args(2);
    Natural modulus = parse_natural(parts[1]);
    std::vector<std::pair<Natural, Value>> assignments;
    for (const auto& item : split(parts[2], ',')) {
      auto eq = item.find('=');
      require(eq != std::string::npos,
              "dirichlet assignments look like g=value");
      assignments.emplace_back(parse_natural(item.substr(0, eq)),
                               Value::parse(item.substr(eq + 1)));
    }
    return dirichlet(modulus, assignments, base);
  }
  if (kind == "thue_morse") {
    bool signed_output = true;
    if (parts.size() == 2) {
      require(parts[1] == "signed" || parts[1] == "binary",
              "thue_morse variants: signed, binary");
      signed_output = parts[1] == "signed";
    } else {
      want_args(0);
    }
    require(!base_override || *base_override == 2,
            "thue_morse is a base-2 sequence");
    return thue_morse(signed_output);
  }
  if (kind == "rudin_shapiro") {
    want_args(0);
    require(!base_override || *base_override == 2,
            "rudin_shapiro is a base-2 sequence");
    return rudin_shapiro();
  }
  if (kind == "power_indicator") {
    want_args(1);
    Natural b = parse_natural(parts[1]);
    require(b >= 2 && b <= 64, "power_indicator base must be in [2, 64]");
    unsigned powers_of = static_cast<unsigned>(mpz_get_ui(b.get_mpz_t()));
    require(!base_override || *base_override == powers_of,
            "power_indicator is built in its own base");
    return power_indicator(powers_of);
  }
  if (kind == "ap_indicator") {
    want_args(1);
    auto args = split(parts[1], ',');
    require(args.size() == 2, "ap_indicator takes a,m");
    return ap_indicator(parse_natural(args[0]), parse_natural(args[1]), base);
  }
  throw std::invalid_argument("unknown generator: " + kind);
}

}  // namespace autoseq::generators
