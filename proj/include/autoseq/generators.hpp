#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoseq/classifier.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/numtheory.hpp"
#include "autoseq/value.hpp"

namespace autoseq::generators {

dfao::Dfao constant(const Value& v, unsigned base);
dfao::Dfao periodic(const std::vector<Value>& values, unsigned base);

// Character table from generator assignments, extended by the homomorphism
// property; rejects inconsistent assignments and generating sets that do
// not span the unit group.
classifier::CharacterTable dirichlet_table(
    const Natural& modulus,
    const std::vector<std::pair<Natural, Value>>& assignments);

dfao::Dfao dirichlet(const Natural& modulus,
                     const std::vector<std::pair<Natural, Value>>& assignments,
                     unsigned base);

dfao::Dfao thue_morse(bool signed_output);  // base 2
dfao::Dfao rudin_shapiro();                 // base 2, values +-1
dfao::Dfao power_indicator(unsigned powers_of);  // built in base powers_of
dfao::Dfao ap_indicator(const Natural& a, const Natural& m, unsigned base);

// Textual generator specs used by the CLI and tests:
//   constant:V | periodic:v0,v1,... | dirichlet:Q:g=v,... |
//   thue_morse[:signed|:binary] | rudin_shapiro | power_indicator:B |
//   ap_indicator:a,m
// with value literals as understood by Value::parse.
dfao::Dfao from_spec(const std::string& spec,
                     std::optional<unsigned> base_override = std::nullopt);

}  // namespace autoseq::generators
