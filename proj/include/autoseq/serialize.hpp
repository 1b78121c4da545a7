#pragma once

#include <string>

#include <json.hpp>

#include "autoseq/classifier.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/multiplicative.hpp"
#include "autoseq/proofkit.hpp"

namespace autoseq::serialize {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Sequence definition file. The canonical writer lists states in
// first-reachability order and prints rationals in lowest terms as
// "num/den"; readers accept any state order but only digit_order "lsb".
Json dfao_to_json(const dfao::Dfao& a);
std::string dfao_to_string(const dfao::Dfao& a);
dfao::Dfao dfao_from_json(const Json& doc);
dfao::Dfao dfao_from_string(const std::string& text);
dfao::Dfao dfao_from_file(const std::string& path);

Json value_to_json(const Value& v);
Value value_from_json(const Json& node);

// Report fragments with stable field names.
Json kernel_to_json(const dfao::KernelInfo& info);
Json eventually_periodic_to_json(const dfao::EventuallyPeriodic& ep);
Json mult_report_to_json(const multiplicative::MultReport& report);
Json profile_to_json(const multiplicative::PrimeProfile& profile);
Json profiles_to_json(const std::vector<multiplicative::PrimeProfile>& ps);
Json character_table_to_json(const classifier::CharacterTable& table);
Json classification_to_json(const classifier::Classification& c);
Json shift_witness_to_json(const proofkit::ShiftWitness& w);
Json geometric_witness_to_json(const proofkit::GeometricWitness& w);
Json coverage_to_json(const proofkit::CoverageReport& report);

}  // namespace autoseq::serialize
