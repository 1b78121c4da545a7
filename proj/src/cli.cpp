#include "autoseq/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autoseq/classifier.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/generators.hpp"
#include "autoseq/multiplicative.hpp"
#include "autoseq/proofkit.hpp"
#include "autoseq/serialize.hpp"

namespace autoseq::cli {

namespace {

using serialize::Json;

Natural parse_natural(const std::string& text) {
  Natural n;
  if (text.empty() ||
      mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0 || n < 0)
    throw std::invalid_argument("malformed nonnegative integer: " + text);
  return n;
}

unsigned parse_small(const std::string& text, const char* what) {
  Natural n = parse_natural(text);
  if (n > 1000000)
    throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<unsigned>(mpz_get_ui(n.get_mpz_t()));
}

// Input is a sequence definition file when the path exists, else a
// generator spec.
dfao::Dfao load_input(const std::string& input,
                      const std::optional<unsigned>& base) {
  if (std::filesystem::exists(input)) {
    auto machine = serialize::dfao_from_file(input);
    if (base && *base != machine.base)
      throw std::invalid_argument(
          "--base conflicts with the base stored in " + input);
    return machine;
  }
  return generators::from_spec(input, base);
}

void render_text(const Json& node, const std::string& prefix,
                 std::ostream& out) {
  auto scalar = [](const Json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
  };
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object() || value.is_array()) {
        render_text(value, path, out);
      } else {
        out << path << ": " << scalar(value) << "\n";
      }
    }
    return;
  }
  if (node.is_array()) {
    bool flat = true;
    for (const auto& v : node)
      flat = flat && !v.is_object() && !v.is_array();
    if (flat) {
      out << prefix << ":";
      if (node.empty()) out << " (none)";
      for (const auto& v : node) out << " " << scalar(v);
      out << "\n";
      return;
    }
    unsigned idx = 0;
    for (const auto& v : node)
      render_text(v, prefix + "[" + std::to_string(idx++) + "]", out);
    return;
  }
  out << prefix << ": " << scalar(node) << "\n";
}

void emit(const Json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    render_text(doc, "", out);
  }
}

struct CommonFlags {
  std::string format = "text";
  std::string base;

  std::optional<unsigned> base_override() const {
    if (base.empty()) return std::nullopt;
    return parse_small(base, "--base");
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_base = true) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  if (with_base)
    cmd->add_option("--base", flags.base,
                    "Base q for generator inputs (files carry their own)");
}

Json doc_head(const char* kind) {
  Json doc;
  doc["schema_version"] = serialize::kSchemaVersion;
  doc["kind"] = kind;
  return doc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact analysis of base-q automatic sequences"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate f(n) exactly");
  std::string eval_input, eval_n;
  CommonFlags eval_flags;
  eval_cmd->add_option("input", eval_input, "Machine file or generator spec")
      ->required();
  eval_cmd->add_option("n", eval_n, "Argument n")->required();
  add_common(eval_cmd, eval_flags);

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel classes, s0 and k0");
  std::string kernel_input;
  CommonFlags kernel_flags;
  kernel_cmd->add_option("input", kernel_input)->required();
  add_common(kernel_cmd, kernel_flags);

  // minimize
  auto* minimize_cmd =
      app.add_subcommand("minimize", "Minimal machine, canonical form");
  std::string minimize_input;
  CommonFlags minimize_flags;
  minimize_cmd->add_option("input", minimize_input)->required();
  add_common(minimize_cmd, minimize_flags);

  // equal
  auto* equal_cmd =
      app.add_subcommand("equal", "Exact sequence equality of two machines");
  std::string equal_a, equal_b;
  CommonFlags equal_flags;
  equal_cmd->add_option("first", equal_a)->required();
  equal_cmd->add_option("second", equal_b)->required();
  add_common(equal_cmd, equal_flags);

  // check-mult
  auto* mult_cmd =
      app.add_subcommand("check-mult", "Multiplicativity scan up to N");
  std::string mult_input, mult_n = "10000";
  bool mult_complete = false;
  CommonFlags mult_flags;
  mult_cmd->add_option("input", mult_input)->required();
  mult_cmd->add_option("--N", mult_n, "Pair bound")->capture_default_str();
  mult_cmd->add_flag("--complete", mult_complete,
                     "Drop the coprimality restriction");
  add_common(mult_cmd, mult_flags);

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "Character / vanishing dichotomy");
  std::string classify_input, classify_n = "10000", classify_p = "100000",
              classify_qmax, classify_e = "6";
  CommonFlags classify_flags;
  classify_cmd->add_option("input", classify_input)->required();
  classify_cmd->add_option("--N", classify_n)->capture_default_str();
  classify_cmd->add_option("--P", classify_p)->capture_default_str();
  classify_cmd->add_option("--Qmax", classify_qmax,
                           "Default 2*q^(2 s0) capped at 10^4");
  classify_cmd->add_option("--E", classify_e)->capture_default_str();
  add_common(classify_cmd, classify_flags);

  // probe
  auto* probe_cmd = app.add_subcommand(
      "probe", "Eventually-periodic description of f(q^(A+Cn) m0 + r)");
  std::string probe_input, probe_m0 = "1", probe_r = "0";
  unsigned probe_a = 1, probe_c = 1;
  CommonFlags probe_flags;
  probe_cmd->add_option("input", probe_input)->required();
  probe_cmd->add_option("--A", probe_a)->required();
  probe_cmd->add_option("--C", probe_c)->required();
  probe_cmd->add_option("--m0", probe_m0)->capture_default_str();
  probe_cmd->add_option("--r", probe_r)->capture_default_str();
  add_common(probe_cmd, probe_flags);

  // proof subcommands
  auto* proof_cmd = app.add_subcommand("proof", "Constructive proof steps");
  proof_cmd->require_subcommand(1);

  auto* shifts_cmd = proof_cmd->add_subcommand(
      "find-shifts", "Equal shifted subsequences by pigeonhole search");
  std::string shifts_input, shifts_r = "1";
  unsigned shifts_a = 1;
  CommonFlags shifts_flags;
  shifts_cmd->add_option("input", shifts_input)->required();
  shifts_cmd->add_option("--r", shifts_r)->capture_default_str();
  shifts_cmd->add_option("--A", shifts_a)->capture_default_str();
  add_common(shifts_cmd, shifts_flags);

  auto* geom_cmd = proof_cmd->add_subcommand(
      "find-geometric", "All-ones geometric progression certificate");
  std::string geom_input, geom_r = "1";
  CommonFlags geom_flags;
  geom_cmd->add_option("input", geom_input)->required();
  geom_cmd->add_option("--r", geom_r)->capture_default_str();
  add_common(geom_cmd, geom_flags);

  auto* lte_cmd = proof_cmd->add_subcommand(
      "lte-witness", "n_k with p^k exactly dividing q^(A+C n_k) m0 + r");
  std::string lte_p, lte_m0 = "1", lte_r = "1";
  unsigned lte_q = 2, lte_a = 1, lte_c = 1, lte_k = 1;
  CommonFlags lte_flags;
  lte_cmd->add_option("--p", lte_p)->required();
  lte_cmd->add_option("--q", lte_q)->required();
  lte_cmd->add_option("--A", lte_a)->capture_default_str();
  lte_cmd->add_option("--C", lte_c)->capture_default_str();
  lte_cmd->add_option("--m0", lte_m0)->capture_default_str();
  lte_cmd->add_option("--r", lte_r)->capture_default_str();
  lte_cmd->add_option("--k", lte_k)->required();
  add_common(lte_cmd, lte_flags, false);

  auto* rA_cmd = proof_cmd->add_subcommand(
      "build-rA", "Residue with prescribed exact prime divisibilities");
  std::string rA_primes;
  unsigned rA_q = 2, rA_a = 15;
  CommonFlags rA_flags;
  rA_cmd->add_option("--primes", rA_primes, "Comma-separated primes")
      ->required();
  rA_cmd->add_option("--q", rA_q)->capture_default_str();
  rA_cmd->add_option("--A", rA_a)->capture_default_str();
  add_common(rA_cmd, rA_flags, false);

  auto* patch_cmd = proof_cmd->add_subcommand(
      "unit-patch", "Subset-product coverage of 1 + q^alpha units");
  std::string patch_y;
  unsigned patch_q = 2, patch_alpha = 1, patch_alpha1 = 2;
  CommonFlags patch_flags;
  patch_cmd->add_option("--Y", patch_y, "Pairs p:delta, comma-separated");
  patch_cmd->add_option("--q", patch_q)->capture_default_str();
  patch_cmd->add_option("--alpha", patch_alpha)->capture_default_str();
  patch_cmd->add_option("--alpha1", patch_alpha1)->capture_default_str();
  add_common(patch_cmd, patch_flags, false);

  auto* stats_cmd = proof_cmd->add_subcommand(
      "alpha-stats", "Histogram of alpha_p over prime profiles");
  std::string stats_input, stats_p = "1000";
  unsigned stats_e = 6;
  CommonFlags stats_flags;
  stats_cmd->add_option("input", stats_input)->required();
  stats_cmd->add_option("--P", stats_p)->capture_default_str();
  stats_cmd->add_option("--E", stats_e)->capture_default_str();
  add_common(stats_cmd, stats_flags);

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval_cmd) {
      auto machine = load_input(eval_input, eval_flags.base_override());
      Value v = dfao::eval(machine, parse_natural(eval_n));
      if (eval_flags.format == "json") {
        Json doc = doc_head("eval");
        doc["n"] = eval_n;
        doc["value"] = v.str();
        emit(doc, "json", out);
      } else {
        out << v.str() << "\n";
      }
      return 0;
    }
    if (*kernel_cmd) {
      auto machine = load_input(kernel_input, kernel_flags.base_override());
      Json doc = doc_head("kernel");
      doc.update(serialize::kernel_to_json(dfao::kernel(machine)));
      emit(doc, kernel_flags.format, out);
      return 0;
    }
    if (*minimize_cmd) {
      auto machine =
          load_input(minimize_input, minimize_flags.base_override());
      out << serialize::dfao_to_string(dfao::minimize(machine));
      return 0;
    }
    if (*equal_cmd) {
      auto base = equal_flags.base_override();
      auto first = load_input(equal_a, base);
      auto second = load_input(equal_b, base);
      auto result = dfao::equal(first, second);
      if (equal_flags.format == "json") {
        Json doc = doc_head("equal");
        doc["equal"] = result.equal;
        doc["counterexample"] = result.counterexample
                                    ? Json(result.counterexample->get_str())
                                    : Json(nullptr);
        emit(doc, "json", out);
      } else if (result.equal) {
        out << "equal\n";
      } else {
        out << "counterexample: " << result.counterexample->get_str() << "\n";
      }
      return result.equal ? 0 : 1;
    }
    if (*mult_cmd) {
      auto machine = load_input(mult_input, mult_flags.base_override());
      auto report = multiplicative::check_multiplicative(
          machine, parse_natural(mult_n), mult_complete);
      Json doc = doc_head("check-mult");
      doc.update(serialize::mult_report_to_json(report));
      emit(doc, mult_flags.format, out);
      return report.status == multiplicative::MultStatus::counterexample ? 1
                                                                         : 0;
    }
    if (*classify_cmd) {
      auto machine =
          load_input(classify_input, classify_flags.base_override());
      classifier::ClassifyParams params;
      params.mult_bound = parse_natural(classify_n);
      params.prime_bound = parse_natural(classify_p);
      params.profile_exponent = parse_small(classify_e, "--E");
      if (!classify_qmax.empty()) params.qmax = parse_natural(classify_qmax);
      auto result = classifier::classify(machine, params);
      emit(serialize::classification_to_json(result), classify_flags.format,
           out);
      bool positive =
          std::holds_alternative<classifier::Character>(result.outcome) ||
          std::holds_alternative<classifier::VanishingOnLargePrimes>(
              result.outcome);
      return positive ? 0 : 1;
    }
    if (*probe_cmd) {
      auto machine = load_input(probe_input, probe_flags.base_override());
      auto ep = dfao::geometric_probe(machine, probe_a, probe_c,
                                      parse_natural(probe_m0),
                                      parse_natural(probe_r));
      Json doc = doc_head("probe");
      doc["A"] = probe_a;
      doc["C"] = probe_c;
      doc["m0"] = probe_m0;
      doc["r"] = probe_r;
      doc.update(serialize::eventually_periodic_to_json(ep));
      emit(doc, probe_flags.format, out);
      return 0;
    }
    if (*shifts_cmd) {
      auto machine = load_input(shifts_input, shifts_flags.base_override());
      auto witness = proofkit::find_equal_shifts(
          machine, parse_natural(shifts_r), shifts_a);
      Json doc = doc_head("find-shifts");
      doc["found"] = witness.has_value();
      if (witness) doc.update(serialize::shift_witness_to_json(*witness));
      emit(doc, shifts_flags.format, out);
      return witness ? 0 : 1;
    }
    if (*geom_cmd) {
      auto machine = load_input(geom_input, geom_flags.base_override());
      auto witness =
          proofkit::find_geometric_one(machine, parse_natural(geom_r));
      Json doc = doc_head("find-geometric");
      doc["found"] = witness.has_value();
      if (witness) doc.update(serialize::geometric_witness_to_json(*witness));
      emit(doc, geom_flags.format, out);
      return witness ? 0 : 1;
    }
    if (*lte_cmd) {
      Natural n_k = proofkit::lte_divisibility_witness(
          parse_natural(lte_p), lte_q, lte_a, lte_c, parse_natural(lte_m0),
          parse_natural(lte_r), lte_k);
      Json doc = doc_head("lte-witness");
      doc["p"] = lte_p;
      doc["q"] = lte_q;
      doc["A"] = lte_a;
      doc["C"] = lte_c;
      doc["m0"] = lte_m0;
      doc["r"] = lte_r;
      doc["k"] = lte_k;
      doc["n_k"] = n_k.get_str();
      emit(doc, lte_flags.format, out);
      return 0;
    }
    if (*rA_cmd) {
      std::vector<Natural> primes;
      std::string item;
      std::istringstream in(rA_primes);
      while (std::getline(in, item, ',')) primes.push_back(parse_natural(item));
      Natural r_a = proofkit::build_r_A(primes, rA_q, rA_a);
      Json doc = doc_head("build-rA");
      doc["primes"] = rA_primes;
      doc["q"] = rA_q;
      doc["A"] = rA_a;
      doc["r_A"] = r_a.get_str();
      emit(doc, rA_flags.format, out);
      return 0;
    }
    if (*patch_cmd) {
      std::vector<std::pair<Natural, unsigned>> y;
      if (!patch_y.empty()) {
        std::string item;
        std::istringstream in(patch_y);
        while (std::getline(in, item, ',')) {
          auto colon = item.find(':');
          if (colon == std::string::npos)
            throw std::invalid_argument("--Y entries look like p:delta");
          y.emplace_back(parse_natural(item.substr(0, colon)),
                         parse_small(item.substr(colon + 1), "delta"));
        }
      }
      auto report =
          proofkit::unit_patch_products(y, patch_q, patch_alpha, patch_alpha1);
      Json doc = doc_head("unit-patch");
      doc.update(serialize::coverage_to_json(report));
      emit(doc, patch_flags.format, out);
      return report.full_coverage ? 0 : 1;
    }
    if (*stats_cmd) {
      auto machine = load_input(stats_input, stats_flags.base_override());
      auto profiles = multiplicative::prime_profiles(
          machine, parse_natural(stats_p), stats_e);
      auto histogram = proofkit::alpha_statistics(profiles);
      Json doc = doc_head("alpha-stats");
      doc["P"] = stats_p;
      doc["E"] = stats_e;
      Json hist;
      for (const auto& [alpha, count] : histogram)
        hist[std::to_string(alpha)] = count;
      doc["histogram"] = hist;
      doc["profiles"] = serialize::profiles_to_json(profiles);
      emit(doc, stats_flags.format, out);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command selected\n";
  return 2;
}

}  // namespace autoseq::cli
