// Copyright 2026 The fuchs Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuchs/fuchs.h"

namespace {

using nlohmann::json;

enum Exit : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitInput = 2,
  kExitSizeLimit = 3,
  kExitInternal = 4,
};

constexpr const char* kNotation = R"(Notation:
  Rings   Z4, F9, GF(9), F2[x]/(x^3), Z4[x]/(x^2-2,2x), F9 x F2 ("*" also works for x)
  Groups  C8 (cyclic), C2^inf (quasi-cyclic), C2xC4 (finite abelian), Z, Z^2, Z[1/2], Z[1/2,1/3]
  Polys   1 + x + x^3 (mod 2)

Exit codes:
  0  success / realizable / all suites passed
  1  not realizable, no witness, or a suite failed
  2  input error (parse, semantic, unknown suite, bad flag)
  3  ring exceeds the size guardrail (FUCHS_MAX_RING_ORDER overrides it)
  4  internal error)";

struct Options {
  bool json = false;
  unsigned workers = 1;
  std::optional<std::uint64_t> characteristic;
  std::uint64_t order_bound = 16;
  std::uint64_t seed = 20260101;
  std::uint64_t trials = 10000;
};

int exit_for(fuchs_status s) {
  switch (s) {
    case FUCHS_OK: return kExitOk;
    case FUCHS_ERR_SIZE_LIMIT: return kExitSizeLimit;
    case FUCHS_ERR_NO_WITNESS: return kExitNegative;
    case FUCHS_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

int report_error(fuchs_status s) {
  std::cerr << "fuchs: " << fuchs_status_name(s) << ": " << fuchs_last_error() << "\n";
  return exit_for(s);
}

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  fuchs_string_free(s);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const json& arr, const char* sep = ", ") {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- commands ----

int cmd_realizable(const Options& o, const std::string& text) {
  fuchs_group* g = nullptr;
  if (auto s = fuchs_group_parse(text.c_str(), &g)) return report_error(s);
  char* out = nullptr;
  int realizable = 0;
  auto s = fuchs_realizable_json(g, o.characteristic.has_value(), o.characteristic.value_or(0), &out, &realizable);
  fuchs_group_free(g);
  if (s) return report_error(s);
  const auto j = json::parse(take(out));
  if (o.json) {
    print_json(j);
  } else {
    std::cout << "group: " << j["group"].get<std::string>() << "\n";
    if (!j["char"].is_null()) std::cout << "char: " << j["char"] << "\n";
    std::cout << "realizable: " << yes_no(realizable) << "\n";
    if (!j["witness"].is_null()) {
      std::cout << "witness: " << j["witness"].get<std::string>()
                << (j["witness_verified"].get<bool>() ? " (verified)" : "") << "\n";
    }
    if (!j["characteristics"].empty() || !j["families"].empty()) {
      json all = j["characteristics"];
      for (const auto& f : j["families"]) all.push_back(f);
      std::cout << "characteristics: " << join(all) << "\n";
    }
    std::cout << "reason: " << j["reason"].get<std::string>() << "\n";
  }
  return realizable ? kExitOk : kExitNegative;
}

int cmd_witness(const Options& o, const std::string& text) {
  fuchs_group* g = nullptr;
  if (auto s = fuchs_group_parse(text.c_str(), &g)) return report_error(s);
  std::uint64_t c = 0;
  if (o.characteristic) {
    c = *o.characteristic;
  } else {
    char* out = nullptr;
    int realizable = 0;
    if (auto s = fuchs_realizable_json(g, 0, 0, &out, &realizable)) {
      fuchs_group_free(g);
      return report_error(s);
    }
    const auto v = json::parse(take(out));
    if (!realizable || v["characteristics"].empty()) {
      fuchs_group_free(g);
      std::cerr << "fuchs: no-witness: " << v["group"].get<std::string>() << " is not realizable ("
                << v["reason"].get<std::string>() << ")\n";
      return kExitNegative;
    }
    c = v["characteristics"][0].get<std::uint64_t>();
  }
  char* out = nullptr;
  auto s = fuchs_witness_json(g, c, &out);
  fuchs_group_free(g);
  if (s) return report_error(s);
  const auto j = json::parse(take(out));
  if (o.json) {
    print_json(j);
  } else {
    std::cout << "group: " << j["group"].get<std::string>() << "\n"
              << "char: " << j["char"] << "\n"
              << "witness: " << j["witness"].get<std::string>() << "\n"
              << "kind: " << j["kind"].get<std::string>() << "\n"
              << "verified: " << yes_no(j["verified"].get<bool>()) << "\n";
    if (!j["presentation"].is_null()) {
      std::cout << "order: " << j["order"] << "\n"
                << "presentation: " << j["presentation"].get<std::string>() << "\n"
                << "units: " << j["units"].dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_units(const Options& o, const std::string& text) {
  fuchs_ring* r = nullptr;
  // Serialized presentations ("char=...") come from witness and enumerate output.
  const bool serialized = text.rfind("char=", 0) == 0;
  if (auto s = serialized ? fuchs_ring_from_presentation(text.c_str(), &r) : fuchs_ring_parse(text.c_str(), &r)) {
    return report_error(s);
  }
  char* out = nullptr;
  auto s = fuchs_ring_units_json(r, o.workers, &out);
  fuchs_ring_free(r);
  if (s) return report_error(s);
  const auto j = json::parse(take(out));
  if (o.json) {
    print_json(j);
  } else {
    std::cout << "ring: " << j["ring"].get<std::string>() << "\n"
              << "order: " << j["order"] << "\n"
              << "characteristic: " << j["characteristic"] << "\n"
              << "units: " << j["unit_count"] << "\n"
              << "structure: " << j["structure"].get<std::string>() << "\n"
              << "invariant factors: " << j["invariant_factors"].dump() << "\n"
              << "cyclic: " << yes_no(j["cyclic"].get<bool>()) << "\n"
              << "indecomposable: " << yes_no(j["indecomposable"].get<bool>()) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, const std::string& suite) {
  fuchs_verify_options vo;
  fuchs_verify_options_init(&vo);
  vo.order_bound = o.order_bound;
  vo.seed = o.seed;
  vo.trials = o.trials;
  vo.workers = o.workers;
  char* out = nullptr;
  int passed = 0;
  if (auto s = fuchs_verify_json(suite.c_str(), &vo, &out, &passed)) return report_error(s);
  const auto j = json::parse(take(out));
  if (o.json) {
    print_json(j);
  } else {
    for (const auto& rep : j["reports"]) {
      std::cout << (rep["passed"].get<bool>() ? "PASS " : "FAIL ") << rep["check"].get<std::string>() << " ["
                << rep["citation"].get<std::string>() << "]";
      if (!rep["label"].is_null()) std::cout << " " << rep["label"].get<std::string>();
      std::cout << "\n";
      for (const auto& c : rep["cases"]) {
        std::cout << "  " << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>();
        const auto detail = c["detail"].get<std::string>();
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
      }
    }
    std::cout << (passed ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return passed ? kExitOk : kExitNegative;
}

std::vector<std::uint64_t> parse_type(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size() || v < 2) throw std::invalid_argument("bad additive order '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty additive type");
  return out;
}

int cmd_enumerate(const Options& o, const std::string& type_text, bool no_dedupe) {
  std::vector<std::vector<std::uint64_t>> types;
  if (!type_text.empty()) {
    try {
      types.push_back(parse_type(type_text));
    } catch (const std::exception& e) {
      std::cerr << "fuchs: parse-error: " << e.what() << "\n";
      return kExitInput;
    }
  } else {
    char* out = nullptr;
    if (auto s = fuchs_additive_types_json(o.order_bound, o.characteristic.has_value(), o.characteristic.value_or(0),
                                           &out)) {
      return report_error(s);
    }
    types = json::parse(take(out)).get<std::vector<std::vector<std::uint64_t>>>();
  }
  std::size_t total = 0;
  for (const auto& t : types) {
    char* out = nullptr;
    std::size_t n = 0;
    if (auto s = fuchs_enumerate_jsonl(t.data(), t.size(), no_dedupe ? 0 : 1, o.workers, &out, &n)) {
      return report_error(s);
    }
    total += n;
    std::istringstream lines(take(out));
    std::string line;
    while (std::getline(lines, line)) {
      if (o.json) {
        std::cout << line << "\n";
        continue;
      }
      const auto j = json::parse(line);
      std::cout << "order " << j["order"] << "  char " << j["characteristic"] << "  units "
                << j["unit_structure"].get<std::string>() << "  " << j["presentation"].get<std::string>() << "\n";
    }
  }
  if (!o.json) std::cout << total << " rings\n";
  return kExitOk;
}

int cmd_factor(const Options& o, const std::string& poly, std::uint64_t modulus) {
  char* out = nullptr;
  if (auto s = fuchs_factor_json(poly.c_str(), modulus, &out)) return report_error(s);
  const auto j = json::parse(take(out));
  if (o.json) {
    print_json(j);
    return kExitOk;
  }
  std::cout << "polynomial: " << j["polynomial"].get<std::string>() << "\n"
            << "squarefree: " << j["squarefree"].get<std::string>() << "\n";
  for (const auto& f : j["factors"]) {
    std::cout << "  " << f["factor"].get<std::string>() << "  degree " << f["degree"];
    if (f["multiplicity"].get<unsigned>() > 1) std::cout << "  multiplicity " << f["multiplicity"];
    std::cout << "\n";
  }
  return kExitOk;
}

int print_bool(const Options& o, const char* key, std::uint64_t n, bool value) {
  if (o.json) {
    print_json({{"n", n}, {key, value}});
  } else {
    std::cout << n << ": " << yes_no(value) << "\n";
  }
  return kExitOk;
}

std::optional<std::uint64_t> env_limit(const char* text) {
  errno = 0;
  char* end = nullptr;
  const auto v = std::strtoull(text, &end, 10);
  if (errno || end == text || *end != '\0' || v == 0) return std::nullopt;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("FUCHS_MAX_RING_ORDER")) {
    const auto limit = env_limit(env);
    if (!limit) {
      std::cerr << "fuchs: FUCHS_MAX_RING_ORDER must be a positive integer, got '" << env << "'\n";
      return kExitInput;
    }
    fuchs_set_max_ring_order(*limit);
  }

  CLI::App app{"Unit groups of rings: realizability, witnesses and verification"};
  app.footer(kNotation);
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", fuchs_version());

  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string arg;
  std::uint64_t modulus = 0;
  std::string type_text;
  bool no_dedupe = false;
  std::uint32_t m_bound = 30;
  std::uint64_t char_value = 0;

  auto add_char = [&](CLI::App* sub) {
    return sub->add_option("--char", char_value, "Characteristic")->check(CLI::NonNegativeNumber);
  };

  auto* realizable = app.add_subcommand("realizable", "Decide whether a group is a unit group");
  realizable->add_option("group", arg, "Group expression")->required();
  auto* realizable_char = add_char(realizable);

  auto* witness = app.add_subcommand("witness", "Build and check a witness ring");
  witness->add_option("group", arg, "Group expression")->required();
  auto* witness_char = add_char(witness);

  auto* units = app.add_subcommand("units", "Unit group of a finite ring");
  units->add_option("ring", arg, "Ring expression or serialized presentation")->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", arg, "Suite name or 'all'")->required();
  verify->add_option("--order-bound", o.order_bound, "Census order bound")->check(CLI::Range(1, 4096));
  verify->add_option("--seed", o.seed, "Property-test seed");
  verify->add_option("--trials", o.trials, "Property-test trials")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "Census of commutative table rings (JSON lines with --json)");
  enumerate->add_option("--order-bound", o.order_bound, "Largest ring order")->check(CLI::Range(1, 4096));
  enumerate->add_option("--type", type_text, "Single additive type, e.g. 4,2");
  enumerate->add_flag("--no-dedupe", no_dedupe, "Keep rings with equal signatures");
  auto* enumerate_char = add_char(enumerate);

  auto* factor = app.add_subcommand("factor", "Factor a polynomial over a prime field");
  factor->add_option("poly", arg, "Polynomial, e.g. '1 + x^8 (mod 2)'")->required();
  factor->add_option("--mod", modulus, "Modulus when the text has no (mod q)");

  auto* nt = app.add_subcommand("numtheory", "Number-theoretic helpers");
  nt->require_subcommand(1);
  std::uint64_t n = 0;
  auto* nt_prime = nt->add_subcommand("is-prime", "Primality");
  auto* nt_mersenne = nt->add_subcommand("mersenne", "Is 2^p - 1 prime, p given as p");
  auto* nt_fermat = nt->add_subcommand("fermat", "Is q a Fermat prime");
  auto* nt_phi = nt->add_subcommand("phi", "Euler phi");
  auto* nt_cyclic = nt->add_subcommand("cyclic-units", "Is (Z/c)^* cyclic");
  auto* nt_power = nt->add_subcommand("power-equation", "Solutions of q^m - 1 = p^r");
  for (auto* sub : {nt_prime, nt_mersenne, nt_fermat, nt_phi, nt_cyclic, nt_power}) {
    sub->add_option("n", n, "Integer")->required();
  }
  nt_power->add_option("--m-bound", m_bound, "Largest exponent m")->check(CLI::Range(1u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  for (auto* opt : {realizable_char, witness_char, enumerate_char}) {
    if (opt->count() > 0) o.characteristic = char_value;
  }

  try {
    if (*realizable) return cmd_realizable(o, arg);
    if (*witness) return cmd_witness(o, arg);
    if (*units) return cmd_units(o, arg);
    if (*verify) return cmd_verify(o, arg);
    if (*enumerate) return cmd_enumerate(o, type_text, no_dedupe);
    if (*factor) return cmd_factor(o, arg, modulus);
    if (*nt_prime) return print_bool(o, "prime", n, fuchs_is_prime(n));
    if (*nt_mersenne) return print_bool(o, "mersenne_prime", n, fuchs_is_mersenne_prime(n));
    if (*nt_fermat) return print_bool(o, "fermat_prime", n, fuchs_is_fermat_prime(n));
    if (*nt_cyclic) return print_bool(o, "cyclic_units", n, fuchs_has_cyclic_units_mod(n));
    if (*nt_phi) {
      std::uint64_t phi = 0;
      if (auto s = fuchs_euler_phi(n, &phi)) return report_error(s);
      if (o.json) {
        print_json({{"n", n}, {"phi", phi}});
      } else {
        std::cout << "phi(" << n << ") = " << phi << "\n";
      }
      return kExitOk;
    }
    if (*nt_power) {
      char* out = nullptr;
      if (auto s = fuchs_solve_power_equation_json(n, m_bound, &out)) return report_error(s);
      const auto j = json::parse(take(out));
      if (o.json) {
        print_json(j);
      } else {
        for (const auto& s : j) {
          std::cout << n << "^" << s["m"] << " - 1 = " << s["p"] << "^" << s["r"] << "\n";
        }
        if (j.empty()) std::cout << "no solutions with m <= " << m_bound << "\n";
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "fuchs: internal-error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
