#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hecke/hecke.hpp"

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInvalidModule = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint32_t default_prime() {
  if (const char* env = std::getenv("HECKE_P")) {
    try {
      return static_cast<std::uint32_t>(hecke::io::detail::parse_int(env, "HECKE_P"));
    } catch (const std::exception&) {
      throw UsageError(std::string("HECKE_P is not an integer: ") + env);
    }
  }
  return 5;
}

void check_prime(std::uint32_t p) {
  try {
    hecke::require_supported_prime(p);
  } catch (const hecke::modulus_error& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
}

hecke::io::json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return hecke::io::json::parse(in);
  } catch (const hecke::io::json::parse_error& e) {
    throw hecke::io::parse_error(path + ": " + e.what());
  }
}

void print_violations(const std::vector<std::string>& v) {
  std::cerr << "relation check failed:\n";
  for (const auto& s : v) std::cerr << "  " << s << "\n";
}

// ---- induce

struct InduceArgs {
  std::uint32_t p = 0;
  std::int64_t u = 0;
  std::int64_t e = 0;
  std::string out;
};

int run_induce(const InduceArgs& a) {
  check_prime(a.p);
  if (a.u < 1 || a.u >= static_cast<std::int64_t>(a.p)) throw UsageError("--u must satisfy 1 <= u < p");
  if (a.e < 0 || a.e >= static_cast<std::int64_t>(a.p) - 1) throw UsageError("--e must satisfy 0 <= e < p-1");
  const hecke::SmoothCharacter chi(a.p, a.u, a.e);
  const hecke::HModule m = hecke::induce(hecke::HTModule::from_character(chi));
  const auto violations = hecke::verify_relations(m);
  std::cout << "dim " << m.dim() << "\n";
  std::cout << "relations " << (violations.empty() ? "OK" : "FAILED") << "\n";
  if (!a.out.empty()) write_file(a.out, hecke::io::dump(hecke::io::to_json(m)));
  if (!violations.empty()) {
    print_violations(violations);
    return kInvalidModule;
  }
  return kOk;
}

// ---- radjoint

struct RadjointArgs {
  std::uint32_t p = 0;
  std::string in;
  std::string builtin;
  std::string params;
  std::string out;
};

hecke::HModule builtin_module(const RadjointArgs& a) {
  std::string name = a.builtin;
  std::string params = a.params;
  if (const auto colon = name.find(':'); colon != std::string::npos) {
    params = name.substr(colon + 1);
    name = name.substr(0, colon);
  }
  if (name == "chi_sign") return hecke::raw_character_module(hecke::HCharacterKind::sign(), a.p);
  if (name == "chi_triv") return hecke::raw_character_module(hecke::HCharacterKind::trivial(), a.p);
  if (name == "supersingular") {
    const auto parts = hecke::io::detail::split(params, ',');
    if (parts.size() != 3) throw UsageError("supersingular needs parameters a0,a1,e");
    const auto a0 = hecke::io::detail::parse_int(parts[0], params);
    const auto a1 = hecke::io::detail::parse_int(parts[1], params);
    const auto e = hecke::io::detail::parse_int(parts[2], params);
    if (e < 0) throw UsageError("supersingular exponent must be non-negative");
    const auto kind = hecke::HCharacterKind::supersingular(static_cast<int>(a0), static_cast<int>(a1), static_cast<std::uint32_t>(e));
    // Relations are checked below, not here, so that bad parameters report violations.
    return hecke::raw_character_module(kind, a.p);
  }
  if (name == "ind") {
    const auto chi = hecke::io::parse_character(params, a.p);
    return hecke::induce(hecke::HTModule::from_character(chi));
  }
  throw UsageError("unknown builtin '" + name + "' (chi_sign, chi_triv, supersingular, ind)");
}

int run_radjoint(const RadjointArgs& a) {
  hecke::HModule m = hecke::HModule::zero(5);
  if (!a.in.empty()) {
    m = hecke::io::hmodule_from_json(read_json_file(a.in));
  } else {
    check_prime(a.p);
    m = builtin_module(a);
  }
  const auto violations = hecke::verify_relations(m);
  if (!violations.empty()) {
    print_violations(violations);
    return kInvalidModule;
  }
  const hecke::HTModule r = hecke::right_adjoint(m);
  std::cout << "dim " << r.dim() << "\n";
  if (r.dim() == 1) {
    const std::uint32_t p = r.modulus();
    const std::uint32_t g = hecke::primitive_root(p);
    std::uint32_t e = 0;
    while (hecke::pow_mod(g, e, p) != r.g()(0, 0)) ++e;
    std::cout << "character (u=" << r.x()(0, 0) << ", e=" << e << ")\n";
  }
  if (!a.out.empty()) write_file(a.out, hecke::io::dump(hecke::io::to_json(r)));
  return kOk;
}

// ---- ext

struct ExtArgs {
  std::uint32_t p = 0;
  std::string cat;
  int n = 0;
  bool all_n = false;
  std::string source;
  std::string target;
};

hecke::HTModule ht_operand(const std::string& spec, std::uint32_t p) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return hecke::io::htmodule_from_json(read_json_file(spec));
  return hecke::io::parse_multiset(spec, p).realize(p);
}

int run_ext(const ExtArgs& a) {
  check_prime(a.p);
  if (a.n < 0) throw UsageError("--n must be non-negative");
  hecke::ExtTable table;
  try {
    if (a.cat == "ht") {
      const auto s = ht_operand(a.source, a.p);
      const auto t = ht_operand(a.target, a.p);
      if (a.all_n) {
        table = hecke::ext_ht_table(s, t);
      } else {
        table[a.n] = hecke::ext_ht(a.n, s, t).dim;
      }
    } else {
      const auto s = hecke::io::parse_multiset(a.source, a.p);
      const auto t = hecke::io::parse_multiset(a.target, a.p);
      if (a.all_n) {
        table = hecke::ext_t_table(s, t, a.p);
      } else {
        table[a.n] = hecke::ext_t(a.n, s, t, a.p);
      }
    }
  } catch (const hecke::io::parse_error& e) {
    throw UsageError(e.what());
  }
  std::cout << hecke::io::to_json(table).dump() << "\n";
  return kOk;
}

// ---- verify

struct VerifyArgs {
  std::uint32_t p = 0;
  std::string cls;
  std::string chi;
  std::string json_out;
  bool inject_fault = false;
};

void print_report(const hecke::TheoremResult& r) {
  std::cout << r.rep.label() << " p=" << r.p << "  " << (r.verdict() ? "PASS" : "FAIL") << "\n";
  for (const auto& [n, c] : r.table) std::cout << "  R^" << n << " = " << c.to_string() << "\n";
  std::size_t width = 0;
  for (const auto& row : r.report.rows) width = std::max(width, row.id.size());
  for (const auto& row : r.report.rows) {
    std::cout << "  " << std::left << std::setw(static_cast<int>(width)) << row.id << "  " << std::right << std::setw(4)
              << row.lhs << " " << std::setw(4) << row.rhs << "  " << (row.pass ? "ok" : "FAIL") << "\n";
  }
}

int run_verify(const VerifyArgs& a) {
  check_prime(a.p);
  std::vector<hecke::TheoremResult> results;
  if (a.cls == "all") {
    results = hecke::verify_all(a.p, a.inject_fault);
  } else {
    hecke::RepSpec rep;
    if (a.cls == "principal") {
      if (a.chi.empty()) throw UsageError("--class principal needs --chi u,e");
      try {
        rep = hecke::RepSpec::principal(hecke::io::parse_character(a.chi, a.p));
      } catch (const hecke::io::parse_error& e) {
        throw UsageError(e.what());
      }
    } else if (a.cls == "steinberg") {
      rep = hecke::RepSpec::steinberg();
    } else if (a.cls == "trivial") {
      rep = hecke::RepSpec::trivial();
    } else {
      rep = hecke::RepSpec::supersingular();
    }
    results.push_back(hecke::verify_theorem(rep, a.p, a.inject_fault));
  }

  bool ok = true;
  for (const auto& r : results) {
    print_report(r);
    ok = ok && r.verdict();
  }
  if (!a.json_out.empty()) {
    const auto j = a.cls == "all" ? hecke::io::to_json(results) : hecke::io::to_json(results.front());
    write_file(a.json_out, hecke::io::dump(j));
  }
  std::cout << (ok ? "verdict PASS" : "verdict FAIL") << " (" << results.size() << " report"
            << (results.size() == 1 ? "" : "s") << ")\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with pro-p Iwahori-Hecke modules of SL2(Qp) over F_p"};
  app.require_subcommand(1);

  std::uint32_t p_default = 5;
  try {
    p_default = default_prime();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  InduceArgs ia;
  ia.p = p_default;
  auto* induce = app.add_subcommand("induce", "Induce a character of T to an H-module");
  induce->add_option("--p", ia.p, "prime (default $HECKE_P or 5)");
  induce->add_option("--u", ia.u, "value on diag(p, 1/p), 1 <= u < p")->required();
  induce->add_option("--e", ia.e, "exponent of the torus character, 0 <= e < p-1")->required();
  induce->add_option("--out", ia.out, "write the module record here");

  RadjointArgs ra;
  ra.p = p_default;
  auto* radj = app.add_subcommand("radjoint", "Apply the right adjoint of induction");
  auto* in_opt = radj->add_option("--in", ra.in, "H-module JSON record");
  auto* bi_opt = radj->add_option("--builtin", ra.builtin, "chi_sign | chi_triv | supersingular | ind");
  radj->add_option("params", ra.params, "builtin parameters, e.g. 0,-1,0 or 1,1");
  radj->add_option("--p", ra.p, "prime for builtins");
  radj->add_option("--out", ra.out, "write the H_T-module record here");
  in_opt->excludes(bi_opt);
  bi_opt->excludes(in_opt);

  ExtArgs ea;
  ea.p = p_default;
  auto* ext = app.add_subcommand("ext", "Dimensions of Ext groups");
  ext->add_option("--cat", ea.cat, "ht or t")->required()->check(CLI::IsMember({"ht", "t"}));
  ext->add_option("--n", ea.n, "degree");
  ext->add_flag("--all-n", ea.all_n, "all degrees (0..1 for ht, 0..2 for t)");
  ext->add_option("--source", ea.source, "u,e | u,e*m | chain:u,e,r | sums with + | file.json (ht)")->required();
  ext->add_option("--target", ea.target, "same syntax as --source")->required();
  ext->add_option("--p", ea.p, "prime");

  VerifyArgs va;
  va.p = p_default;
  auto* verify = app.add_subcommand("verify", "Verify the derived-functor tables");
  verify->add_option("--class", va.cls, "representation class")
      ->required()
      ->check(CLI::IsMember({"principal", "steinberg", "trivial", "supersingular", "all"}));
  verify->add_option("--p", va.p, "prime");
  verify->add_option("--chi", va.chi, "inducing character u,e (principal series)");
  verify->add_option("--json", va.json_out, "write the JSON report here");
  verify->add_flag("--inject-fault", va.inject_fault, "corrupt the claimed table (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*induce) return run_induce(ia);
    if (*radj) {
      if (ra.in.empty() && ra.builtin.empty()) throw UsageError("radjoint needs --in or --builtin");
      return run_radjoint(ra);
    }
    if (*ext) return run_ext(ea);
    if (*verify) return run_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const hecke::invalid_module& e) {
    print_violations(e.violations());
    return kInvalidModule;
  } catch (const hecke::io::parse_error& e) {
    std::cerr << "invalid module: " << e.what() << "\n";
    return kInvalidModule;
  } catch (const hecke::modulus_error& e) {
    std::cerr << "invalid module: " << e.what() << "\n";
    return kInvalidModule;
  } catch (const hecke::dimension_error& e) {
    std::cerr << "invalid module: " << e.what() << "\n";
    return kInvalidModule;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
