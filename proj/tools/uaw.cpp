#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "uaw/admissibility.hpp"
#include "uaw/json_io.hpp"

using namespace uaw;

namespace {

struct GlobalOpts {
  bool json = false;
  bool no_cache = false;
  int jobs = 1;
  unsigned seed = 12345;
  int max_power = 2;
  int max_size = 8;
  int n_cap = -1;  // -1: per-algebra default |X(B)| + 2
};

CacheConfig cache_config(const GlobalOpts& g) {
  CacheConfig c;
  if (g.no_cache) return c;
  if (const char* dir = std::getenv("UAW_CACHE_DIR")) {
    c.enabled = true;
    c.dir = dir;
    return c;
  }
  if (const char* home = std::getenv("HOME")) {
    c.enabled = true;
    c.dir = std::string(home) + "/.cache/uaw";
  }
  return c;
}

Sig variety_of(const std::string& name) {
  auto s = sig_by_name(name);
  if (!s) throw UsageError("unknown variety '" + name + "' (use bdl, dl, st, dma, dml, ka, kl)");
  return *s;
}

FiniteAlgebra resolve_algebra(const std::string& arg, Sig sig) {
  if (auto b = builtin_algebra(arg, sig)) return *b;
  std::string base = arg.substr(0, arg.find('^'));
  if (base == "2" || base == "S" || base == "D" || base == "K" || base == "trivial")
    throw DataError("builtin algebra '" + arg + "' does not fit variety " + sig_name(sig));
  FiniteAlgebra a = load_algebra(arg);
  if (a.sig != sig)
    throw DataError(arg + ": algebra has signature " + sig_name(a.sig) +
                    ", expected " + sig_name(sig));
  return a;
}

Clause resolve_clause(const std::string& text, const std::string& file) {
  if (!text.empty() && !file.empty())
    throw UsageError("give either --clause or --clause-file, not both");
  if (!text.empty()) return parse_clause(text);
  if (!file.empty()) return parse_clause(read_file(file));
  throw UsageError("a clause is required (--clause or --clause-file)");
}

int run_check(const GlobalOpts& g, Sig sig, const Clause& c, const FiniteAlgebra& a) {
  SatResult s = satisfies(a, c);
  if (g.json) {
    std::string out = "{\"result\": ";
    out += s.ok ? "true" : "false";
    if (!s.ok) {
      out += ", \"witness\": {";
      for (size_t i = 0; i < s.witness.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + s.witness[i].first + "\": \"" + a.label(s.witness[i].second) + "\"";
      }
      out += "}";
    }
    out += "}";
    std::cout << out << "\n";
  } else if (s.ok) {
    std::cout << "true\n";
  } else {
    std::cout << "false; witness " << format_assignment(s.witness, a) << "\n";
  }
  return 0;
}

int run_member(const GlobalOpts& g, Sig sig, const FiniteAlgebra& a) {
  const VarietyProfile& p = profile(sig);
  MembershipVerdict is = member_IS_free(p, a);
  MembershipVerdict isp = member_ISP_free(p, a);
  if (g.json) {
    std::cout << "{\"IS\": {\"result\": " << (is.result ? "true" : "false")
              << ", \"clause_route\": " << (is.clause_route ? "true" : "false")
              << ", \"dual_route\": " << (is.dual_route ? "true" : "false") << "}, "
              << "\"ISP\": {\"result\": " << (isp.result ? "true" : "false")
              << ", \"clause_route\": " << (isp.clause_route ? "true" : "false")
              << ", \"dual_route\": " << (isp.dual_route ? "true" : "false") << "}}\n";
  } else {
    std::cout << "IS(F):  " << (is.result ? "member" : "not a member") << " (" << is.evidence
              << ")\n";
    std::cout << "ISP(F): " << (isp.result ? "member" : "not a member") << " (" << isp.evidence
              << ")\n";
  }
  return (is.routes_agree && isp.routes_agree) ? 0 : 1;
}

int run_dual(const GlobalOpts& g, Sig sig, const FiniteAlgebra& a, const std::string& dot_path) {
  const VarietyProfile& p = profile(sig);
  const VarietyProfile& bp = p.has_duality ? p : profile(p.bar_target);
  FiniteAlgebra target = p.has_duality ? a : add_bounds(a);
  DualSpace ds = dual_space(bp, target);
  if (!dot_path.empty()) write_file(dot_path, emit_dot(ds.space, "dual"));
  if (g.json) {
    std::cout << space_to_json_text(ds.space);
  } else {
    std::cout << "dual space: " << ds.space.size << " points";
    if (!p.has_duality) std::cout << " (of the bounded companion)";
    std::cout << "\n";
    for (int i = 0; i < ds.space.size; ++i)
      std::cout << "  " << i << " = " << ds.space.label(i) << "\n";
  }
  return 0;
}

int run_free(const GlobalOpts& g, Sig sig, int n, bool size_only, const std::string& dot_path) {
  const VarietyProfile& p = profile(sig);
  Budgets budgets;
  if (size_only) {
    long long cap = budgets.max_free_elements;
    long long size = free_size_capped(p, n, cap);
    if (size > cap)
      throw BudgetError("free algebra has more than " + std::to_string(cap) + " elements",
                        static_cast<std::uint64_t>(size), static_cast<std::uint64_t>(cap), true);
    std::cout << size << "\n";
    return 0;
  }
  FreeAlgebra f = free_algebra(p, n, budgets, cache_config(g));
  if (!dot_path.empty()) write_file(dot_path, emit_dot(f.power, "power"));
  if (g.json) {
    std::cout << algebra_to_json_text(f.materialize(budgets));
  } else {
    std::cout << "|F_" << p.name << "(" << n << ")| = " << f.size() << "\n";
    std::cout << "generators at element indices:";
    for (int gidx : f.generators) std::cout << " " << gidx;
    std::cout << "\n";
  }
  return 0;
}

int run_admissible(const GlobalOpts& g, Sig sig, const Clause& c) {
  const VarietyProfile& p = profile(sig);
  AdmissibilityVerdict v = admissible_clause(p, c, g.max_power, g.max_size, {}, cache_config(g));
  if (g.json) {
    std::cout << "{\"verdict\": \"" << admissible_name(v.verdict) << "\", \"method\": \""
              << v.method << "\"}\n";
  } else {
    std::cout << admissible_name(v.verdict) << " (" << v.method << ")";
    if (!v.evidence.empty()) std::cout << "\n  " << v.evidence;
    std::cout << "\n";
  }
  return 0;
}

int run_verify(const GlobalOpts& g, Sig sig) {
  const VarietyProfile& p = profile(sig);
  int n_cap = g.n_cap >= 0 ? g.n_cap : 4;
  LemmaSuiteReport r = verify_lemma_suite(p, g.max_power, g.max_size, n_cap);
  if (g.json) {
    std::cout << report_to_json_text(r);
  } else {
    std::cout << r.members_checked << " members checked (max_power " << r.max_power
              << ", max_size " << r.max_size << ", n_cap " << r.n_cap << ")\n";
    for (const auto& v : r.verdicts) {
      std::cout << "  " << v.algebra_name << " (size " << v.algebra_size << "): IS "
                << (v.is_clause ? "yes" : "no") << "/" << (v.is_dual ? "yes" : "no") << "/"
                << (v.is_witness_found ? "yes" : (v.is_witness_bound_limited ? "cap" : "no"))
                << "  ISP " << (v.isp_clause ? "yes" : "no") << "/"
                << (v.isp_dual ? "yes" : "no") << "/"
                << (v.isp_witness_found ? "yes" : (v.isp_witness_bound_limited ? "cap" : "no"))
                << "\n";
    }
    if (!r.bound_limited.empty())
      std::cout << r.bound_limited.size() << " witness searches bound-limited\n";
    std::cout << r.disagreements.size() << " disagreements\n";
    for (const auto& d : r.disagreements) std::cout << "  " << d << "\n";
  }
  return r.clean() ? 0 : 1;
}

int run_classify(const GlobalOpts& g, Sig sig) {
  const VarietyProfile& p = profile(sig);
  CompletenessReport r = classify_completeness(p, g.max_power, g.max_size);
  if (g.json) {
    std::cout << report_to_json_text(r);
  } else {
    std::cout << "at max_power " << r.max_power << ", max_size " << r.max_size << " ("
              << r.members_checked << " members):\n";
    std::cout << "  structurally complete:              "
              << (r.structurally_complete ? "yes" : "no");
    if (!r.structurally_complete) std::cout << "  [" << r.structurally_failure << "]";
    std::cout << "\n  universally complete:               "
              << (r.universally_complete ? "yes" : "no");
    if (!r.universally_complete) std::cout << "  [" << r.universally_failure << "]";
    std::cout << "\n  non-negative universally complete:  "
              << (r.non_negative_universally_complete ? "yes" : "no");
    if (!r.non_negative_universally_complete) std::cout << "  [" << r.nn_universally_failure << "]";
    std::cout << "\n";
  }
  return 0;
}

int run_enumerate(const GlobalOpts& g, Sig sig) {
  const VarietyProfile& p = profile(sig);
  Enumeration en = enumerate_members(p, g.max_power, g.max_size);
  if (g.json) {
    std::cout << "[\n";
    for (size_t i = 0; i < en.members.size(); ++i) {
      std::string t = algebra_to_json_text(en.members[i]);
      if (!t.empty() && t.back() == '\n') t.pop_back();
      std::cout << t << (i + 1 < en.members.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
  } else {
    std::cout << en.members.size() << " members up to isomorphism (subalgebras of M^k, k <= "
              << en.max_power << ", size <= " << en.max_size << ")";
    if (!en.complete())
      std::cout << "; power bound for completeness at this size is " << en.complete_power_bound;
    std::cout << "\n";
    for (const auto& m : en.members)
      std::cout << "  " << m.name << ": size " << m.size << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  CLI::App app{"workbench for admissible clauses and quasi-identities over the distributive,"
               " Stone, De Morgan and Kleene varieties"};
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_flag("--no-cache", g.no_cache, "bypass the free-algebra disk cache");
  app.add_option("--jobs", g.jobs, "worker cap (the engine is sequential; accepted for scripts)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized runs (fixed default)");

  std::string variety, clause_text, clause_file, algebra_arg, dot_path;
  int free_n = 0;
  bool size_only = false;

  auto add_common = [&](CLI::App* cmd, bool needs_algebra) {
    cmd->add_option("--variety", variety, "one of bdl, dl, st, dma, dml, ka, kl")->required();
    if (needs_algebra)
      cmd->add_option("--algebra", algebra_arg,
                      "builtin name (2, S, D, K, trivial, D^2, ...) or a JSON file path")
          ->required();
  };

  CLI::App* check = app.add_subcommand("check", "does an algebra satisfy a clause");
  add_common(check, true);
  check->add_option("--clause", clause_text, "clause text");
  check->add_option("--clause-file", clause_file, "file with clause text");

  CLI::App* member = app.add_subcommand("member", "membership in IS(F) and ISP(F)");
  add_common(member, true);

  CLI::App* dual = app.add_subcommand("dual", "dual space of an algebra");
  add_common(dual, true);
  dual->add_option("--emit-dot", dot_path, "write a Graphviz rendering here");

  CLI::App* freec = app.add_subcommand("free", "free n-generated algebra via the dual side");
  freec->add_option("--variety", variety, "one of bdl, dl, st, dma, dml, ka, kl")->required();
  freec->add_option("-n,--generators", free_n, "number of generators")->required();
  freec->add_flag("--size-only", size_only, "print only the element count");
  freec->add_option("--emit-dot", dot_path, "write the generator-space power as Graphviz");

  CLI::App* adm = app.add_subcommand("admissible", "admissibility of a clause");
  adm->add_option("--variety", variety, "one of bdl, dl, st, dma, dml, ka, kl")->required();
  adm->add_option("--clause", clause_text, "clause text");
  adm->add_option("--clause-file", clause_file, "file with clause text");
  adm->add_option("--max-power", g.max_power, "member enumeration power bound");
  adm->add_option("--max-size", g.max_size, "member enumeration size bound");

  CLI::App* verify = app.add_subcommand("verify", "cross-check the membership criteria on all"
                                                  " enumerated members");
  verify->add_option("--variety", variety, "one of bdl, dl, st, dma, dml, ka, kl")->required();
  verify->add_option("--max-power", g.max_power, "member enumeration power bound");
  verify->add_option("--max-size", g.max_size, "member enumeration size bound");
  verify->add_option("--n-cap", g.n_cap, "witness search power cap (default 4)");

  CLI::App* classify = app.add_subcommand("classify", "structural/universal completeness at a"
                                                      " bound");
  classify->add_option("--variety", variety, "one of bdl, dl, st, dma, dml, ka, kl")->required();
  classify->add_option("--max-power", g.max_power, "member enumeration power bound");
  classify->add_option("--max-size", g.max_size, "member enumeration size bound");

  CLI::App* enumerate = app.add_subcommand("enumerate", "members up to isomorphism at a bound");
  enumerate->add_option("--variety", variety, "one of bdl, dl, st, dma, dml, ka, kl")->required();
  enumerate->add_option("--max-power", g.max_power, "member enumeration power bound");
  enumerate->add_option("--max-size", g.max_size, "member enumeration size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;  // sysexits-style usage class
  }

  try {
    Sig sig = variety_of(variety);
    if (check->parsed())
      return run_check(g, sig, resolve_clause(clause_text, clause_file),
                       resolve_algebra(algebra_arg, sig));
    if (member->parsed()) return run_member(g, sig, resolve_algebra(algebra_arg, sig));
    if (dual->parsed()) return run_dual(g, sig, resolve_algebra(algebra_arg, sig), dot_path);
    if (freec->parsed()) return run_free(g, sig, free_n, size_only, dot_path);
    if (adm->parsed()) return run_admissible(g, sig, resolve_clause(clause_text, clause_file));
    if (verify->parsed()) return run_verify(g, sig);
    if (classify->parsed()) return run_classify(g, sig);
    if (enumerate->parsed()) return run_enumerate(g, sig);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 65;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 65;
  } catch (const SignatureError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 65;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 70;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}
