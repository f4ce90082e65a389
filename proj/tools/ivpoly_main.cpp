/* CLI front door. Talks to the core strictly through the C interface in
 * ivpoly.h, the same surface other language bindings would use. */

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ivpoly.h"

namespace {

int emit(int code, char* report) {
  if (report) {
    std::fputs(report, code == 0 || code == 1 ? stdout : stderr);
    ivp_string_free(report);
  } else {
    std::fprintf(stderr, "error: %s\n", ivp_last_error());
  }
  return code;
}

/* Fold a value-carrying flag into a bare target/selector token. The token
 * either already carries its argument after ':' (flag must then be absent)
 * or gets the flag value appended. */
int fold(std::string& token, const std::string& base,
         const std::optional<std::string>& flag, std::string& err) {
  bool is_base = token == base;
  bool has_prefix = token.rfind(base + ":", 0) == 0;
  if (!is_base && !has_prefix) {
    if (flag)
      err = "flag for '" + base + "' given, but the target is '" + token + "'";
    return flag ? 2 : 0;
  }
  if (has_prefix && flag) {
    err = "'" + token + "' already carries its argument";
    return 2;
  }
  if (is_base) {
    if (!flag) {
      err = "'" + base + "' needs an argument (append ':<value>' or use the flag)";
      return 2;
    }
    token = base + ":" + *flag;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer-valued polynomial toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ivp_version()));

  std::string format = "text";
  app.add_option("--format", format, "report rendering")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  /* member */
  auto* member = app.add_subcommand("member", "membership of a polynomial");
  member->fallthrough();
  std::string expr, target = "int";
  std::optional<unsigned> opt_k;
  std::optional<std::string> opt_modulus, opt_multiset, opt_relations,
      opt_module;
  member->add_option("expr", expr, "polynomial expression")->required();
  member->add_option("target", target,
                     "int | int-k:<k> | int-mod:<m> | int-multiset:<list> | "
                     "ext:<relations> | idealization:<module>,<k>");
  member->add_option("--k", opt_k, "derivative order / idealization level");
  member->add_option("--modulus", opt_modulus, "modulus for int-mod");
  member->add_option("--multiset", opt_multiset,
                     "comma-separated entries for int-multiset");
  member->add_option("--relations", opt_relations,
                     "comma-separated relations for ext");
  member->add_option("--module", opt_module,
                     "module for idealization (Z^n | Z/m | Q)");

  /* basis */
  auto* basis = app.add_subcommand("basis", "lattice basis of a subring");
  basis->fallthrough();
  std::string selector;
  unsigned degree = 0;
  bool conjecture = false;
  basis->add_option("selector", selector, "mod:<m> | diff:<k>")->required();
  basis->add_option("-D,--degree", degree, "degree bound (<= 64)")->required();
  basis->add_flag("--conjecture", conjecture,
                  "compare the mod-4 lattice against its conjectured basis");
  basis->add_option("--modulus", opt_modulus, "modulus for the mod selector");
  basis->add_option("--k", opt_k, "order for the diff selector");

  /* verify */
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->fallthrough();
  std::string suite = "all";
  std::uint64_t seed = IVP_DEFAULT_SEED;
  verify->add_option(
      "suite", suite, "all | core | section2 | section3 | section4 | section5");
  verify->add_option("--seed", seed, "seed for the randomized groups")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    /* Help/version exit 0; every other parse problem is a usage error. */
    return rc == 0 ? 0 : 2;
  }

  char* report = nullptr;
  if (member->parsed()) {
    std::string err;
    auto opt_k_str = opt_k ? std::optional<std::string>(std::to_string(*opt_k))
                           : std::nullopt;
    /* idealization composes module and level; the rest take one value. */
    if (target == "idealization" || target.rfind("idealization:", 0) == 0) {
      if (target == "idealization") {
        if (opt_module && opt_k)
          target += ":" + *opt_module + "," + std::to_string(*opt_k);
        else if (opt_k)
          target += ":" + std::to_string(*opt_k);
        else if (opt_module)
          target += ":" + *opt_module + ",0";
        else {
          std::fprintf(stderr,
                       "error: idealization needs --module and/or --k\n");
          return 2;
        }
      } else if (opt_module || opt_k) {
        std::fprintf(stderr,
                     "error: '%s' already carries its argument\n",
                     target.c_str());
        return 2;
      }
    } else {
      for (int rc : {fold(target, "int-k", opt_k_str, err),
                     fold(target, "int-mod", opt_modulus, err),
                     fold(target, "int-multiset", opt_multiset, err),
                     fold(target, "ext", opt_relations, err)}) {
        if (rc != 0) {
          std::fprintf(stderr, "error: %s\n", err.c_str());
          return 2;
        }
      }
      if (opt_module) {
        std::fprintf(stderr,
                     "error: --module only applies to idealization\n");
        return 2;
      }
    }
    int code = ivp_cmd_member(expr.c_str(), target.c_str(), format.c_str(),
                              &report);
    return emit(code, report);
  }
  if (basis->parsed()) {
    std::string err;
    for (int rc : {fold(selector, "mod", opt_modulus, err),
                   fold(selector, "diff",
                        opt_k ? std::optional<std::string>(
                                    std::to_string(*opt_k))
                              : std::nullopt,
                        err)}) {
      if (rc != 0) {
        std::fprintf(stderr, "error: %s\n", err.c_str());
        return 2;
      }
    }
    int code = ivp_cmd_basis(selector.c_str(), degree, conjecture ? 1 : 0,
                             format.c_str(), &report);
    return emit(code, report);
  }
  int code = ivp_cmd_verify(suite.c_str(), seed, format.c_str(), &report);
  return emit(code, report);
}
