#include "ivpoly/commands.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ivpoly/idealization.hpp"
#include "ivpoly/lattices.hpp"
#include "ivpoly/membership.hpp"
#include "ivpoly/ringext.hpp"
#include "ivpoly/verify.hpp"

namespace ivpoly {

namespace {

using json = nlohmann::ordered_json;

const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::none: return "none";
    case WitnessKind::eval_point: return "eval_point";
    case WitnessKind::congruence: return "congruence";
    case WitnessKind::delta_chain: return "delta_chain";
    case WitnessKind::denominator: return "denominator";
  }
  return "unknown";
}

json int_list(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

json witness_json(const Witness& w) {
  json j;
  j["kind"] = witness_kind_name(w.kind);
  if (!w.point.empty()) j["point"] = int_list(w.point);
  if (!w.multipliers.empty()) j["multipliers"] = int_list(w.multipliers);
  if (!w.displacements.empty()) j["displacements"] = int_list(w.displacements);
  if (w.kind != WitnessKind::none) j["value"] = to_string(w.value);
  if (w.modulus != 0) j["modulus"] = w.modulus.get_str();
  if (w.deriv != 0) j["derivatives"] = w.deriv;
  j["component"] = w.component;
  if (!w.note.empty()) j["note"] = w.note;
  j["rendered"] = w.to_string();
  return j;
}

struct MemberOutcome {
  std::string ring;  // human name of the ring being tested
  MembershipVerdict verdict;
};

bool parse_count(const std::string& s, unsigned long& out) {
  if (s.empty() || s.size() > 9) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  out = std::stoul(s);
  return true;
}

std::vector<Int> parse_int_list(std::string s) {
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']')
      throw std::invalid_argument("unbalanced brackets in '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Int> out;
  std::string cur;
  auto flush = [&] {
    std::string t;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty entry in integer list");
    try {
      out.emplace_back(t);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + t + "' in list");
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();  // rejects the empty token and trailing commas
  return out;
}

MemberOutcome run_member(const std::string& expr, const std::string& target) {
  if (target == "int")
    return {"Int(Z)", in_int(parse_poly(expr))};
  if (target.rfind("int-k:", 0) == 0) {
    unsigned long k;
    if (!parse_count(target.substr(6), k) || k > 64)
      throw std::invalid_argument("bad derivative order in '" + target + "'");
    return {"Int^(" + std::to_string(k) + ")(Z)",
            in_int_k(parse_poly(expr), static_cast<unsigned>(k))};
  }
  if (target.rfind("int-mod:", 0) == 0) {
    std::vector<Int> m = parse_int_list(target.substr(8));
    if (m.size() != 1)
      throw std::invalid_argument("int-mod takes a single modulus");
    return {"Int(Z;" + m[0].get_str() + ")", in_int_mod(parse_poly(expr), m[0])};
  }
  if (target.rfind("int-multiset:", 0) == 0) {
    std::vector<Int> S = parse_int_list(target.substr(13));
    std::string name = "Int(Z;{";
    for (std::size_t i = 0; i < S.size(); ++i)
      name += (i ? "," : "") + S[i].get_str();
    name += "})";
    return {name, in_int_multiset(parse_poly(expr), S)};
  }
  if (target.rfind("ext:", 0) == 0) {
    RelationVector rel{parse_int_list(target.substr(4))};
    std::string name = "Int of Z[rho], relations [";
    for (std::size_t i = 0; i < rel.r.size(); ++i)
      name += (i ? "," : "") + rel.r[i].get_str();
    name += "]";
    return {name, in_int_ext(parse_gen_dual_poly(expr, rel))};
  }
  if (target.rfind("idealization:", 0) == 0) {
    std::string rest = target.substr(13);
    std::optional<ModuleSpec> target_spec;
    unsigned long k = 0;
    if (unsigned long v; parse_count(rest, v)) {
      k = v;  // module must ride on the expression
    } else {
      std::size_t comma = rest.rfind(',');
      if (comma == std::string::npos || !parse_count(rest.substr(comma + 1), k))
        throw std::invalid_argument(
            "expected idealization:<module>,<k> or idealization:<k> in '" +
            target + "'");
      target_spec = parse_module_spec(rest.substr(0, comma));
    }
    if (k > 16) throw std::invalid_argument("derivative level too large");
    auto [F, expr_spec] = parse_ideal_poly(expr);
    if (target_spec && expr_spec && !(*target_spec == *expr_spec))
      throw std::invalid_argument(
          "the target and the expression name different modules");
    if (!target_spec && !expr_spec)
      throw std::invalid_argument(
          "no module named; use idealization:<module>,<k> or '... over Z(+)...'");
    ModuleSpec spec = target_spec ? *target_spec : *expr_spec;
    return {"Int of " + spec.to_string() + ", level " + std::to_string(k),
            in_int_idealization(spec, F, static_cast<unsigned>(k))};
  }
  throw std::invalid_argument(
      "unsupported target '" + target +
      "' (expected int, int-k:<k>, int-mod:<m>, int-multiset:<list>, "
      "ext:<relations>, or idealization:<module>,<k>)");
}

std::string render_member_text(const json& doc) {
  std::ostringstream os;
  os << (doc["result"]["member"].get<bool>() ? "member" : "non-member")
     << " of " << doc["result"]["ring"].get<std::string>() << ": "
     << doc["params"]["expr"].get<std::string>() << "\n";
  for (const auto& w : doc["witnesses"])
    os << "witness: " << w["rendered"].get<std::string>() << "\n";
  return os.str();
}

std::string render_basis_text(const json& doc) {
  std::ostringstream os;
  const json& r = doc["result"];
  os << "basis " << doc["params"]["selector"].get<std::string>()
     << ", degree bound " << doc["params"]["degree"].get<unsigned>() << "\n";
  os << "pivots:";
  for (const auto& p : r["pivots"]) os << " " << p.get<std::string>();
  os << "\n";
  std::size_t i = 0;
  for (const auto& rp : r["row_polynomials"])
    os << "  row " << i++ << ": " << rp.get<std::string>() << "\n";
  if (r.contains("conjecture"))
    os << r["conjecture"]["rendered"].get<std::string>();
  return os.str();
}

std::string render_verify_text(const json& doc) {
  std::ostringstream os;
  for (const auto& c : doc["result"]["checks"])
    os << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
       << c["id"].get<std::string>() << "  (" << c["note"].get<std::string>()
       << ")\n";
  os << (doc["result"]["pass"].get<bool>() ? "suite passed" : "SUITE FAILED")
     << ": " << doc["params"]["suite"].get<std::string>() << ", seed "
     << doc["params"]["seed"].get<std::uint64_t>() << "\n";
  return os.str();
}

CommandResult render(int exit_code, json doc, const std::string& format,
                     std::string (*text_renderer)(const json&),
                     std::chrono::steady_clock::time_point t0) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (format == "json") {
    doc["duration_ms"] = ms;  // excluded from the comparable section
    return {exit_code, doc.dump(2) + "\n"};
  }
  if (format == "text")
    return {exit_code,
            text_renderer(doc) + "duration: " + std::to_string(ms) + "ms\n"};
  throw std::invalid_argument("unknown format '" + format +
                              "' (expected json or text)");
}

CommandResult usage_error(const std::string& command, const std::string& what,
                          const std::string& format) {
  if (format == "text") return {2, "error: " + what + "\n"};
  json doc;
  doc["command"] = command;
  doc["error"] = what;
  return {2, doc.dump(2) + "\n"};
}

CommandResult internal_failure(const std::string& command,
                               const std::string& what,
                               const std::string& format) {
  if (format == "text") return {3, "internal error: " + what + "\n"};
  json doc;
  doc["command"] = command;
  doc["internal_error"] = what;
  return {3, doc.dump(2) + "\n"};
}

}  // namespace

CommandResult cmd_member(const std::string& expr, const std::string& target,
                         const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  if (format != "json" && format != "text")
    return usage_error("member", "unknown format '" + format + "'", format == "text" ? "text" : "json");
  try {
    MemberOutcome out = run_member(expr, target);
    json doc;
    doc["command"] = "member";
    doc["params"] = {{"expr", expr}, {"target", target}};
    doc["result"] = {{"member", out.verdict.member}, {"ring", out.ring}};
    doc["witnesses"] = json::array();
    if (!out.verdict.member)
      doc["witnesses"].push_back(witness_json(out.verdict.witness));
    return render(out.verdict.member ? 0 : 1, std::move(doc), format,
                  render_member_text, t0);
  } catch (const internal_error& e) {
    return internal_failure("member", e.what(), format);
  } catch (const std::invalid_argument& e) {
    return usage_error("member", e.what(), format);
  } catch (const std::exception& e) {
    return internal_failure("member", e.what(), format);
  }
}

CommandResult cmd_basis(const std::string& selector, unsigned degree,
                        bool conjecture, const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  if (format != "json" && format != "text")
    return usage_error("basis", "unknown format '" + format + "'", format == "text" ? "text" : "json");
  try {
    if (degree > 64)
      throw std::invalid_argument("degree bound capped at 64");
    IntLattice L = [&] {
      if (selector.rfind("mod:", 0) == 0) {
        std::vector<Int> m = parse_int_list(selector.substr(4));
        if (m.size() != 1)
          throw std::invalid_argument("mod takes a single modulus");
        return basis_int_mod(m[0], degree);
      }
      if (selector.rfind("diff:", 0) == 0) {
        unsigned long k;
        if (!parse_count(selector.substr(5), k) || k > 64)
          throw std::invalid_argument("bad derivative order in '" + selector +
                                      "'");
        return basis_int_k(static_cast<unsigned>(k), degree);
      }
      throw std::invalid_argument("invalid selector '" + selector +
                                  "' (expected mod:<m> or diff:<k>)");
    }();
    if (conjecture && selector != "mod:4")
      throw std::invalid_argument(
          "--conjecture only applies to the mod:4 selector");
    if (conjecture && degree < 6)
      throw std::invalid_argument(
          "the conjecture comparison needs degree >= 6");

    json doc;
    doc["command"] = "basis";
    doc["params"] = {{"selector", selector},
                     {"degree", degree},
                     {"conjecture", conjecture}};
    json result;
    result["rows"] = L.basis.rows();
    result["cols"] = L.basis.cols();
    json pivots = json::array();
    for (std::size_t i = 0; i < L.basis.rows(); ++i)
      pivots.push_back(
          L.basis.at(i, static_cast<std::size_t>(pivot_column(L.basis, i)))
              .get_str());
    result["pivots"] = std::move(pivots);
    json matrix = json::array();
    for (std::size_t i = 0; i < L.basis.rows(); ++i)
      matrix.push_back(int_list(L.basis.row(i)));
    result["matrix"] = std::move(matrix);
    json rows = json::array();
    for (std::size_t i = 0; i < L.basis.rows(); ++i)
      rows.push_back(to_binomial(L.row_poly(i)).to_string());
    result["row_polynomials"] = std::move(rows);
    if (conjecture) {
      ConjectureReport rep = conjecture_check_mod4(degree);
      json c;
      c["verdict"] = to_string(rep.verdict);
      c["generators_are_members"] = rep.generators_are_members;
      c["computed_pivots"] = int_list(rep.computed_pivots);
      c["conjectured_pivots"] = int_list(rep.conjectured_pivots);
      c["in_computed_only"] = int_list(rep.in_computed_only);
      c["in_conjectured_only"] = int_list(rep.in_conjectured_only);
      c["rendered"] = rep.to_string();
      result["conjecture"] = std::move(c);
    }
    doc["result"] = std::move(result);
    doc["witnesses"] = json::array();
    return render(0, std::move(doc), format, render_basis_text, t0);
  } catch (const internal_error& e) {
    return internal_failure("basis", e.what(), format);
  } catch (const std::invalid_argument& e) {
    return usage_error("basis", e.what(), format);
  } catch (const std::exception& e) {
    return internal_failure("basis", e.what(), format);
  }
}

CommandResult cmd_verify(const std::string& suite, std::uint64_t seed,
                         const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  if (format != "json" && format != "text")
    return usage_error("verify", "unknown format '" + format + "'", format == "text" ? "text" : "json");
  try {
    SuiteReport rep = run_suite(suite, seed);
    json doc;
    doc["command"] = "verify";
    doc["params"] = {{"suite", suite}, {"seed", seed}};
    json checks = json::array();
    for (const CheckResult& c : rep.results)
      checks.push_back({{"id", c.id}, {"pass", c.pass}, {"note", c.note}});
    doc["result"] = {{"pass", rep.all_pass()}, {"checks", std::move(checks)}};
    doc["witnesses"] = json::array();
    return render(rep.all_pass() ? 0 : 1, std::move(doc), format,
                  render_verify_text, t0);
  } catch (const internal_error& e) {
    return internal_failure("verify", e.what(), format);
  } catch (const std::invalid_argument& e) {
    return usage_error("verify", e.what(), format);
  } catch (const std::exception& e) {
    return internal_failure("verify", e.what(), format);
  }
}

}  // namespace ivpoly
