#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "ivpoly.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  ivp_string_free(s);
  return out;
}

struct PolyHandle {
  ivp_poly* p = nullptr;
  ~PolyHandle() { ivp_poly_free(p); }
};

std::string strip_duration(std::string text) {
  auto pos = text.find("\"duration_ms\"");
  if (pos == std::string::npos) return text;
  auto end = text.find('\n', pos);
  return text.substr(0, pos) + text.substr(end + 1);
}

}  // namespace

TEST_CASE("format in both bases") {
  PolyHandle f;
  REQUIRE(ivp_poly_parse("C(X,2)", &f.p) == IVP_OK);
  char* s = nullptr;
  REQUIRE(ivp_poly_format(f.p, 0, &s) == IVP_OK);
  CHECK(take(s) == "1/2*X^2 - 1/2*X");
  s = nullptr;
  REQUIRE(ivp_poly_format(f.p, 1, &s) == IVP_OK);
  CHECK(take(s) == "C(X,2)");
}

TEST_CASE("arithmetic and evaluation through handles") {
  PolyHandle f, g, sum, prod, der;
  REQUIRE(ivp_poly_parse("X^2 - 1", &f.p) == IVP_OK);
  REQUIRE(ivp_poly_parse("X + 1", &g.p) == IVP_OK);
  REQUIRE(ivp_poly_add(f.p, g.p, &sum.p) == IVP_OK);
  REQUIRE(ivp_poly_mul(f.p, g.p, &prod.p) == IVP_OK);
  REQUIRE(ivp_poly_derivative(prod.p, &der.p) == IVP_OK);

  char* s = nullptr;
  REQUIRE(ivp_poly_format(sum.p, 0, &s) == IVP_OK);
  CHECK(take(s) == "X^2 + X");
  s = nullptr;
  REQUIRE(ivp_poly_format(der.p, 0, &s) == IVP_OK);
  CHECK(take(s) == "3*X^2 + 2*X - 1");

  char* v = nullptr;
  REQUIRE(ivp_poly_eval(f.p, "-3/2", &v) == IVP_OK);
  CHECK(take(v) == "5/4");
}

TEST_CASE("error discipline on the handle layer") {
  ivp_poly* p = nullptr;
  CHECK(ivp_poly_parse("1/2 X", &p) == IVP_PARSE_ERROR);
  CHECK(std::string(ivp_last_error()).size() > 0);
  CHECK(ivp_poly_parse("", &p) == IVP_PARSE_ERROR);
  CHECK(ivp_poly_parse(nullptr, &p) == IVP_INVALID_ARGUMENT);
  CHECK(ivp_poly_parse("X", nullptr) == IVP_INVALID_ARGUMENT);

  PolyHandle f;
  REQUIRE(ivp_poly_parse("X", &f.p) == IVP_OK);
  char* v = nullptr;
  CHECK(ivp_poly_eval(f.p, "1/0", &v) == IVP_PARSE_ERROR);
  CHECK(ivp_poly_eval(f.p, "seven", &v) == IVP_PARSE_ERROR);

  CHECK(std::string(ivp_status_name(IVP_OK)) == "ok");
  CHECK(std::string(ivp_status_name(IVP_CHECKED_FALSE)) == "checked-false");
  CHECK(std::string(ivp_version()).size() > 0);
}

TEST_CASE("member command reports") {
  char* rep = nullptr;
  CHECK(ivp_cmd_member("C(X,2)", "int", "json", &rep) == 0);
  json doc = json::parse(take(rep));
  CHECK(doc["command"] == "member");
  CHECK(doc["result"]["member"] == true);

  rep = nullptr;
  CHECK(ivp_cmd_member("C(X,2)", "int-mod:2", "json", &rep) == 1);
  doc = json::parse(take(rep));
  CHECK(doc["result"]["member"] == false);
  CHECK(doc["witnesses"].size() > 0);

  rep = nullptr;
  CHECK(ivp_cmd_member("C(X,2)", "int-mod:0", "json", &rep) == 2);
  take(rep);
  rep = nullptr;
  CHECK(ivp_cmd_member("1/2 X", "int", "json", &rep) == 2);
  take(rep);
}

TEST_CASE("basis command pivots") {
  char* rep = nullptr;
  CHECK(ivp_cmd_basis("mod:3", 6, 0, "json", &rep) == 0);
  json doc = json::parse(take(rep));
  json want = json::array({"1", "1", "1", "3", "3", "3", "3"});
  CHECK(doc["result"]["pivots"] == want);

  rep = nullptr;
  CHECK(ivp_cmd_basis("mod:4", 8, 1, "json", &rep) == 0);
  doc = json::parse(take(rep));
  CHECK(doc["result"]["conjecture"]["verdict"] == "EQUAL");

  rep = nullptr;
  CHECK(ivp_cmd_basis("diff:1", 70, 0, "json", &rep) == 2);
  take(rep);
  rep = nullptr;
  CHECK(ivp_cmd_basis("mod:3", 6, 1, "json", &rep) == 2);  // wrong selector
  take(rep);
}

TEST_CASE("verify command and reproducibility") {
  char* rep = nullptr;
  CHECK(ivp_cmd_verify("core", IVP_DEFAULT_SEED, "json", &rep) == 0);
  std::string first = take(rep);
  json doc = json::parse(first);
  CHECK(doc["result"]["pass"] == true);

  rep = nullptr;
  CHECK(ivp_cmd_verify("core", IVP_DEFAULT_SEED, "json", &rep) == 0);
  std::string second = take(rep);
  CHECK(strip_duration(first) == strip_duration(second));

  rep = nullptr;
  CHECK(ivp_cmd_verify("section9", IVP_DEFAULT_SEED, "json", &rep) == 2);
  take(rep);
}
