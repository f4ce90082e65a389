#include "ivpoly.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ivpoly/commands.hpp"
#include "ivpoly/poly.hpp"
#include "ivpoly/rng.hpp"

static_assert(IVP_DEFAULT_SEED == ivpoly::kDefaultSeed,
              "the C header and the library disagree on the default seed");

struct ivp_poly {
  ivpoly::Poly p;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ivp_status fail(ivp_status st, const char* what) {
  g_last_error = what;
  return st;
}

/* Poly-level entry points share this wrapper: null checks, exception
 * translation, last-error bookkeeping. */
template <typename F>
ivp_status guarded(F&& body) {
  try {
    return body();
  } catch (const ivpoly::internal_error& e) {
    return fail(IVP_INTERNAL_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(IVP_PARSE_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(IVP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(IVP_INTERNAL_ERROR, e.what());
  }
}

ivpoly::Rat parse_rat(const char* text) {
  ivpoly::Rat q;
  try {
    q = ivpoly::Rat(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("bad rational '") + text + "'");
  }
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal");
  q.canonicalize();
  return q;
}

}  // namespace

extern "C" {

const char* ivp_version(void) { return "1.0.0"; }

const char* ivp_status_name(int status) {
  switch (status) {
    case IVP_OK: return "ok";
    case IVP_CHECKED_FALSE: return "checked-false";
    case IVP_PARSE_ERROR: return "parse-error";
    case IVP_INVALID_ARGUMENT: return "invalid-argument";
    case IVP_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

const char* ivp_last_error(void) { return g_last_error.c_str(); }

void ivp_string_free(char* s) { std::free(s); }

ivp_status ivp_poly_parse(const char* text, ivp_poly** out) {
  if (!text || !out) return fail(IVP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ivp_poly{ivpoly::parse_poly(text)};
    return IVP_OK;
  });
}

ivp_status ivp_poly_format(const ivp_poly* f, int binomial_basis, char** out) {
  if (!f || !out) return fail(IVP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string s = binomial_basis ? ivpoly::to_binomial(f->p).to_string()
                                   : f->p.to_string();
    *out = dup_string(s);
    return *out ? IVP_OK : fail(IVP_INTERNAL_ERROR, "out of memory");
  });
}

ivp_status ivp_poly_add(const ivp_poly* a, const ivp_poly* b, ivp_poly** out) {
  if (!a || !b || !out) return fail(IVP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ivp_poly{a->p + b->p};
    return IVP_OK;
  });
}

ivp_status ivp_poly_mul(const ivp_poly* a, const ivp_poly* b, ivp_poly** out) {
  if (!a || !b || !out) return fail(IVP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ivp_poly{a->p * b->p};
    return IVP_OK;
  });
}

ivp_status ivp_poly_derivative(const ivp_poly* f, ivp_poly** out) {
  if (!f || !out) return fail(IVP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ivp_poly{f->p.derivative()};
    return IVP_OK;
  });
}

ivp_status ivp_poly_eval(const ivp_poly* f, const char* point,
                         char** out_value) {
  if (!f || !point || !out_value)
    return fail(IVP_INVALID_ARGUMENT, "null argument");
  *out_value = nullptr;
  return guarded([&] {
    ivpoly::Rat x = parse_rat(point);
    *out_value = dup_string(ivpoly::to_string(f->p.eval(x)));
    return *out_value ? IVP_OK : fail(IVP_INTERNAL_ERROR, "out of memory");
  });
}

void ivp_poly_free(ivp_poly* f) { delete f; }

int ivp_cmd_member(const char* expr, const char* target, const char* format,
                   char** report) {
  if (!expr || !target || !format || !report) {
    fail(IVP_INVALID_ARGUMENT, "null argument");
    return 2;
  }
  *report = nullptr;
  try {
    ivpoly::CommandResult r = ivpoly::cmd_member(expr, target, format);
    *report = dup_string(r.report);
    if (!*report) {
      fail(IVP_INTERNAL_ERROR, "out of memory");
      return 3;
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    fail(IVP_INTERNAL_ERROR, e.what());
    return 3;
  }
}

int ivp_cmd_basis(const char* selector, unsigned degree, int conjecture,
                  const char* format, char** report) {
  if (!selector || !format || !report) {
    fail(IVP_INVALID_ARGUMENT, "null argument");
    return 2;
  }
  *report = nullptr;
  try {
    ivpoly::CommandResult r =
        ivpoly::cmd_basis(selector, degree, conjecture != 0, format);
    *report = dup_string(r.report);
    if (!*report) {
      fail(IVP_INTERNAL_ERROR, "out of memory");
      return 3;
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    fail(IVP_INTERNAL_ERROR, e.what());
    return 3;
  }
}

int ivp_cmd_verify(const char* suite, uint64_t seed, const char* format,
                   char** report) {
  if (!suite || !format || !report) {
    fail(IVP_INVALID_ARGUMENT, "null argument");
    return 2;
  }
  *report = nullptr;
  try {
    ivpoly::CommandResult r = ivpoly::cmd_verify(suite, seed, format);
    *report = dup_string(r.report);
    if (!*report) {
      fail(IVP_INTERNAL_ERROR, "out of memory");
      return 3;
    }
    return r.exit_code;
  } catch (const std::exception& e) {
    fail(IVP_INTERNAL_ERROR, e.what());
    return 3;
  }
}

}  // extern "C"
