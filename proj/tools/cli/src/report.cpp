#include "report.hpp"

#include <cmath>
#include <sstream>

namespace z4cb::cli {

Json rational_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json optional_rational_json(const std::optional<Rational>& r) { return r ? rational_json(*r) : Json(nullptr); }

Json bounds_json(const Bounds& b) {
  Json j;
  j["welch_sq"] = rational_json(b.welch_sq);
  j["lev_real_sq"] = optional_rational_json(b.lev_real_sq);
  j["lev_complex_sq"] = optional_rational_json(b.lev_complex_sq);
  j["flags"] = Json{{"lev_real_applicable", b.lev_real_applicable}, {"lev_complex_applicable", b.lev_complex_applicable}};
  return j;
}

Json chain_json(const ChainParams& p) { return Json(p.chain); }

Json gammas_json(const ChainParams& p) {
  Json j = Json::array();
  for (const auto& g : p.gammas) j.push_back(g.is_zero() ? Json("zero") : Json(*g.exponent));
  return j;
}

Json element_json(TeichElement t) { return t.is_zero() ? Json("zero") : Json(t.exponent()); }

Json polynomial_json(const BinaryPoly& g) {
  return Json{{"binary", g.to_string()}, {"lifted", hensel_lift(g).to_string()}};
}

Json verify_json(const VerifyReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["m"] = r.m;
  j["budget"] = r.budget.all ? Json("all") : Json(r.budget.sample);
  j["singles_checked"] = r.singles_checked;
  j["pairs_checked"] = r.pairs_checked;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    Json e{{"a", element_json(f.a)}, {"b", element_json(f.b)}};
    if (f.rank >= 0) e["rank"] = f.rank;
    fails.push_back(e);
  }
  j["failures"] = fails;
  j["ok"] = r.ok();
  return j;
}

std::string approx(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace z4cb::cli
