#include "z4cb_cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace z4cb::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidConfig, msg); }

std::uint32_t parse_exponent(const std::string& s, const char* what) {
  std::uint32_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty()) bad(std::string(what) + ": expected \"zero\" or an exponent, got \"" + s + "\"");
  return v;
}

std::string element_text(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned()) return std::to_string(j.get<std::uint64_t>());
  bad(std::string(what) + ": expected \"zero\" or a non-negative integer");
}

template <typename T>
T number(const json& j, const char* what) {
  if (!j.is_number_integer() || (j.is_number_integer() && j.get<std::int64_t>() < 0))
    bad(std::string(what) + ": expected a non-negative integer");
  return j.get<T>();
}

}  // namespace

GammaSpec parse_gamma(const std::string& s) {
  if (s == "zero") return GammaSpec::zero();
  return GammaSpec::power(parse_exponent(s, "gamma"));
}

TeichElement parse_eta(const std::string& s) {
  if (s == "zero") return TeichElement::zero();
  return TeichElement::power(parse_exponent(s, "eta"));
}

Variant parse_variant(const std::string& s) {
  if (s == "f") return Variant::f;
  if (s == "f_prime" || s == "f'") return Variant::f_prime;
  bad("variant must be \"f\" or \"f_prime\", got \"" + s + "\"");
}

void apply_json(RunConfig& cfg, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "m") {
      cfg.m = number<int>(v, "m");
    } else if (key == "polynomial") {
      if (!v.is_string()) bad("polynomial: expected a coefficient string or \"auto\"");
      cfg.polynomial = v.get<std::string>();
    } else if (key == "preset") {
      if (!v.is_string()) bad("preset: expected a string");
      cfg.preset = v.get<std::string>();
    } else if (key == "e1") {
      cfg.e1 = number<int>(v, "e1");
    } else if (key == "chain") {
      if (!v.is_array()) bad("chain: expected an array of integers");
      cfg.chain.clear();
      for (const auto& e : v) cfg.chain.push_back(number<int>(e, "chain entry"));
    } else if (key == "gammas") {
      if (!v.is_array()) bad("gammas: expected an array");
      cfg.gammas.clear();
      for (const auto& e : v) cfg.gammas.push_back(parse_gamma(element_text(e, "gamma")));
    } else if (key == "eta") {
      cfg.eta = parse_eta(element_text(v, "eta"));
    } else if (key == "variant") {
      if (!v.is_string()) bad("variant: expected a string");
      cfg.variant = parse_variant(v.get<std::string>());
    } else if (key == "method") {
      if (!v.is_string()) bad("method: expected a string");
      cfg.method = v.get<std::string>();
    } else if (key == "sample") {
      if (v.is_null() || (v.is_string() && v.get<std::string>() == "all"))
        cfg.sample.reset();
      else
        cfg.sample = number<std::size_t>(v, "sample");
    } else if (key == "seed") {
      cfg.seed = number<std::uint64_t>(v, "seed");
    } else if (key == "out_dir") {
      if (!v.is_string()) bad("out_dir: expected a string");
      cfg.out_dir = v.get<std::string>();
    } else if (key == "workers") {
      cfg.workers = number<unsigned>(v, "workers");
    } else {
      bad("unknown config key \"" + key + "\"");
    }
  }
}

void apply_json_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_json(cfg, ss.str());
}

BinaryPoly resolve_polynomial(const RunConfig& cfg) {
  if (!cfg.m) bad("m is required");
  const int m = *cfg.m;
  if (m < kMinDegree || m > kMaxDegree) bad("m must lie in [2, 20], got " + std::to_string(m));
  if (cfg.polynomial == "auto") return BinaryPoly::smallest_primitive(m);
  const BinaryPoly g = BinaryPoly::parse(cfg.polynomial);
  if (g.degree() != m)
    bad("polynomial " + cfg.polynomial + " has degree " + std::to_string(g.degree()) + ", expected m = " +
        std::to_string(m));
  return g;
}

ChainParams resolve_chain(const RunConfig& cfg) {
  if (!cfg.m) bad("m is required");
  const int m = *cfg.m;
  if (cfg.preset) {
    PresetArgs args;
    args.e1 = cfg.e1;
    args.eta = cfg.eta;
    if (!cfg.gammas.empty()) args.gamma = cfg.gammas.front();
    return preset(parse_preset(*cfg.preset), m, args);
  }
  ChainParams p;
  p.m = m;
  p.chain = cfg.chain.empty() ? std::vector<int>{1, m} : cfg.chain;
  p.gammas = cfg.gammas;
  p.eta = cfg.eta;
  p.variant = cfg.variant;
  return p;
}

VerifyMethod resolve_method(const RunConfig& cfg, int m) {
  if (cfg.method != "auto") return parse_verify_method(cfg.method);
  if (m <= 10) return VerifyMethod::walsh;
  if (m <= kMaxTableDegree) return VerifyMethod::rank;
  return VerifyMethod::closed_rank;
}

PairBudget resolve_budget(const RunConfig& cfg) {
  if (cfg.sample) return PairBudget::sampled(*cfg.sample, cfg.seed);
  PairBudget b = PairBudget::everything();
  b.seed = cfg.seed;
  return b;
}

unsigned resolve_workers(const RunConfig& cfg) {
  if (cfg.workers != 0) return cfg.workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace z4cb::cli
