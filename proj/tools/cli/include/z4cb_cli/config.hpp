#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z4cb/z4cb.hpp"

namespace z4cb::cli {

/// Everything a command needs, merged from the JSON config file and flags.
/// Field-element inputs are exponents; the zero element is spelled "zero".
struct RunConfig {
  std::optional<int> m;
  std::string polynomial = "auto";
  std::optional<std::string> preset;
  int e1 = 0;
  std::vector<int> chain;
  std::vector<GammaSpec> gammas;
  TeichElement eta;
  Variant variant = Variant::f;
  std::string method = "auto";
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  unsigned workers = 1;
};

/// Overlays the fields present in a JSON document onto cfg. Throws
/// Error(InvalidConfig) for unknown keys or ill-typed values.
void apply_json(RunConfig& cfg, const std::string& json_text);
void apply_json_file(RunConfig& cfg, const std::string& path);

/// "zero" or a non-negative exponent.
GammaSpec parse_gamma(const std::string& s);
TeichElement parse_eta(const std::string& s);
Variant parse_variant(const std::string& s);

/// The binary polynomial selected by the config ("auto" = default for m).
BinaryPoly resolve_polynomial(const RunConfig& cfg);

/// Chain parameters after applying a preset or the {1, m} default chain.
ChainParams resolve_chain(const RunConfig& cfg);

/// Bentness method after resolving "auto" for the given m.
VerifyMethod resolve_method(const RunConfig& cfg, int m);

PairBudget resolve_budget(const RunConfig& cfg);

unsigned resolve_workers(const RunConfig& cfg);

}  // namespace z4cb::cli
