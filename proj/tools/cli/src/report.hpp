#pragma once

#include <json.hpp>

#include "z4cb/z4cb.hpp"

namespace z4cb::cli {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json optional_rational_json(const std::optional<Rational>& r);
Json bounds_json(const Bounds& b);
Json chain_json(const ChainParams& p);
Json gammas_json(const ChainParams& p);
Json element_json(TeichElement t);
Json polynomial_json(const BinaryPoly& g);
Json verify_json(const VerifyReport& r);

/// 12 significant digits.
std::string approx(double v);

}  // namespace z4cb::cli
