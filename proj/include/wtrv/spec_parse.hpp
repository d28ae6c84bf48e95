#pragma once

// Text form "name(k1=v1,k2=v2)" for distributions and weights.

#include <string>

#include "wtrv/distributions.hpp"
#include "wtrv/weights.hpp"

namespace wtrv {

struct ParsedSpec {
  std::string name;
  ParamMap params;
};

/// Throws ParseError on malformed text. A bare name means no parameters.
ParsedSpec parse_spec(const std::string& text);

DistributionHandle parse_distribution(const std::string& text);
WeightFunction parse_weight(const std::string& text);

}  // namespace wtrv
