#pragma once

#include <string>

#include "kmt/root_data.hpp"

namespace kmt {

// Text form of weights, used by the CLI and the JSON output:
//
//   "2*L0 + 1/2*alpha - 1*delta"        (A1^(1); base symbol L0)
//   "1*w0 + 3/2*alpha"                  (A2^(2); base symbol w0)
//   "2*w1 + 1*w0"                       (A2^(2); w1 = 1/2*w0 + 1/2*alpha)
//
// Coefficients are integers or fractions p/q with q in {1, 2}; terms may
// appear in any order, "L0"/"w0" are interchangeable on input, and a bare
// symbol means coefficient 1. Throws std::invalid_argument on syntax or
// lattice errors.
Weight parse_weight(const Algebra& g, const std::string& text);

std::string format_weight(const Algebra& g, const Weight& w);

}  // namespace kmt
