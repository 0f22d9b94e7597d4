#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "kmt/root_data.hpp"

namespace kmt {

// Raised when a requested value lies beyond the stated truncation depth.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight multiplicities of L(Lambda) by the Freudenthal recursion, run on
// positive-root tables with the algebra's root multiplicities:
//
//   A1^(1):  +-alpha + n delta  and  n delta,           all multiplicity 1
//   A2^(2):  +-alpha + n delta, +-2 alpha + (2n+1) delta, n delta,  mult 1
//
// Values are memoized per (algebra, Lambda) behind a mutex; the cache is
// cleared wholesale when it exceeds KMT_CACHE_LIMIT entries (default 2^22),
// which keeps results identical while bounding memory.
//
// `depth` arguments count total simple-root height of Lambda - mu.

// dim L(Lambda)_mu. Transports mu into the dominant chamber first, so the
// cost depends on the height of the dominant representative, not of mu.
// Throws TruncationError when height(Lambda - mu) > depth.
long long weight_multiplicity(const Algebra& g, const Weight& highest,
                              const Weight& mu, long long depth);

struct TruncatedCharacter {
  Weight highest;
  long long depth = 0;
  std::map<Weight, long long> mult;  // only nonzero entries
};

TruncatedCharacter truncated_character(const Algebra& g, const Weight& highest,
                                       long long depth);

// Coefficient series of e^{lambda + n delta} in ch L(Lambda), read downward
// from the delta-maximal member of the string: coeffs[k] is the multiplicity
// of lambda + (top - k) delta, k = 0..depth. Empty when no shift of lambda
// is a weight.
struct DeltaString {
  Weight base;
  long long top = 0;
  std::vector<long long> coeffs;
  bool empty() const { return coeffs.empty(); }
};

DeltaString delta_string_of(const Algebra& g, const Weight& highest,
                            const Weight& lambda, long long depth);

// Exact convolution of two truncated characters. Entries are kept where both
// factors are complete, i.e. total height at most min(a.depth, b.depth) below
// a.highest + b.highest.
struct ProductCharacter {
  Weight top;
  long long depth = 0;
  std::map<Weight, long long> mult;
};

ProductCharacter character_product(const Algebra& g,
                                   const TruncatedCharacter& a,
                                   const TruncatedCharacter& b);

// Positive roots of height <= max_height, as (root, multiplicity) pairs.
// Exposed for the character-formula cross checks in the test suite.
std::vector<std::pair<Weight, long long>> positive_roots(
    const Algebra& g, long long max_height);

// Drops all memoized multiplicity tables (mainly for tests and the CLI
// cache-size override).
void clear_multiplicity_cache();

}  // namespace kmt
