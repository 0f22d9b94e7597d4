#pragma once

#include <optional>
#include <vector>

#include "kmt/root_data.hpp"

namespace kmt {

// Delta-maximal weights of L(Lambda): weights lambda with lambda + n delta
// not a weight for any n > 0. The dominant ones form a finite set; the rest
// is its W-orbit.

struct DeltaMaxSet {
  Weight highest;
  std::vector<Weight> members;  // dominant, pairwise distinct, sorted
};

// The full dominant delta-maximal set. For A1^(1) these are
//   Lambda - k alpha  and  Lambda - l (delta - alpha)
// intersected with the dominant cone; for A2^(2) the three families
//   Lambda - j alpha, Lambda + k (2 alpha - delta),
//   Lambda + alpha - delta + l (2 alpha - delta).
// Requires Lambda dominant integral of positive level.
DeltaMaxSet delta_max_dominant_set(const Algebra& g, const Weight& highest);

// A1^(1) closed form for the delta offset n_k with
// Lambda + k alpha + n_k delta delta-maximal: writing k = q m + r,
// 0 <= r < m,
//   n_r = -r            for 0 <= r <= m - j,
//   n_r = m - j - 2 r   for m - j <= r < m,
//   n_k = n_r - q (k + r + j),
// where Lambda has level m and alpha-coordinate j/2.
long long delta_max_offset_closed_form(const Algebra& g, const Weight& highest,
                                       long long k);

// The unique n with gamma + n delta delta-maximal in L(Lambda), found by
// walking gamma to the dominant chamber and matching against the dominant
// set. Requires gamma in Lambda + Q at the same positive level. Returns
// nullopt when no delta shift of gamma meets the module (cannot happen for
// A1^(1); not ruled out for A2^(2)).
std::optional<long long> delta_max_shift(const Algebra& g,
                                         const Weight& highest,
                                         const Weight& gamma);

// Direct check against the multiplicity oracle:
// gamma is a weight and gamma + delta is not. Throws TruncationError when
// the heights involved exceed `depth`.
bool is_delta_maximal(const Algebra& g, const Weight& highest,
                      const Weight& gamma, long long depth);

}  // namespace kmt
