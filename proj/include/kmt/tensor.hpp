#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmt/multiplicity.hpp"
#include "kmt/rational.hpp"
#include "kmt/root_data.hpp"

namespace kmt {

// Tensor product decomposition of L(left) (x) L(right) into
//   sum over components  ch L(component) * (signed delta series),
// computed from the delta-maximal weights lambda of L(left) whose shift
// lambda + right + rho lands on the dominant orbit of component + rho
// modulo delta.

struct SupportTerm {
  Weight lambda;   // delta-maximal weight of L(left)
  WeylWord v;      // lambda + right + rho = v(component + rho) + shift*delta
  long long shift; // the delta shift above
  int sign;        // (-1)^{length(v)}

  bool operator==(const SupportTerm&) const = default;
};

// All support terms with shift >= min_shift. The enumeration window is
// certified from the invariant form: the shift of a term through
// left + k alpha is bounded by a downward parabola in k, so scanning stops
// once the bound stays below min_shift. Orbit points fixed by a reflection
// contribute no term and are dropped.
//
// Preconditions: component dominant integral of level left(c) + right(c);
// left(c), right(c) > 0. Returns an empty list when
// left + right - component is outside the root lattice.
std::vector<SupportTerm> branching_support(const Algebra& g,
                                           const Weight& component,
                                           const Weight& left,
                                           const Weight& right,
                                           long long min_shift);

// A1^(1) closed form for the support term through left + k alpha. With
// component = m L0 + (j/2) a, left = (j'/2), right = (j''/2) coordinates and
// M = m + 2, the admissible k are
//   k == (j - j' - j'')/2                 mod M   (translation, sign +1)
//   k == -(j + j' + j'')/2 - 1            mod M   (s1 * translation, sign -1)
// and shift = n_k + (k - (j-j'-j'')/2)(k + (j+j'+j'')/2 + 1)/M.
// Throws std::invalid_argument for k outside both residue classes.
SupportTerm branching_support_closed_form(const Algebra& g,
                                          const Weight& component,
                                          const Weight& left,
                                          const Weight& right, long long k);

// Outer-multiplicity series of the components L(component + n delta):
// coeffs[k] is the multiplicity of L(component + (top-k) delta),
// k = 0..depth. Coefficients are exact; a negative value would contradict
// unitarity of the coset action and raises std::logic_error.
DeltaString branching_string(const Algebra& g, const Weight& component,
                             const Weight& left, const Weight& right,
                             long long depth);

struct TensorComponent {
  Weight rep;             // dominant, delta-coordinate zero
  long long top_delta;    // absolute delta-coordinate of the top component
  std::vector<long long> coeffs;
};

struct TensorDecomposition {
  Weight left, right;
  long long depth = 0;
  std::vector<TensorComponent> components;  // sorted by rep
};

// All component families whose top lies at most `depth` delta-steps below
// left + right, each with its series to `depth`.
TensorDecomposition decompose_tensor(const Algebra& g, const Weight& left,
                                     const Weight& right, long long depth);

// min(n1, n2) with through - right + n1 delta delta-maximal in L(left) and
// through - left + n2 delta delta-maximal in L(right); L(through + n delta)
// is then the delta-maximal component through `through`. nullopt if either
// shift does not exist (A2^(2) only; see delta_max_shift).
std::optional<long long> delta_max_component(const Algebra& g,
                                             const Weight& left,
                                             const Weight& right,
                                             const Weight& through);

// Predicted alpha-offsets k (relative to `left`) where the maximal shift
// over support terms of the given sign is attained:
//   sign +1: k = (j - j' - j'')/2                       (single location)
//   sign -1: k0 = -(j + j' + j'')/2 - 1 and k0 + period (two candidates)
// with the A2^(2) analogues in the m1-coordinates.
std::vector<long long> predicted_max_locations(const Algebra& g,
                                               const Weight& component,
                                               const Weight& left,
                                               const Weight& right, int sign);

struct SignedMaxima {
  bool plus_nonempty = false;
  bool minus_nonempty = false;
  long long max_plus = 0;
  long long max_minus = 0;
  std::vector<long long> argmax_plus;   // alpha-offsets k attaining max
  std::vector<long long> argmax_minus;
};

// Enumerated per-sign maxima of the shift over the support through
// `component`. Complete: the scan cutoff is anchored at found terms, and the
// window bound guarantees every term above the cutoff is visited.
SignedMaxima signed_maxima(const Algebra& g, const Weight& component,
                           const Weight& left, const Weight& right);

// mu == mubar test for one argument order; the two orders cannot both tie.
struct TieCheck {
  bool tie_lr = false;
  bool tie_rl = false;
};

TieCheck non_cancellation_check(const Algebra& g, const Weight& component,
                                const Weight& left, const Weight& right);

// Central charge of the coset Virasoro action on the multiplicity spaces,
// dim * (m'/(m'+g) + m''/(m''+g) - m/(m+g)) with dim = 3, g = 2 for the
// untwisted algebra. Throws std::invalid_argument for A2^(2).
Rat coset_central_charge(const Algebra& g, const Rat& level_left,
                         const Rat& level_right);

// Unitary highest-weight Virasoro constraints on a branching series.
enum class TopStatus { Vacuum, NonVacuum, Unknown };

struct StringVerdict {
  bool ok = true;
  int offending_index = -1;
  std::string reason;
};

// Checks the coefficient pattern forced by unitarity:
//   always:          c_k >= 0 and c_k >= c_0 for k >= 2
//   top non-vacuum:  c_k > 0 for all k
//   top vacuum, nonzero charge:  c_1 = 0
//   top vacuum, zero charge:     series is [1, 0, 0, ...]
StringVerdict validate_virasoro_string(const std::vector<long long>& coeffs,
                                       TopStatus top,
                                       const std::optional<Rat>& charge);

}  // namespace kmt
