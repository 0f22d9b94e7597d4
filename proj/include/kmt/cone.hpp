#pragma once

#include <optional>
#include <vector>

#include "kmt/rational.hpp"
#include "kmt/root_data.hpp"

namespace kmt {

// Saturated tensor cone membership for triples of dominant weights:
// (lambda, mu, nu) is a member when L(N nu) embeds into
// L(N lambda) (x) L(N mu) for some N >= 1. At positive levels this is
// decided exactly by two dominance tests, with the delta-maximal component
// shift as an independent cross check.

// gamma lies in the weight system of L(highest): gamma is congruent to the
// highest weight mod Q and its dominant representative sits below it.
// Throws std::invalid_argument when the levels differ.
bool weight_in_module(const Algebra& g, const Weight& highest,
                      const Weight& gamma);

struct ConeReport {
  Weight lambda, mu, nu;
  bool parity_ok = false;  // lambda + mu - nu in the root lattice
  bool member = false;
  std::optional<long long> n1, n2, n_tilde;  // delta-maximal witnesses
};

// Requires lambda, mu, nu dominant integral and lambda(c), mu(c) > 0
// (W-invariant factors are rejected). Level or lattice mismatch yields a
// non-member report with parity_ok = false.
ConeReport cone_membership(const Algebra& g, const Weight& lambda,
                           const Weight& mu, const Weight& nu);

struct AuditEntry {
  WeylWord w;
  int i = 0;       // which x_i
  int family = 0;  // 0: lambda fixed at identity, 1: mu fixed at identity
  Rat value;
};

// Evaluates lambda(x_i) + mu(w x_i) - nu(w x_i) and
// lambda(w x_i) + mu(x_i) - nu(w x_i) over all w of length <= len_bound.
// A negative value certifies non-membership; all-nonnegative over a finite
// window is evidence only, since W is infinite.
std::vector<AuditEntry> inequality_audit(const Algebra& g,
                                         const Weight& lambda,
                                         const Weight& mu, const Weight& nu,
                                         int len_bound);

// L(d0 nu) occurs in L(d0 lambda) (x) L(d0 mu): reads the actual branching
// series of the scaled triple at the delta offset of d0 nu. Requires the
// unscaled triple to be a member. Throws TruncationError when the needed
// offset exceeds `depth`.
bool saturation_witness(const Algebra& g, const Weight& lambda,
                        const Weight& mu, const Weight& nu, long long d0,
                        long long depth);

struct ScanCounterexample {
  Weight lambda, mu, nu;
  long long d0 = 0;
};

struct ScanReport {
  long long triples_checked = 0;
  long long witnesses_checked = 0;
  std::vector<ScanCounterexample> counterexamples;
};

// Every member triple with factor levels in (0, level_bound], component
// representatives nu-bar + t delta, and every d0 in the list: checks that
// L(d0 nu) really occurs. `depth` bounds how far below the top the scan
// looks (t ranges over [n0 - depth/max(d0), n0]).
ScanReport saturation_scan(const Algebra& g, const Rat& level_bound,
                           const std::vector<long long>& d0_list,
                           long long depth, int threads = 1);

}  // namespace kmt
