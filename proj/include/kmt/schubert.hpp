#pragma once

#include <vector>

#include "kmt/rational.hpp"
#include "kmt/root_data.hpp"

namespace kmt {

// Schubert calculus on the two maximal parabolic flag varieties of A1^(1).
// Cohomology has one basis class per degree; cup products are binomial,
// and the deformed product keeps a term only when its tau-exponent
// (u^{-1}rho + v^{-1}rho - w^{-1}rho - rho)(x_P) vanishes.

enum class Parabolic { P0, P1 };  // Levi contains alpha_1 resp. alpha_0

// Minimal-length coset representative of degree n: the alternating word of
// length n ending in s0 (P0) resp. s1 (P1).
WeylWord schubert_word(Parabolic p, int n);

// Coefficient of the degree-(n+m) class in the cup product of degrees n, m.
long long cup_coefficient(Parabolic p, int n, int m);

// tau-exponent for the degree-w term of the product of degrees u and v.
// Throws std::invalid_argument unless w == u + v.
long long deformed_exponent(Parabolic p, int u, int v, int w);

struct DeformedTerm {
  long long coefficient = 0;  // cup coefficient
  int target = 0;             // degree of the target class
  long long tau_exponent = 0;
  long long coefficient_at_tau_zero() const {
    return tau_exponent == 0 ? coefficient : 0;
  }
};

DeformedTerm deformed_product_coefficient(Parabolic p, int n, int m);

// Triples whose deformed product coefficient is exactly 1 with all degrees
// <= len_bound, each standing for the inequality
//   lambda(w_u x_P) + mu(w_v x_P) - nu(w_w x_P) >= 0.
struct ConeInequality {
  Parabolic p;
  int u = 0, v = 0, w = 0;
};

std::vector<ConeInequality> generate_cone_inequalities(int len_bound);

// Value of the inequality's left-hand side on a triple of weights.
Rat evaluate_cone_inequality(const ConeInequality& q, const Weight& lambda,
                             const Weight& mu, const Weight& nu);

}  // namespace kmt
