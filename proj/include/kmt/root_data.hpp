#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmt/rational.hpp"

namespace kmt {

// Exact realizations of the two rank-2 affine algebras.
//
// Coordinate conventions, shared by both algebras:
//
//   weights  live in  span(b, alpha, delta),  b = Lambda_0 (A1^(1))
//                                             or omega_0   (A2^(2))
//   Cartan elements live in  span(c, alpha^vee, d)
//
//   pairing table:  b(c)=1, alpha(alpha^vee)=2, delta(d)=1, rest 0.
//
// All coordinates are rationals with denominator dividing 2 and are stored
// doubled, as integers, so every operation below is integer arithmetic.
//
//   A1^(1):  alpha_0 = delta - alpha,   alpha_0^vee = c - alpha^vee,
//            alpha_1 = alpha,           alpha_1^vee = alpha^vee,
//            rho = 2 b + 1/2 alpha.
//   A2^(2):  alpha_0 = delta - 2 alpha, alpha_0^vee = c - 1/2 alpha^vee,
//            alpha_1 = alpha,           alpha_1^vee = alpha^vee,
//            rho = 3/2 b + 1/2 alpha,   omega_1 = 1/2 b + 1/2 alpha.
//
// The invariant symmetric form is normalized by (alpha,alpha) = 2; then
// (b,delta) = 1 for A1^(1) and (b,delta) = 4 for A2^(2), all other basis
// pairs zero. Any overall scale would do; this one keeps 4*(mu,nu) integral.

enum class AlgebraKind { A1_1, A2_2 };

std::string to_string(AlgebraKind k);

// Weight b*(w2/2) + alpha*(a2/2) + delta*(n2/2), doubled coordinates.
struct Weight {
  long long w2 = 0;
  long long a2 = 0;
  long long n2 = 0;

  friend Weight operator+(const Weight& x, const Weight& y) {
    return {x.w2 + y.w2, x.a2 + y.a2, x.n2 + y.n2};
  }
  friend Weight operator-(const Weight& x, const Weight& y) {
    return {x.w2 - y.w2, x.a2 - y.a2, x.n2 - y.n2};
  }
  friend Weight operator*(long long s, const Weight& x) {
    return {s * x.w2, s * x.a2, s * x.n2};
  }
  Weight operator-() const { return {-w2, -a2, -n2}; }
  auto operator<=>(const Weight&) const = default;

  Rat base_coord() const { return Rat(w2, 2); }
  Rat alpha_coord() const { return Rat(a2, 2); }
  Rat delta_coord() const { return Rat(n2, 2); }
  bool is_zero() const { return w2 == 0 && a2 == 0 && n2 == 0; }
};

// Element x_c*c + x_u*alpha^vee + x_d*d, doubled coordinates.
struct CartanElement {
  long long c2 = 0;
  long long u2 = 0;
  long long d2 = 0;

  friend CartanElement operator+(const CartanElement& x,
                                 const CartanElement& y) {
    return {x.c2 + y.c2, x.u2 + y.u2, x.d2 + y.d2};
  }
  friend CartanElement operator-(const CartanElement& x,
                                 const CartanElement& y) {
    return {x.c2 - y.c2, x.u2 - y.u2, x.d2 - y.d2};
  }
  auto operator<=>(const CartanElement&) const = default;
};

// Element of the infinite dihedral Weyl group W = <s0, s1>, kept as a
// reduced word. With two involutive generators, a word is reduced exactly
// when no two adjacent letters agree, and the reduced form is unique.
class WeylWord {
public:
  WeylWord() = default;
  explicit WeylWord(std::vector<int> gens);

  static WeylWord identity() { return WeylWord(); }
  static WeylWord gen(int i) { return WeylWord({i}); }
  // Alternating word of the given length whose leftmost letter is `first`.
  static WeylWord alternating(int first, int length);

  const std::vector<int>& gens() const { return gens_; }
  int length() const { return static_cast<int>(gens_.size()); }
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  bool is_identity() const { return gens_.empty(); }

  WeylWord inverse() const;
  friend WeylWord operator*(const WeylWord& x, const WeylWord& y);
  bool operator==(const WeylWord&) const = default;

  std::string str() const;  // "e" or e.g. "s0s1s0"

private:
  std::vector<int> gens_;  // each 0 or 1, no two adjacent equal
};

// Enumerates all group elements of length <= max_len (identity first,
// then the two alternating words per length).
std::vector<WeylWord> weyl_elements_up_to(int max_len);

struct Algebra {
  AlgebraKind kind;

  Weight base;       // Lambda_0 resp. omega_0
  Weight alpha;      // finite simple root
  Weight delta;      // null root
  Weight alpha_i[2]; // simple roots alpha_0, alpha_1
  Weight rho;        // fixed representative with rho(alpha_i^vee) = 1
  Weight omega1;     // second fundamental weight (A2^(2) only; unused for A1)

  CartanElement c;         // canonical central element
  CartanElement alpha_vee; // finite coroot
  CartanElement d;         // scaling element
  CartanElement x[2];      // alpha_j(x_i) = delta_{ij}, zero c-component
                           // fixed as x0 = d and x1 = 1/2 a^vee + g0*d

  long long form_s;     // (base, delta) in the normalization above
  long long rho_level2; // 2*rho(c)

  // Twice the pairing mu(alpha_i^vee); exact integer in doubled coords.
  long long pair2(const Weight& mu, int i) const;

  // 4*(mu,nu) under the invariant form.
  long long form4(const Weight& mu, const Weight& nu) const;

  // mu evaluated on a Cartan element.
  Rat eval(const Weight& mu, const CartanElement& x) const;

  // Level mu(c) as a rational (doubled integer: mu.w2 / 2).
  Rat level(const Weight& mu) const { return Rat(mu.w2, 2); }

  bool is_integral(const Weight& mu) const;
  bool is_dominant(const Weight& mu) const;  // pairings >= 0, not nec. integral

  // Positive-root height of mu when mu lies in Z_+ alpha_0 + Z_+ alpha_1;
  // nullopt otherwise. (For A1: (c0,c1) with mu = c0 a0 + c1 a1.)
  std::optional<std::pair<long long, long long>> root_coords(
      const Weight& mu) const;

  std::string name() const { return to_string(kind); }
};

const Algebra& algebra(AlgebraKind kind);

// s_i mu = mu - mu(alpha_i^vee) alpha_i.
Weight reflect(const Algebra& g, int i, const Weight& mu);

// Left action of a reduced word: act(w1*w2, mu) = act(w1, act(w2, mu)).
Weight act(const Algebra& g, const WeylWord& w, const Weight& mu);

// Contragredient action on the Cartan: (w mu)(x) = mu(w^{-1} x).
CartanElement act_on_cartan(const Algebra& g, const WeylWord& w,
                            const CartanElement& x);

// A1^(1) translation T_{n alpha^vee}:
//   mu + n mu(c) alpha - [n mu(alpha^vee) + n^2 mu(c)] delta.
// Throws std::invalid_argument for A2^(2).
Weight translate_a1(const Algebra& g, long long n, const Weight& mu);

// The translation T_{n alpha^vee} as a reduced word ((s0 s1)^n for n >= 0).
WeylWord translation_word_a1(long long n);

struct DominantRep {
  Weight weight;
  WeylWord word;  // act(word, input) == weight
};

// Walks mu into the dominant chamber, reflecting at the lowest-index
// negative wall. Requires mu(c) > 0, or mu(c) = 0 with mu a multiple of
// delta; otherwise throws std::domain_error ("outside Tits cone" for
// negative level, non-termination guard for level zero).
DominantRep dominant_rep(const Algebra& g, const Weight& mu,
                         int step_budget = 200000);

// (p, q) with mu - nu = p alpha + q delta when the difference lies in the
// root lattice Q = Z alpha + Z delta; nullopt otherwise.
std::optional<std::pair<long long, long long>> root_lattice_diff(
    const Weight& mu, const Weight& nu);

}  // namespace kmt
