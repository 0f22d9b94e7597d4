#include "kmt/schubert.hpp"

#include <stdexcept>

namespace kmt {

namespace {

const Algebra& alg() { return algebra(AlgebraKind::A1_1); }

int parabolic_index(Parabolic p) { return p == Parabolic::P0 ? 0 : 1; }

}  // namespace

WeylWord schubert_word(Parabolic p, int n) {
  if (n < 0) throw std::invalid_argument("schubert_word: negative degree");
  int last = parabolic_index(p);
  int first = (last + n + 1) % 2;
  return WeylWord::alternating(first, n);
}

long long cup_coefficient(Parabolic, int n, int m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("cup_coefficient: negative degree");
  if (m < n) std::swap(n, m);
  __int128 acc = 1;
  for (int i = 1; i <= n; ++i) {
    acc = acc * (m + i) / i;  // exact at each step: product of i consecutive
    if (acc > INT64_MAX)
      throw std::overflow_error("cup_coefficient: exceeds 64 bits");
  }
  return static_cast<long long>(acc);
}

long long deformed_exponent(Parabolic p, int u, int v, int w) {
  if (w != u + v)
    throw std::invalid_argument(
        "deformed_exponent: cohomological degrees must satisfy w = u + v");
  const Algebra& g = alg();
  const CartanElement& xp = g.x[parabolic_index(p)];
  // (y^{-1} rho)(x) = rho(y x); one rho-evaluation per word.
  auto shifted = [&](const WeylWord& y) {
    return g.eval(g.rho, act_on_cartan(g, y, xp));
  };
  Rat value = shifted(schubert_word(p, u)) + shifted(schubert_word(p, v)) -
              shifted(schubert_word(p, w)) - g.eval(g.rho, xp);
  return value.as_integer();
}

DeformedTerm deformed_product_coefficient(Parabolic p, int n, int m) {
  DeformedTerm t;
  t.coefficient = cup_coefficient(p, n, m);
  t.target = n + m;
  t.tau_exponent = deformed_exponent(p, n, m, n + m);
  return t;
}

std::vector<ConeInequality> generate_cone_inequalities(int len_bound) {
  std::vector<ConeInequality> out;
  for (Parabolic p : {Parabolic::P0, Parabolic::P1}) {
    for (int u = 0; u <= len_bound; ++u) {
      for (int v = 0; u + v <= len_bound; ++v) {
        DeformedTerm t = deformed_product_coefficient(p, u, v);
        if (t.coefficient_at_tau_zero() == 1) out.push_back({p, u, v, u + v});
      }
    }
  }
  return out;
}

Rat evaluate_cone_inequality(const ConeInequality& q, const Weight& lambda,
                             const Weight& mu, const Weight& nu) {
  const Algebra& g = alg();
  const CartanElement& xp = g.x[parabolic_index(q.p)];
  auto moved = [&](int degree) {
    return act_on_cartan(g, schubert_word(q.p, degree), xp);
  };
  return g.eval(lambda, moved(q.u)) + g.eval(mu, moved(q.v)) -
         g.eval(nu, moved(q.w));
}

}  // namespace kmt
