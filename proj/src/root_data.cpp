#include "kmt/root_data.hpp"

#include <stdexcept>

namespace kmt {

std::string to_string(AlgebraKind k) {
  return k == AlgebraKind::A1_1 ? "a1_1" : "a2_2";
}

WeylWord::WeylWord(std::vector<int> gens) : gens_(std::move(gens)) {
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] != 0 && gens_[i] != 1)
      throw std::invalid_argument("WeylWord: generator index must be 0 or 1");
  }
  // Cancel adjacent equal letters until reduced.
  std::vector<int> out;
  for (int s : gens_) {
    if (!out.empty() && out.back() == s)
      out.pop_back();
    else
      out.push_back(s);
  }
  gens_ = std::move(out);
}

WeylWord WeylWord::alternating(int first, int length) {
  std::vector<int> w;
  w.reserve(length);
  for (int i = 0; i < length; ++i) w.push_back((first + i) % 2);
  return WeylWord(std::move(w));
}

WeylWord WeylWord::inverse() const {
  std::vector<int> rev(gens_.rbegin(), gens_.rend());
  return WeylWord(std::move(rev));
}

WeylWord operator*(const WeylWord& x, const WeylWord& y) {
  std::vector<int> cat = x.gens_;
  cat.insert(cat.end(), y.gens_.begin(), y.gens_.end());
  return WeylWord(std::move(cat));
}

std::string WeylWord::str() const {
  if (gens_.empty()) return "e";
  std::string s;
  for (int g : gens_) s += g == 0 ? "s0" : "s1";
  return s;
}

std::vector<WeylWord> weyl_elements_up_to(int max_len) {
  std::vector<WeylWord> out;
  out.push_back(WeylWord::identity());
  for (int len = 1; len <= max_len; ++len) {
    out.push_back(WeylWord::alternating(0, len));
    out.push_back(WeylWord::alternating(1, len));
  }
  return out;
}

namespace {

Algebra make_a1_1() {
  Algebra g;
  g.kind = AlgebraKind::A1_1;
  g.base = {2, 0, 0};
  g.alpha = {0, 2, 0};
  g.delta = {0, 0, 2};
  g.alpha_i[0] = g.delta - g.alpha;
  g.alpha_i[1] = g.alpha;
  g.rho = {4, 1, 0};  // 2 Lambda_0 + 1/2 alpha
  g.omega1 = {2, 1, 0};
  g.c = {2, 0, 0};
  g.alpha_vee = {0, 2, 0};
  g.d = {0, 0, 2};
  g.x[0] = g.d;
  g.x[1] = {0, 1, 2};  // 1/2 alpha^vee + d
  g.form_s = 1;
  g.rho_level2 = 4;
  return g;
}

Algebra make_a2_2() {
  Algebra g;
  g.kind = AlgebraKind::A2_2;
  g.base = {2, 0, 0};
  g.alpha = {0, 2, 0};
  g.delta = {0, 0, 2};
  g.alpha_i[0] = g.delta - 2 * g.alpha;
  g.alpha_i[1] = g.alpha;
  g.rho = {3, 1, 0};   // 3/2 omega_0 + 1/2 alpha
  g.omega1 = {1, 1, 0};
  g.c = {2, 0, 0};
  g.alpha_vee = {0, 2, 0};
  g.d = {0, 0, 2};
  g.x[0] = g.d;
  g.x[1] = {0, 1, 4};  // 1/2 alpha^vee + 2 d
  g.form_s = 4;
  g.rho_level2 = 3;
  return g;
}

}  // namespace

const Algebra& algebra(AlgebraKind kind) {
  static const Algebra a1 = make_a1_1();
  static const Algebra a2 = make_a2_2();
  return kind == AlgebraKind::A1_1 ? a1 : a2;
}

long long Algebra::pair2(const Weight& mu, int i) const {
  if (i == 1) return 2 * mu.a2;
  // alpha_0^vee = c - alpha^vee (A1) or c - 1/2 alpha^vee (A2)
  return kind == AlgebraKind::A1_1 ? mu.w2 - 2 * mu.a2 : mu.w2 - mu.a2;
}

long long Algebra::form4(const Weight& mu, const Weight& nu) const {
  long long cross = mu.w2 * nu.n2 + mu.n2 * nu.w2;
  return 2 * mu.a2 * nu.a2 + form_s * cross;
}

Rat Algebra::eval(const Weight& mu, const CartanElement& x) const {
  return Rat(mu.w2 * x.c2 + 2 * mu.a2 * x.u2 + mu.n2 * x.d2, 4);
}

bool Algebra::is_integral(const Weight& mu) const {
  return pair2(mu, 0) % 2 == 0 && pair2(mu, 1) % 2 == 0;
}

bool Algebra::is_dominant(const Weight& mu) const {
  return pair2(mu, 0) >= 0 && pair2(mu, 1) >= 0;
}

std::optional<std::pair<long long, long long>> Algebra::root_coords(
    const Weight& mu) const {
  if (mu.w2 != 0) return std::nullopt;
  // mu = c0 alpha_0 + c1 alpha_1 with alpha_0 = delta - h alpha, h = 1 or 2.
  long long h = kind == AlgebraKind::A1_1 ? 1 : 2;
  if (mu.n2 % 2 != 0) return std::nullopt;
  long long c0 = mu.n2 / 2;
  long long a_rest = mu.a2 + 2 * h * c0;  // 2*c1
  if (a_rest % 2 != 0) return std::nullopt;
  long long c1 = a_rest / 2;
  if (c0 < 0 || c1 < 0) return std::nullopt;
  return std::make_pair(c0, c1);
}

Weight reflect(const Algebra& g, int i, const Weight& mu) {
  long long p2 = g.pair2(mu, i);
  // mu - mu(a_i^vee) a_i, with doubled coordinates throughout.
  Weight ai = g.alpha_i[i];
  return {mu.w2 - p2 * ai.w2 / 2, mu.a2 - p2 * ai.a2 / 2,
          mu.n2 - p2 * ai.n2 / 2};
}

Weight act(const Algebra& g, const WeylWord& w, const Weight& mu) {
  Weight v = mu;
  const auto& gens = w.gens();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    v = reflect(g, *it, v);
  return v;
}

namespace {

CartanElement reflect_cartan(const Algebra& g, int i, const CartanElement& x) {
  // s_i x = x - alpha_i(x) alpha_i^vee.
  // alpha_i(x) doubled: a1(x)*2 = 2*u2 ; a0(x)*2 = d2 - h*2*u2.
  long long h = g.kind == AlgebraKind::A1_1 ? 1 : 2;
  if (i == 1) {
    return {x.c2, x.u2 - 2 * x.u2, x.d2};  // negate alpha^vee coordinate
  }
  long long p2 = x.d2 - 2 * h * x.u2;  // 2 * alpha_0(x)
  // alpha_0^vee = c - (1/h') alpha^vee with h' = 1 (A1), 2 (A2).
  if (g.kind == AlgebraKind::A1_1)
    return {x.c2 - p2, x.u2 + p2, x.d2};
  if (p2 % 2 != 0)
    throw std::domain_error("act_on_cartan: coordinate leaves (1/2)Z lattice");
  return {x.c2 - p2, x.u2 + p2 / 2, x.d2};
}

}  // namespace

CartanElement act_on_cartan(const Algebra& g, const WeylWord& w,
                            const CartanElement& x) {
  CartanElement v = x;
  const auto& gens = w.gens();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    v = reflect_cartan(g, *it, v);
  return v;
}

Weight translate_a1(const Algebra& g, long long n, const Weight& mu) {
  if (g.kind != AlgebraKind::A1_1)
    throw std::invalid_argument(
        "translate_a1: translation formula is specific to a1_1");
  // mu + n mu(c) alpha - [n mu(alpha^vee) + n^2 mu(c)] delta
  long long level2 = mu.w2;
  long long pair_avee2 = 2 * mu.a2;  // 2 * mu(alpha^vee)
  return {mu.w2, mu.a2 + n * level2, mu.n2 - n * pair_avee2 - n * n * level2};
}

WeylWord translation_word_a1(long long n) {
  int len = static_cast<int>(2 * (n < 0 ? -n : n));
  return WeylWord::alternating(n >= 0 ? 0 : 1, len);
}

DominantRep dominant_rep(const Algebra& g, const Weight& mu, int step_budget) {
  if (mu.w2 < 0)
    throw std::domain_error("dominant_rep: negative level, outside Tits cone");
  if (mu.w2 == 0) {
    if (mu.a2 == 0) return {mu, WeylWord::identity()};
    throw std::domain_error(
        "dominant_rep: level-zero weight off the delta line; chamber walk "
        "need not terminate");
  }
  Weight v = mu;
  std::vector<int> word;
  for (int step = 0; step < step_budget; ++step) {
    int i = -1;
    if (g.pair2(v, 0) < 0)
      i = 0;
    else if (g.pair2(v, 1) < 0)
      i = 1;
    if (i < 0) {
      std::vector<int> rev(word.rbegin(), word.rend());
      return {v, WeylWord(std::move(rev))};
    }
    v = reflect(g, i, v);
    word.push_back(i);
  }
  throw std::domain_error(
      "dominant_rep: outside Tits cone (step budget exceeded)");
}

std::optional<std::pair<long long, long long>> root_lattice_diff(
    const Weight& mu, const Weight& nu) {
  Weight d = mu - nu;
  if (d.w2 != 0) return std::nullopt;
  if (d.a2 % 2 != 0 || d.n2 % 2 != 0) return std::nullopt;
  return std::make_pair(d.a2 / 2, d.n2 / 2);
}

}  // namespace kmt
