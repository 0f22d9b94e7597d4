#include "kmt/tensor.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmt/delta_max.hpp"

namespace kmt {

namespace {

long long rat_floor(const Rat& r) {
  long long q = r.num() / r.den();
  if (r.num() < 0 && r.num() % r.den() != 0) --q;
  return q;
}

long long rat_ceil(const Rat& r) { return -rat_floor(-r); }

long long floor_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

void check_factor_levels(const Weight& left, const Weight& right,
                         const char* who) {
  if (left.w2 <= 0 || right.w2 <= 0)
    throw std::invalid_argument(std::string(who) +
                                ": both factors need positive level");
}

void check_component(const Algebra& g, const Weight& component,
                     const char* who) {
  if (!g.is_integral(component) || !g.is_dominant(component))
    throw std::invalid_argument(std::string(who) +
                                ": component must be dominant integral");
}

// k-period of the dominant orbit of component + rho: the translation part
// of W shifts the alpha-coordinate by level (A1) resp. twice the level (A2)
// per step.
long long orbit_period(const Algebra& g, const Weight& target) {
  return g.kind == AlgebraKind::A1_1 ? target.w2 / 2 : target.w2;
}

// Support term through left + k alpha, if any.
std::optional<SupportTerm> term_at_offset(const Algebra& g,
                                          const Weight& target,
                                          const Weight& left,
                                          const Weight& right, long long k) {
  Weight gamma = left + k * g.alpha;
  auto n = delta_max_shift(g, left, gamma);
  if (!n) return std::nullopt;
  Weight lambda = gamma + *n * g.delta;
  DominantRep rep = dominant_rep(g, lambda + right + g.rho);
  // Reflection-fixed orbit points contribute a vanishing alternating sum.
  if (g.pair2(rep.weight, 0) == 0 || g.pair2(rep.weight, 1) == 0)
    return std::nullopt;
  if (rep.weight.w2 != target.w2 || rep.weight.a2 != target.a2)
    return std::nullopt;
  long long d2 = rep.weight.n2 - target.n2;
  if (d2 % 2 != 0)
    throw std::logic_error("branching_support: non-integral delta shift");
  return SupportTerm{lambda, rep.word.inverse(), d2 / 2, rep.word.sign()};
}

// Upper bound for the shift of a term through left + k alpha, valid for
// every k: a downward parabola obtained from the invariant form (norms are
// W-invariant, and matching the dominant orbit of `target` pins the shift
// to a norm difference).
struct ShiftBound {
  Rat a, b, c;  // S_bound(k) = a k^2 + b k + c,  a < 0
  Rat at(long long k) const { return (a * Rat(k) + b) * Rat(k) + c; }
  Rat vertex() const { return -b / (Rat(2) * a); }
};

ShiftBound shift_bound(const Algebra& g, const Weight& target,
                       const Weight& left, const Weight& right) {
  const Weight X = left + right + g.rho;
  const Rat s(g.form_s);
  const Rat ell = g.level(left);
  const Rat D = s * Rat(X.w2, 2);          // (X, delta), positive
  const Rat inv_d = Rat(1) / D;
  const Rat inv_sl = Rat(1) / (s * ell);
  const Rat a_left = left.alpha_coord();

  // delta offset of the delta-maximal weight over alpha-coordinate t obeys
  // n <= C_max - t^2/(s*ell), from |w nu|^2 = |nu|^2 over the dominant set.
  Rat c_max;
  bool first = true;
  for (const Weight& nu : delta_max_dominant_set(g, left).members) {
    Rat cand = Rat(nu.n2 - left.n2, 2) + nu.alpha_coord() * nu.alpha_coord() * inv_sl;
    if (first || cand > c_max) c_max = cand;
    first = false;
  }

  ShiftBound sb;
  sb.a = inv_d - inv_sl;  // negative: level(X) > level(left)
  sb.b = Rat(X.a2) * inv_d - Rat(2) * a_left * inv_sl;
  Rat c0 = Rat(g.form4(X, X) - g.form4(target, target), 4) / (Rat(2) * D);
  sb.c = c0 + c_max - a_left * a_left * inv_sl;
  if (!(sb.a < Rat(0)))
    throw std::logic_error("branching_support: window bound degenerate");
  return sb;
}

}  // namespace

std::vector<SupportTerm> branching_support(const Algebra& g,
                                           const Weight& component,
                                           const Weight& left,
                                           const Weight& right,
                                           long long min_shift) {
  check_component(g, component, "branching_support");
  check_factor_levels(left, right, "branching_support");
  std::vector<SupportTerm> terms;
  if (component.w2 != left.w2 + right.w2) return terms;
  if (!root_lattice_diff(left + right, component)) return terms;

  const Weight target = component + g.rho;
  const ShiftBound sb = shift_bound(g, target, left, right);
  const long long margin = orbit_period(g, target);
  const Rat ms{min_shift};

  long long hi = rat_ceil(sb.vertex());
  while (sb.at(hi) >= ms) ++hi;
  long long lo = rat_floor(sb.vertex());
  while (sb.at(lo) >= ms) --lo;

  for (long long k = lo - margin; k <= hi + margin; ++k) {
    auto term = term_at_offset(g, target, left, right, k);
    if (term && term->shift >= min_shift) terms.push_back(*term);
  }
  return terms;
}

SupportTerm branching_support_closed_form(const Algebra& g,
                                          const Weight& component,
                                          const Weight& left,
                                          const Weight& right, long long k) {
  if (g.kind != AlgebraKind::A1_1)
    throw std::invalid_argument(
        "branching_support_closed_form: closed form is specific to a1_1");
  check_component(g, component, "branching_support_closed_form");
  check_factor_levels(left, right, "branching_support_closed_form");
  if (component.w2 != left.w2 + right.w2)
    throw std::invalid_argument(
        "branching_support_closed_form: component level mismatch");
  const long long j = component.a2, jp = left.a2, jpp = right.a2;
  const long long m = component.w2 / 2;
  const long long big_m = m + 2;
  if ((j - jp - jpp) % 2 != 0 ||
      (left.n2 + right.n2 - component.n2) % 2 != 0)
    throw std::invalid_argument(
        "branching_support_closed_form: factors and component differ by a "
        "non-lattice vector");
  const long long cap_j = (j - jp - jpp) / 2;        // translation class
  const long long hook = (j + jp + jpp) / 2 + 1;     // reflection class
  const long long delta_adjust = (left.n2 + right.n2 - component.n2) / 2;

  WeylWord v;
  if (floor_mod(k - cap_j, big_m) == 0) {
    v = translation_word_a1((k - cap_j) / big_m);
  } else if (floor_mod(k + hook, big_m) == 0) {
    v = WeylWord::gen(1) * translation_word_a1(-(k + hook) / big_m);
  } else {
    throw std::invalid_argument(
        "branching_support_closed_form: k outside both admissible residue "
        "classes mod level+2");
  }
  long long nk = delta_max_offset_closed_form(g, left, k);
  long long shift = nk + (k - cap_j) * (k + hook) / big_m + delta_adjust;
  Weight lambda = left + k * g.alpha + nk * g.delta;
  return {lambda, v, shift, v.sign()};
}

std::optional<long long> delta_max_component(const Algebra& g,
                                             const Weight& left,
                                             const Weight& right,
                                             const Weight& through) {
  check_factor_levels(left, right, "delta_max_component");
  auto n1 = delta_max_shift(g, left, through - right);
  auto n2 = delta_max_shift(g, right, through - left);
  if (!n1 || !n2) return std::nullopt;
  return std::min(*n1, *n2);
}

DeltaString branching_string(const Algebra& g, const Weight& component,
                             const Weight& left, const Weight& right,
                             long long depth) {
  check_component(g, component, "branching_string");
  if (depth < 0) throw std::invalid_argument("branching_string: depth < 0");
  DeltaString out;
  out.base = component;

  if (left.w2 == 0 || right.w2 == 0) {
    // One factor is the one-dimensional L(t delta).
    auto d = root_lattice_diff(left + right, component);
    if (!d || d->first != 0) return out;
    out.top = d->second;
    out.coeffs.assign(static_cast<size_t>(depth) + 1, 0);
    out.coeffs[0] = 1;
    return out;
  }
  if (component.w2 != left.w2 + right.w2) return out;
  if (!root_lattice_diff(left + right, component)) return out;

  long long cutoff;
  if (auto n = delta_max_component(g, left, right, component)) {
    cutoff = *n - depth;
  } else {
    // No delta shift of component - right meets L(left): probe downward.
    bool found = false;
    cutoff = 0;
    for (int probe = 0; probe < 8; ++probe) {
      if (!branching_support(g, component, left, right, cutoff).empty()) {
        found = true;
        break;
      }
      cutoff -= 16;
    }
    if (!found) return out;
    cutoff -= depth;
  }

  for (int pass = 0; pass < 4; ++pass) {
    auto terms = branching_support(g, component, left, right, cutoff);
    if (terms.empty()) return out;
    long long max_s = terms.front().shift;
    for (const auto& t : terms) max_s = std::max(max_s, t.shift);
    std::vector<long long> acc(static_cast<size_t>(max_s - cutoff) + 1, 0);
    for (const auto& t : terms) {
      DeltaString ds = delta_string_of(g, left, t.lambda, t.shift - cutoff);
      if (ds.empty() || ds.top != 0)
        throw std::logic_error(
            "branching_string: support weight is not delta-maximal");
      for (long long i = 0; i <= t.shift - cutoff; ++i)
        acc[static_cast<size_t>(max_s - t.shift + i)] += t.sign * ds.coeffs[i];
    }
    size_t first = 0;
    while (first < acc.size() && acc[first] == 0) ++first;
    if (first == acc.size()) return out;  // everything cancels
    long long top = max_s - static_cast<long long>(first);
    if (top - depth < cutoff) {
      cutoff = top - depth;
      continue;
    }
    out.top = top;
    out.coeffs.reserve(static_cast<size_t>(depth) + 1);
    for (long long kk = 0; kk <= depth; ++kk) {
      long long v = acc[first + static_cast<size_t>(kk)];
      if (v < 0)
        throw std::logic_error(
            "branching_string: negative outer multiplicity (unitarity "
            "violated; implementation bug)");
      out.coeffs.push_back(v);
    }
    return out;
  }
  throw std::logic_error("branching_string: cutoff failed to stabilize");
}

namespace {

std::vector<Weight> component_reps(const Algebra& g, const Weight& left,
                                   const Weight& right) {
  const long long m2 = left.w2 + right.w2;
  const long long n2 = left.n2 + right.n2;
  std::vector<Weight> reps;
  for (long long a2 = floor_mod(left.a2 + right.a2, 2);; a2 += 2) {
    Weight rep{m2, a2, n2};
    if (!g.is_dominant(rep)) break;
    if (g.is_integral(rep)) reps.push_back(rep);
  }
  return reps;
}

}  // namespace

TensorDecomposition decompose_tensor(const Algebra& g, const Weight& left,
                                     const Weight& right, long long depth) {
  if (!g.is_integral(left) || !g.is_dominant(left) || !g.is_integral(right) ||
      !g.is_dominant(right))
    throw std::invalid_argument(
        "decompose_tensor: factors must be dominant integral");
  TensorDecomposition out;
  out.left = left;
  out.right = right;
  out.depth = depth;

  if (left.w2 == 0 || right.w2 == 0) {
    Weight total = left + right;
    Weight rep{total.w2, total.a2, 0};
    std::vector<long long> coeffs(static_cast<size_t>(depth) + 1, 0);
    coeffs[0] = 1;
    out.components.push_back({rep, 0, std::move(coeffs)});
    return out;
  }
  for (const Weight& rep : component_reps(g, left, right)) {
    DeltaString s = branching_string(g, rep, left, right, depth);
    if (s.empty()) continue;
    long long top_rel = s.top;  // rep carries the factors' delta-coordinate
    if (top_rel < -depth) continue;
    Weight display{rep.w2, rep.a2, 0};
    out.components.push_back({display, top_rel, s.coeffs});
  }
  return out;
}

std::vector<long long> predicted_max_locations(const Algebra& g,
                                               const Weight& component,
                                               const Weight& left,
                                               const Weight& right, int sign) {
  check_component(g, component, "predicted_max_locations");
  check_factor_levels(left, right, "predicted_max_locations");
  if (component.w2 != left.w2 + right.w2 ||
      !root_lattice_diff(left + right, component))
    throw std::invalid_argument(
        "predicted_max_locations: component not congruent to the product");
  const long long j = component.a2, jp = left.a2, jpp = right.a2;
  if (sign == 1) return {(j - jp - jpp) / 2};
  if (sign == -1) {
    long long k0 = -(j + jp + jpp) / 2 - 1;
    return {k0, k0 + orbit_period(g, component + g.rho)};
  }
  throw std::invalid_argument("predicted_max_locations: sign must be +-1");
}

SignedMaxima signed_maxima(const Algebra& g, const Weight& component,
                           const Weight& left, const Weight& right) {
  check_component(g, component, "signed_maxima");
  check_factor_levels(left, right, "signed_maxima");
  SignedMaxima out;
  if (component.w2 != left.w2 + right.w2 ||
      !root_lattice_diff(left + right, component))
    return out;

  const Weight target = component + g.rho;
  const long long period = orbit_period(g, target);

  // Seed each sign with any term: the cutoff anchored at a found term makes
  // the later enumeration complete for that sign's maximum.
  std::optional<long long> seed_plus, seed_minus;
  auto offer = [&](const std::optional<SupportTerm>& t) {
    if (!t) return;
    auto& slot = t->sign > 0 ? seed_plus : seed_minus;
    if (!slot || t->shift > *slot) slot = t->shift;
  };
  for (int s : {1, -1})
    for (long long k : predicted_max_locations(g, component, left, right, s))
      offer(term_at_offset(g, target, left, right, k));
  const long long cap = 16 * period + 64;
  for (long long r = 0; r <= cap && (!seed_plus || !seed_minus); ++r) {
    offer(term_at_offset(g, target, left, right, r));
    if (r > 0) offer(term_at_offset(g, target, left, right, -r));
  }
  if (!seed_plus && !seed_minus) return out;

  long long cutoff = seed_plus ? *seed_plus : *seed_minus;
  if (seed_plus && seed_minus) cutoff = std::min(*seed_plus, *seed_minus);
  for (const auto& t :
       branching_support(g, component, left, right, cutoff)) {
    long long k = (t.lambda.a2 - left.a2) / 2;
    bool plus = t.sign > 0;
    bool& seen = plus ? out.plus_nonempty : out.minus_nonempty;
    long long& best = plus ? out.max_plus : out.max_minus;
    auto& arg = plus ? out.argmax_plus : out.argmax_minus;
    if (!seen || t.shift > best) {
      seen = true;
      best = t.shift;
      arg.assign(1, k);
    } else if (t.shift == best) {
      arg.push_back(k);
    }
  }
  std::sort(out.argmax_plus.begin(), out.argmax_plus.end());
  std::sort(out.argmax_minus.begin(), out.argmax_minus.end());
  return out;
}

TieCheck non_cancellation_check(const Algebra& g, const Weight& component,
                                const Weight& left, const Weight& right) {
  TieCheck out;
  SignedMaxima lr = signed_maxima(g, component, left, right);
  SignedMaxima rl = signed_maxima(g, component, right, left);
  out.tie_lr = lr.plus_nonempty && lr.minus_nonempty &&
               lr.max_plus == lr.max_minus;
  out.tie_rl = rl.plus_nonempty && rl.minus_nonempty &&
               rl.max_plus == rl.max_minus;
  return out;
}

Rat coset_central_charge(const Algebra& g, const Rat& level_left,
                         const Rat& level_right) {
  if (g.kind != AlgebraKind::A1_1)
    throw std::invalid_argument(
        "coset_central_charge: twisted normalization not defined here");
  if (!(level_left > Rat(0)) || !(level_right > Rat(0)))
    throw std::invalid_argument("coset_central_charge: levels must be > 0");
  const Rat dim(3), dual_cox(2);
  Rat total = level_left + level_right;
  return dim * (level_left / (level_left + dual_cox) +
                level_right / (level_right + dual_cox) -
                total / (total + dual_cox));
}

StringVerdict validate_virasoro_string(const std::vector<long long>& coeffs,
                                       TopStatus top,
                                       const std::optional<Rat>& charge) {
  auto fail = [](int idx, std::string why) {
    return StringVerdict{false, idx, std::move(why)};
  };
  if (coeffs.empty()) return {};
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] < 0) return fail(static_cast<int>(i), "negative coefficient");
  const long long c0 = coeffs[0];
  if (c0 <= 0) return fail(0, "top coefficient must be positive");

  if (top == TopStatus::Vacuum && charge && charge->is_zero()) {
    if (c0 != 1) return fail(0, "one-dimensional module must start at 1");
    for (size_t i = 1; i < coeffs.size(); ++i)
      if (coeffs[i] != 0)
        return fail(static_cast<int>(i),
                    "one-dimensional module has no lower states");
    return {};
  }
  for (size_t i = 2; i < coeffs.size(); ++i)
    if (coeffs[i] < c0)
      return fail(static_cast<int>(i), "dips below the top multiplicity");
  if (top == TopStatus::NonVacuum && coeffs.size() > 1 && coeffs[1] < c0)
    return fail(1, "missing level-one states below a non-vacuum top");
  if (top == TopStatus::Vacuum && charge && !charge->is_zero() &&
      coeffs.size() > 1 && coeffs[1] != 0)
    return fail(1, "level-one state above a vacuum top");
  return {};
}

}  // namespace kmt
