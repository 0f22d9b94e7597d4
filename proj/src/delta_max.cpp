#include "kmt/delta_max.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmt/multiplicity.hpp"

namespace kmt {

namespace {

void check_positive_level(const Algebra& g, const Weight& highest,
                          const char* who) {
  if (!g.is_integral(highest) || !g.is_dominant(highest))
    throw std::invalid_argument(std::string(who) +
                                ": weight must be dominant integral");
  if (highest.w2 <= 0)
    throw std::invalid_argument(std::string(who) +
                                ": positive level required");
}

}  // namespace

DeltaMaxSet delta_max_dominant_set(const Algebra& g, const Weight& highest) {
  check_positive_level(g, highest, "delta_max_dominant_set");
  std::vector<Weight> members;
  auto push_family = [&](const Weight& start, const Weight& step) {
    for (Weight w = start; g.is_dominant(w); w = w - step) members.push_back(w);
  };
  if (g.kind == AlgebraKind::A1_1) {
    push_family(highest, g.alpha);                    // Lambda - k alpha
    push_family(highest, g.delta - g.alpha);          // Lambda - l (d - a)
  } else {
    push_family(highest, g.alpha);                    // Lambda - j alpha
    push_family(highest, g.delta - 2 * g.alpha);      // Lambda - k a0
    push_family(highest + g.alpha - g.delta, g.delta - 2 * g.alpha);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {highest, std::move(members)};
}

long long delta_max_offset_closed_form(const Algebra& g, const Weight& highest,
                                       long long k) {
  if (g.kind != AlgebraKind::A1_1)
    throw std::invalid_argument(
        "delta_max_offset_closed_form: closed form is specific to a1_1");
  check_positive_level(g, highest, "delta_max_offset_closed_form");
  const long long m = highest.w2 / 2;
  const long long j = highest.a2;
  // k = q m + r with 0 <= r < m
  long long q = k / m;
  long long r = k - q * m;
  if (r < 0) {
    r += m;
    q -= 1;
  }
  long long n_r = r <= m - j ? -r : m - j - 2 * r;
  return n_r - q * (k + r + j);
}

std::optional<long long> delta_max_shift(const Algebra& g,
                                         const Weight& highest,
                                         const Weight& gamma) {
  check_positive_level(g, highest, "delta_max_shift");
  if (gamma.w2 != highest.w2)
    throw std::invalid_argument("delta_max_shift: level mismatch");
  if (!root_lattice_diff(gamma, highest))
    throw std::invalid_argument(
        "delta_max_shift: gamma not in Lambda + root lattice");
  Weight dom = dominant_rep(g, gamma).weight;
  DeltaMaxSet set = delta_max_dominant_set(g, highest);
  for (const Weight& mu : set.members) {
    if (mu.w2 == dom.w2 && mu.a2 == dom.a2) {
      long long d2 = mu.n2 - dom.n2;
      if (d2 % 2 != 0)
        throw std::logic_error("delta_max_shift: non-integral delta offset");
      return d2 / 2;
    }
  }
  return std::nullopt;
}

bool is_delta_maximal(const Algebra& g, const Weight& highest,
                      const Weight& gamma, long long depth) {
  check_positive_level(g, highest, "is_delta_maximal");
  if (gamma.w2 != highest.w2) return false;
  if (!root_lattice_diff(gamma, highest)) return false;
  // Truncation is judged on the dominant representative, which is the
  // closest point of the orbit to the highest weight.
  Weight dom = dominant_rep(g, gamma).weight;
  auto rc = g.root_coords(highest - dom);
  if (rc && rc->first + rc->second > depth)
    throw TruncationError("is_delta_maximal: beyond stated depth");
  return weight_multiplicity(g, highest, dom, depth) > 0 &&
         weight_multiplicity(g, highest, dom + g.delta, depth) == 0;
}

}  // namespace kmt
