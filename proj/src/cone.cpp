#include "kmt/cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "kmt/delta_max.hpp"
#include "kmt/multiplicity.hpp"
#include "kmt/tensor.hpp"

namespace kmt {

bool weight_in_module(const Algebra& g, const Weight& highest,
                      const Weight& gamma) {
  if (!g.is_integral(highest) || !g.is_dominant(highest) || highest.w2 <= 0)
    throw std::invalid_argument(
        "weight_in_module: highest weight must be dominant integral of "
        "positive level");
  if (gamma.w2 != highest.w2)
    throw std::invalid_argument("weight_in_module: level mismatch");
  if (!root_lattice_diff(gamma, highest)) return false;
  Weight dom = dominant_rep(g, gamma).weight;
  return g.root_coords(highest - dom).has_value();
}

ConeReport cone_membership(const Algebra& g, const Weight& lambda,
                           const Weight& mu, const Weight& nu) {
  for (const Weight* w : {&lambda, &mu, &nu})
    if (!g.is_integral(*w) || !g.is_dominant(*w))
      throw std::invalid_argument(
          "cone_membership: weights must be dominant integral");
  if (lambda.w2 <= 0 || mu.w2 <= 0)
    throw std::invalid_argument(
        "cone_membership: tensor factors of level zero are W-invariant and "
        "outside the criterion");
  ConeReport r;
  r.lambda = lambda;
  r.mu = mu;
  r.nu = nu;
  r.parity_ok = root_lattice_diff(lambda + mu, nu).has_value();
  if (!r.parity_ok) return r;
  r.member =
      weight_in_module(g, lambda, nu - mu) && weight_in_module(g, mu, nu - lambda);
  r.n1 = delta_max_shift(g, lambda, nu - mu);
  r.n2 = delta_max_shift(g, mu, nu - lambda);
  if (r.n1 && r.n2) r.n_tilde = std::min(*r.n1, *r.n2);
  return r;
}

std::vector<AuditEntry> inequality_audit(const Algebra& g,
                                         const Weight& lambda,
                                         const Weight& mu, const Weight& nu,
                                         int len_bound) {
  std::vector<AuditEntry> out;
  for (const WeylWord& w : weyl_elements_up_to(len_bound)) {
    for (int i = 0; i < 2; ++i) {
      CartanElement moved = act_on_cartan(g, w, g.x[i]);
      Rat at_moved_mu = g.eval(mu, moved);
      Rat at_moved_nu = g.eval(nu, moved);
      Rat at_moved_lambda = g.eval(lambda, moved);
      out.push_back(
          {w, i, 0, g.eval(lambda, g.x[i]) + at_moved_mu - at_moved_nu});
      out.push_back({w, i, 1, at_moved_lambda + g.eval(mu, g.x[i]) - at_moved_nu});
    }
  }
  return out;
}

bool saturation_witness(const Algebra& g, const Weight& lambda,
                        const Weight& mu, const Weight& nu, long long d0,
                        long long depth) {
  if (d0 < 1)
    throw std::invalid_argument("saturation_witness: d0 must be >= 1");
  ConeReport base = cone_membership(g, lambda, mu, nu);
  if (!base.member)
    throw std::invalid_argument(
        "saturation_witness: triple is not in the saturated cone");
  Weight sl = d0 * lambda, sm = d0 * mu, sn = d0 * nu;
  // Component family through d0*nu, with the factors' delta-coordinate.
  Weight comp{sn.w2, sn.a2, sl.n2 + sm.n2};
  DeltaString s = branching_string(g, comp, sl, sm, depth);
  if (s.empty()) return false;
  long long diff2 = sn.n2 - comp.n2;
  if (diff2 % 2 != 0)
    throw std::logic_error("saturation_witness: non-integral delta offset");
  long long idx = s.top - diff2 / 2;
  if (idx < 0) return false;
  if (idx > depth)
    throw TruncationError(
        "saturation_witness: required offset exceeds computed depth");
  return s.coeffs[static_cast<size_t>(idx)] > 0;
}

ScanReport saturation_scan(const Algebra& g, const Rat& level_bound,
                           const std::vector<long long>& d0_list,
                           long long depth, int threads) {
  if (d0_list.empty())
    throw std::invalid_argument("saturation_scan: empty d0 list");
  ScanReport report;
  // Dominant integral weights of positive level <= bound, delta-coord 0.
  std::vector<Weight> factors;
  for (long long w2 = 1; Rat(w2, 2) <= level_bound; ++w2) {
    long long step = g.kind == AlgebraKind::A1_1 ? 1 : 2;
    long long a_start = g.kind == AlgebraKind::A1_1 ? 0 : (w2 % 2);
    for (long long a2 = a_start;; a2 += step) {
      Weight w{w2, a2, 0};
      if (!g.is_dominant(w)) break;
      if (g.is_integral(w)) factors.push_back(w);
    }
  }

  long long max_d0 = *std::max_element(d0_list.begin(), d0_list.end());
  long long tspan = depth / max_d0;

  struct Task {
    Weight lambda, mu, nu;
    long long d0;
  };
  std::vector<Task> tasks;
  for (size_t i = 0; i < factors.size(); ++i) {
    for (size_t j = i; j < factors.size(); ++j) {
      const Weight &lambda = factors[i], &mu = factors[j];
      Weight total = lambda + mu;
      for (long long a2 = total.a2 % 2;; a2 += 2) {
        Weight nu_bar{total.w2, a2, 0};
        if (!g.is_dominant(nu_bar)) break;
        if (!g.is_integral(nu_bar)) continue;
        if (!root_lattice_diff(total, nu_bar)) continue;
        auto n0 = delta_max_component(g, lambda, mu, nu_bar);
        if (!n0) continue;
        ++report.triples_checked;
        for (long long t = *n0 - tspan; t <= *n0; ++t) {
          Weight nu = nu_bar + t * g.delta;
          for (long long d0 : d0_list) tasks.push_back({lambda, mu, nu, d0});
        }
      }
    }
  }

  std::vector<char> witness_ok(tasks.size(), 0);
  auto run_range = [&](size_t lo, size_t hi) {
    for (size_t idx = lo; idx < hi; ++idx) {
      const Task& t = tasks[idx];
      witness_ok[idx] =
          saturation_witness(g, t.lambda, t.mu, t.nu, t.d0, depth) ? 1 : 0;
    }
  };
  if (threads <= 1 || tasks.size() < 2) {
    run_range(0, tasks.size());
  } else {
    size_t nthreads = std::min<size_t>(threads, tasks.size());
    std::vector<std::thread> pool;
    size_t chunk = (tasks.size() + nthreads - 1) / nthreads;
    for (size_t t = 0; t < nthreads; ++t) {
      size_t lo = t * chunk, hi = std::min(tasks.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  report.witnesses_checked = static_cast<long long>(tasks.size());
  for (size_t idx = 0; idx < tasks.size(); ++idx)
    if (!witness_ok[idx])
      report.counterexamples.push_back(
          {tasks[idx].lambda, tasks[idx].mu, tasks[idx].nu, tasks[idx].d0});
  return report;
}

}  // namespace kmt
