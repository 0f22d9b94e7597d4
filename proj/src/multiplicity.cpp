#include "kmt/multiplicity.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "kmt/delta_max.hpp"

namespace kmt {

std::vector<std::pair<Weight, long long>> positive_roots(
    const Algebra& g, long long max_height) {
  std::vector<std::pair<Weight, long long>> roots;
  const Weight alpha = g.alpha;
  const Weight delta = g.delta;
  if (g.kind == AlgebraKind::A1_1) {
    // alpha + n delta (height 2n+1), -alpha + n delta (2n-1), n delta (2n)
    for (long long n = 0; 2 * n + 1 <= max_height; ++n)
      roots.push_back({alpha + n * delta, 1});
    for (long long n = 1; 2 * n - 1 <= max_height; ++n)
      roots.push_back({-1 * alpha + n * delta, 1});
    for (long long n = 1; 2 * n <= max_height; ++n)
      roots.push_back({n * delta, 1});
  } else {
    // alpha + n delta (3n+1), -alpha + n delta (3n-1),
    // 2 alpha + (2n+1) delta (6n+5), -2 alpha + (2n+1) delta (6n+1),
    // n delta (3n)
    for (long long n = 0; 3 * n + 1 <= max_height; ++n)
      roots.push_back({alpha + n * delta, 1});
    for (long long n = 1; 3 * n - 1 <= max_height; ++n)
      roots.push_back({-1 * alpha + n * delta, 1});
    for (long long n = 0; 6 * n + 5 <= max_height; ++n)
      roots.push_back({2 * alpha + (2 * n + 1) * delta, 1});
    for (long long n = 0; 6 * n + 1 <= max_height; ++n)
      roots.push_back({-2 * alpha + (2 * n + 1) * delta, 1});
    for (long long n = 1; 3 * n <= max_height; ++n)
      roots.push_back({n * delta, 1});
  }
  return roots;
}

namespace {

long long cache_limit() {
  static long long limit = [] {
    if (const char* env = std::getenv("KMT_CACHE_LIMIT")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return 1LL << 22;
  }();
  return limit;
}

struct PairHash {
  size_t operator()(const std::pair<long long, long long>& p) const {
    return std::hash<long long>()(p.first * 1000003LL + p.second);
  }
};

// Freudenthal engine for one (algebra, highest weight).
class FreudenthalTable {
public:
  FreudenthalTable(const Algebra& g, Weight highest)
      : g_(g), highest_(highest) {}

  long long multiplicity(const Weight& mu) {
    // Weights of the one-dimensional L(t delta).
    if (highest_.w2 == 0) return mu == highest_ ? 1 : 0;
    auto rc = g_.root_coords(highest_ - mu);
    if (!rc) {
      // Transport into the dominant chamber; weights are W-stable and the
      // dominant representative only gets closer to the highest weight.
      if (mu.w2 != highest_.w2) return 0;
      Weight dom = dominant_rep(g_, mu).weight;
      rc = g_.root_coords(highest_ - dom);
      if (!rc) return 0;
      return dominant_multiplicity(*rc);
    }
    if (!g_.is_dominant(mu)) {
      Weight dom = dominant_rep(g_, mu).weight;
      rc = g_.root_coords(highest_ - dom);
      if (!rc) return 0;
    }
    return dominant_multiplicity(*rc);
  }

private:
  using Key = std::pair<long long, long long>;

  long long dominant_multiplicity(const Key& key) {
    if (key.first == 0 && key.second == 0) return 1;
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    long long value = compute(key);
    std::lock_guard lock(mutex_);
    if (static_cast<long long>(memo_.size()) >= cache_limit()) memo_.clear();
    memo_.emplace(key, value);
    return value;
  }

  long long compute(const Key& key) {
    const long long height = key.first + key.second;
    const Weight mu =
        highest_ - key.first * g_.alpha_i[0] - key.second * g_.alpha_i[1];
    ensure_roots(height);

    __int128 acc = 0;
    for (const auto& [beta, beta_mult] : roots_) {
      auto bc = g_.root_coords(beta);
      long long bh = bc->first + bc->second;
      if (bh > height) break;  // roots_ sorted by height
      for (long long k = 1; k * bh <= height; ++k) {
        Weight nu = mu + k * beta;
        if (!g_.root_coords(highest_ - nu)) break;
        long long m = multiplicity(nu);
        if (m != 0)
          acc += static_cast<__int128>(beta_mult) * g_.form4(nu, beta) * m;
      }
    }
    Weight top_rho = highest_ + g_.rho;
    Weight mu_rho = mu + g_.rho;
    long long den4 =
        g_.form4(top_rho, top_rho) - g_.form4(mu_rho, mu_rho);
    if (den4 <= 0)
      throw std::logic_error("freudenthal: nonpositive denominator");
    __int128 num = 2 * acc;
    if (num % den4 != 0)
      throw std::logic_error("freudenthal: non-integer multiplicity");
    __int128 m = num / den4;
    if (m < 0 || m > INT64_MAX)
      throw std::overflow_error("freudenthal: multiplicity out of range");
    return static_cast<long long>(m);
  }

  void ensure_roots(long long height) {
    std::lock_guard lock(mutex_);
    if (height <= roots_height_) return;
    long long target = std::max(height, 2 * roots_height_);
    roots_ = positive_roots(g_, target);
    std::sort(roots_.begin(), roots_.end(),
              [this](const auto& x, const auto& y) {
                auto cx = g_.root_coords(x.first);
                auto cy = g_.root_coords(y.first);
                auto hx = cx->first + cx->second, hy = cy->first + cy->second;
                if (hx != hy) return hx < hy;
                return x.first < y.first;
              });
    roots_height_ = target;
  }

  const Algebra& g_;
  Weight highest_;
  std::mutex mutex_;
  std::unordered_map<Key, long long, PairHash> memo_;
  std::vector<std::pair<Weight, long long>> roots_;
  long long roots_height_ = -1;
};

struct TableKey {
  AlgebraKind kind;
  Weight highest;
  auto operator<=>(const TableKey&) const = default;
};

std::map<TableKey, std::unique_ptr<FreudenthalTable>>& table_registry() {
  static std::map<TableKey, std::unique_ptr<FreudenthalTable>> reg;
  return reg;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

FreudenthalTable& table_for(const Algebra& g, const Weight& highest) {
  std::lock_guard lock(registry_mutex());
  auto& reg = table_registry();
  TableKey key{g.kind, highest};
  auto it = reg.find(key);
  if (it == reg.end())
    it = reg.emplace(key, std::make_unique<FreudenthalTable>(g, highest))
             .first;
  return *it->second;
}

void check_highest(const Algebra& g, const Weight& highest) {
  if (!g.is_integral(highest) || !g.is_dominant(highest))
    throw std::invalid_argument(
        "multiplicity: highest weight must be dominant integral");
}

}  // namespace

void clear_multiplicity_cache() {
  std::lock_guard lock(registry_mutex());
  table_registry().clear();
}

long long weight_multiplicity(const Algebra& g, const Weight& highest,
                              const Weight& mu, long long depth) {
  check_highest(g, highest);
  if (auto rc = g.root_coords(highest - mu)) {
    if (rc->first + rc->second > depth)
      throw TruncationError("weight_multiplicity: beyond stated depth");
  }
  return table_for(g, highest).multiplicity(mu);
}

TruncatedCharacter truncated_character(const Algebra& g, const Weight& highest,
                                       long long depth) {
  check_highest(g, highest);
  auto& table = table_for(g, highest);
  TruncatedCharacter ch;
  ch.highest = highest;
  ch.depth = depth;
  for (long long c0 = 0; c0 <= depth; ++c0) {
    for (long long c1 = 0; c0 + c1 <= depth; ++c1) {
      Weight mu = highest - c0 * g.alpha_i[0] - c1 * g.alpha_i[1];
      long long m = table.multiplicity(mu);
      if (m != 0) ch.mult.emplace(mu, m);
    }
  }
  return ch;
}

DeltaString delta_string_of(const Algebra& g, const Weight& highest,
                            const Weight& lambda, long long depth) {
  check_highest(g, highest);
  DeltaString s;
  s.base = lambda;
  if (highest.w2 == 0) {  // one-dimensional module
    auto d = root_lattice_diff(highest, lambda);
    if (!d || d->first != 0) return s;
    s.top = d->second;
    s.coeffs.assign(static_cast<size_t>(depth) + 1, 0);
    s.coeffs[0] = 1;
    return s;
  }
  auto top = delta_max_shift(g, highest, lambda);
  if (!top) return s;
  s.top = *top;
  auto& table = table_for(g, highest);
  s.coeffs.reserve(static_cast<size_t>(depth) + 1);
  for (long long k = 0; k <= depth; ++k)
    s.coeffs.push_back(table.multiplicity(lambda + (*top - k) * g.delta));
  return s;
}

ProductCharacter character_product(const Algebra& g,
                                   const TruncatedCharacter& a,
                                   const TruncatedCharacter& b) {
  ProductCharacter out;
  out.top = a.highest + b.highest;
  out.depth = std::min(a.depth, b.depth);
  for (const auto& [mu, ma] : a.mult) {
    for (const auto& [nu, mb] : b.mult) {
      Weight w = mu + nu;
      auto rc = g.root_coords(out.top - w);
      if (!rc || rc->first + rc->second > out.depth) continue;
      out.mult[w] += ma * mb;
    }
  }
  return out;
}

}  // namespace kmt
