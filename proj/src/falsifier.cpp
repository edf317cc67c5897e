#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "props_internal.hpp"
#include "skewarch/error.hpp"
#include "skewarch/ring_kinds.hpp"

namespace skewarch {

using detail::plural;

namespace {

std::mutex powers_mutex;
std::map<std::uint64_t, std::vector<SubsetHandle>> powers_cache;

}  // namespace

// R = J^0 ⊇ J ⊇ J^2 ⊇ ... down to {0} (J is nilpotent in a finite ring).
const std::vector<SubsetHandle>& detail::jacobson_powers(const Ring& ring) {
  std::lock_guard lock(powers_mutex);
  auto it = powers_cache.find(ring.tag());
  if (it != powers_cache.end()) return it->second;
  const auto& t = ring.tables();
  std::vector<std::size_t> all(t.size);
  std::iota(all.begin(), all.end(), 0);
  std::vector<SubsetHandle> powers{make_subset(ring, all)};
  const SubsetHandle j = jacobson_radical(ring);
  SubsetHandle current = j;
  while (true) {
    powers.push_back(current);
    if (current.size() == 1) break;
    std::vector<std::size_t> products;
    for (auto a : current.members)
      for (auto b : j.members) products.push_back(t.times(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());
    SubsetHandle next = make_subset(ring, ideal_generated(ring, products));
    if (next == current) break;
    current = std::move(next);
  }
  return powers_cache.emplace(ring.tag(), std::move(powers)).first->second;
}

int detail::inner_order(const Ring& ring, const Element& a) {
  if (ring.is_zero(a)) return INT_MAX / 4;
  if (auto* xy = as_xy_quotient(ring)) {
    const auto& c = a.coords;
    if (c[0] != 0) return 0;
    const int n = xy->precision();
    for (int k = 1; k <= n; ++k)
      if (c[k] != 0 || c[n + k] != 0) return k;
    return INT_MAX / 4;
  }
  if (auto* ts = as_truncated_series(ring)) {
    for (int i = 0;; ++i)
      if (!ts->base()->is_zero(ts->coefficient(a, i))) return i;
  }
  if (ring.is_finite() && *ring.cardinality() <= kMaxTabulated) {
    const auto& powers = jacobson_powers(ring);
    const std::size_t idx = ring.index(a);
    int k = 0;
    while (static_cast<std::size_t>(k + 1) < powers.size() && powers[k + 1].contains(idx)) ++k;
    return k;
  }
  return 0;
}

namespace {

// Order of f in the filtration by x and the maximal ideal of a truncated coefficient model.
int adic_order(const TruncSeries& f) {
  int best = INT_MAX / 4;
  for (int i = 0; i <= f.precision(); ++i) best = std::min(best, i + detail::inner_order(f.ring(), f.coefficient(i)));
  return best;
}

struct Pool {
  std::vector<Element> all, nonzero, nonunits;
};

Pool make_pool(const Ring& r) {
  Pool p;
  p.all = r.is_finite() ? r.elements() : r.scope_elements();
  for (const auto& a : p.all) {
    if (!r.is_zero(a)) p.nonzero.push_back(a);
    if (!r.is_unit(a)) p.nonunits.push_back(a);
  }
  return p;
}

bool predicts_right_series(const EndoHandle& endo) {
  const Status arch = is_archimedean(endo->ring(), Side::right).status;
  return detail::is_holds(arch) && is_rigid(*endo).value && preserves_nonunits(*endo).value;
}

}  // namespace

Verdict archimedean_falsifier(const EndoHandle& endo, const ProbeConfig& config) {
  const std::string suite = "falsify";
  const Ring& r = *endo->ring();
  const int N = config.precision;
  const int depth = config.depth;
  if (N < 1 || depth < 1) throw SpecError("falsifier needs precision and depth >= 1");
  const std::vector<std::string> tags{endo->is_identity() ? "Corollary 4.6" : "Theorem 4.4"};
  const bool predicted = predicts_right_series(endo);
  const Pool pool = make_pool(r);
  if (pool.nonzero.empty() || pool.nonunits.empty()) throw SpecError("falsifier needs nonzero nonunits");

  std::uint64_t tried = 0, skipped = 0, solver_budget = 0;
  std::optional<Verdict> found;
  DivisibilityCache cache;
  DivisibilityOptions dopt;
  dopt.node_limit = 200000;
  dopt.cache = &cache;

  auto attempt = [&](const TruncSeries& f, const TruncSeries& g) {
    if (found || tried >= config.budget) return;
    if (f.is_zero() || r.is_unit(g.coefficient(0))) return;
    if (adic_order(f) >= depth) {
      ++skipped;
      return;
    }
    ++tried;
    Json hs = Json::array();
    for (int n = 1; n <= depth; ++n) {
      const DivisibilityResult res = solve_right_divisibility(f, g, static_cast<std::uint64_t>(n), dopt);
      if (res.status == DivisibilityStatus::budget) ++solver_budget;
      if (res.status != DivisibilityStatus::found) return;
      hs.push_back(format_coefficients(r, res.h->coefficients()));
    }
    Json w;
    w["f"] = format_coefficients(r, f.coefficients());
    w["g"] = format_coefficients(r, g.coefficients());
    w["precision"] = N;
    w["h"] = hs;
    w["replay"] = "f = h_n g^n mod x^" + std::to_string(N + 1) + " for n = 1.." + std::to_string(depth);
    // Constant pairs over an exact ring are genuine: f lies in the stabilized chain of g_0.
    bool genuine = false;
    if (r.is_finite() && f.degree() <= 0 && g.degree() <= 0) {
      const PowerChain pc = principal_power_chain(r, g.coefficient(0), Side::right);
      genuine = pc.intersection.contains(r.index(f.coefficient(0)));
      w["stabilized"] = format_subset(r, pc.intersection);
    }
    w["genuine"] = genuine;
    Verdict v = make_verdict(suite, Status::fails,
                             genuine ? "f lies in every R g^n: constant witness against right Archimedean"
                                     : "truncation-scale witness against right Archimedean",
                             std::move(w), tags);
    v.predicted_holds = predicted;
    found = std::move(v);
  };

  // Stage 1: constants.
  const std::uint64_t stage1 = config.budget / 2;
  for (const auto& g : pool.nonunits) {
    if (found || tried >= stage1) break;
    for (const auto& f : pool.nonzero) {
      if (found || tried >= stage1) break;
      attempt(series_constant(endo, N, f), series_constant(endo, N, g));
    }
  }
  // Stage 2: monomials c x^k, k <= 3.
  const std::uint64_t stage2 = config.budget - config.budget / 4;
  for (int kg = 0; kg <= std::min(3, N) && !found && tried < stage2; ++kg) {
    for (int kf = 0; kf <= std::min(3, N) && !found && tried < stage2; ++kf) {
      if (kg == 0 && kf == 0) continue;
      const auto& gs = kg == 0 ? pool.nonunits : pool.nonzero;
      for (const auto& cg : gs) {
        if (found || tried >= stage2) break;
        for (const auto& cf : pool.nonzero) {
          if (found || tried >= stage2) break;
          attempt(series_monomial(endo, N, cf, kf), series_monomial(endo, N, cg, kg));
        }
      }
    }
  }
  // Stage 3: seeded random series with at most four nonzero coefficients.
  std::mt19937_64 rng(config.seed);
  auto random_series = [&](bool nonunit) {
    std::vector<Element> cs(static_cast<std::size_t>(N) + 1, r.zero());
    const int support = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < support; ++s) cs[rng() % (N + 1)] = pool.nonzero[rng() % pool.nonzero.size()];
    if (nonunit) cs[0] = pool.nonunits[rng() % pool.nonunits.size()];
    return TruncSeries(endo, N, std::move(cs));
  };
  std::uint64_t draws = 0;
  while (!found && tried < config.budget && draws < 20 * config.budget) {
    ++draws;
    const TruncSeries g = random_series(true);
    const TruncSeries f = random_series(false);
    attempt(f, g);
  }
  if (found) return *found;
  const std::string scale = plural(tried, "candidate pair") + " at precision " + std::to_string(N) + ", depth " +
                            std::to_string(depth) + " (" + std::to_string(skipped) + " skipped with adic order >= depth, " +
                            std::to_string(solver_budget) + " solver budget stops)";
  if (predicted) {
    Verdict v = make_verdict(suite, Status::holds_by_theorem,
                             "no witness among " + scale + "; R is right Archimedean, alpha rigid and nonunit-preserving",
                             nullptr, tags);
    v.predicted_holds = true;
    return v;
  }
  return make_verdict(suite, Status::inconclusive_at_scale, "no witness among " + scale, nullptr, tags);
}

Verdict nilpotent_sampler(const EndoHandle& endo, const ProbeConfig& config) {
  const std::string suite = "nilpotent-sampler";
  const Ring& r = *endo->ring();
  const int N = config.precision;
  const Pool pool = make_pool(r);
  std::uint64_t samples = 0;
  auto check = [&](const TruncSeries& f) -> std::optional<Verdict> {
    ++samples;
    if (f.is_zero()) return std::nullopt;
    const TruncSeries sq = skew_mul(f, f);
    if (!sq.is_zero() || !product_faithful(f, f)) return std::nullopt;
    Json w;
    w["f"] = format_coefficients(r, f.coefficients());
    w["f^2"] = format_coefficients(r, sq.coefficients());
    w["precision"] = N;
    return make_verdict(suite, Status::fails, "nonzero f with f^2 = 0, represented without truncation loss",
                        std::move(w), {"Proposition 4.1"});
  };
  // (a x)^2 = a alpha(a) x^2
  for (const auto& a : pool.nonzero) {
    if (auto v = check(series_monomial(endo, N, a, 1))) return *v;
  }
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  const int half = N / 2;
  for (std::uint64_t i = 0; i < config.budget; ++i) {
    std::vector<Element> cs(static_cast<std::size_t>(N) + 1, r.zero());
    const int support = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < support; ++s) cs[rng() % (half + 1)] = pool.all[rng() % pool.all.size()];
    if (auto v = check(TruncSeries(endo, N, std::move(cs)))) return *v;
  }
  return make_verdict(suite, Status::inconclusive_at_scale,
                      "no nonzero square-zero series among " + plural(samples, "sample") + " with support in degrees <= " +
                          std::to_string(half),
                      nullptr, {"Proposition 4.1"});
}

}  // namespace skewarch
