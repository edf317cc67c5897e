#include "skewarch/skew.hpp"

#include <algorithm>
#include <unordered_map>

#include "skewarch/error.hpp"
#include "skewarch/ring_kinds.hpp"
#include "skewarch/spec.hpp"

namespace skewarch {

namespace {

void check_endo(const EndoHandle& endo) {
  if (!endo) throw SpecError("missing endomorphism");
}

void same_twist(const Endo& a, const Endo& b) {
  if (a.ring()->tag() != b.ring()->tag() || a.name() != b.name()) {
    throw MismatchError("skew elements over " + a.ring()->name() + ";" + a.name() + " and " + b.ring()->name() + ";" +
                        b.name() + " cannot be combined");
  }
}

void same_series(const TruncSeries& f, const TruncSeries& g) {
  same_twist(*f.endo(), *g.endo());
  if (f.precision() != g.precision()) {
    throw MismatchError("series precisions differ: " + std::to_string(f.precision()) + " and " +
                        std::to_string(g.precision()));
  }
}

// Twisted convolution of coefficient lists, keeping output degrees < limit.
std::vector<Element> convolve(const Endo& endo, const std::vector<Element>& f, const std::vector<Element>& g,
                              std::size_t limit) {
  const Ring& r = *endo.ring();
  if (f.empty() || g.empty()) return {};
  const std::size_t len = std::min(limit, f.size() + g.size() - 1);
  std::vector<Element> out(len, r.zero());
  for (std::size_t i = 0; i < f.size() && i < len; ++i) {
    if (r.is_zero(f[i])) continue;
    for (std::size_t j = 0; j < g.size() && i + j < len; ++j) {
      if (r.is_zero(g[j])) continue;
      out[i + j] = r.add(out[i + j], r.mul(f[i], endo.power_apply(i, g[j])));
    }
  }
  return out;
}

std::vector<Element> strip(std::vector<Element> c, const Ring& r) {
  while (!c.empty() && r.is_zero(c.back())) c.pop_back();
  return c;
}

std::vector<Element> parse_coefficient_list(const Ring& ring, std::string_view text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw SpecError("expected a coefficient list '[c0,c1,...]', got '" + t + "'");
  }
  std::vector<Element> out;
  const std::string inner = trim(std::string_view(t).substr(1, t.size() - 2));
  if (inner.empty()) return out;
  for (const auto& piece : split_top_level(inner, ',')) out.push_back(ring.parse(piece));
  return out;
}

struct SplitText {
  std::string coefficients, ring, endo;
  std::optional<int> precision;
};

SplitText split_text(std::string_view text) {
  const std::string t = trim(text);
  const auto at = t.find('@');
  if (at == std::string::npos) throw SpecError("expected '<coefficients>@<ring>;<endo>', got '" + t + "'");
  SplitText out;
  out.coefficients = t.substr(0, at);
  const std::string rest = t.substr(at + 1);
  const auto e = rest.rfind(";endo:");
  if (e == std::string::npos) throw SpecError("missing ';endo:' in '" + t + "'");
  out.ring = rest.substr(0, e);
  out.endo = rest.substr(e + 1);
  const auto n = out.endo.rfind(";N=");
  if (n != std::string::npos) {
    out.precision = static_cast<int>(parse_integer(out.endo.substr(n + 3)));
    out.endo = out.endo.substr(0, n);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------- values

SkewPoly::SkewPoly(EndoHandle endo, std::vector<Element> coefficients) : endo_(std::move(endo)) {
  check_endo(endo_);
  for (const auto& c : coefficients) ring().check(c);
  coeffs_ = strip(std::move(coefficients), ring());
}

Element SkewPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring().zero(); }

TruncSeries::TruncSeries(EndoHandle endo, int precision, std::vector<Element> coefficients)
    : endo_(std::move(endo)), precision_(precision) {
  check_endo(endo_);
  if (precision < 0) throw SpecError("series precision must be nonnegative");
  if (coefficients.size() > static_cast<std::size_t>(precision) + 1) {
    throw SpecError("series has " + std::to_string(coefficients.size()) + " coefficients but precision " +
                    std::to_string(precision));
  }
  for (const auto& c : coefficients) ring().check(c);
  coefficients.resize(static_cast<std::size_t>(precision) + 1, ring().zero());
  coeffs_ = std::move(coefficients);
}

bool TruncSeries::is_zero() const { return degree() < 0; }

int TruncSeries::degree() const {
  for (int i = precision_; i >= 0; --i)
    if (!ring().is_zero(coeffs_[i])) return i;
  return -1;
}

int TruncSeries::order() const {
  for (int i = 0; i <= precision_; ++i)
    if (!ring().is_zero(coeffs_[i])) return i;
  return precision_ + 1;
}

SkewPoly poly_constant(const EndoHandle& endo, const Element& c) { return SkewPoly(endo, {c}); }

SkewPoly poly_monomial(const EndoHandle& endo, const Element& c, int k) {
  std::vector<Element> cs(static_cast<std::size_t>(k) + 1, endo->ring()->zero());
  cs[k] = c;
  return SkewPoly(endo, std::move(cs));
}

TruncSeries series_zero(const EndoHandle& endo, int precision) { return TruncSeries(endo, precision, {}); }

TruncSeries series_constant(const EndoHandle& endo, int precision, const Element& c) {
  return TruncSeries(endo, precision, {c});
}

TruncSeries series_monomial(const EndoHandle& endo, int precision, const Element& c, int k) {
  if (k > precision) return series_zero(endo, precision);
  std::vector<Element> cs(static_cast<std::size_t>(k) + 1, endo->ring()->zero());
  cs[k] = c;
  return TruncSeries(endo, precision, std::move(cs));
}

TruncSeries to_series(const SkewPoly& f, int precision) {
  auto cs = f.coefficients();
  if (cs.size() > static_cast<std::size_t>(precision) + 1) cs.resize(static_cast<std::size_t>(precision) + 1);
  return TruncSeries(f.endo(), precision, std::move(cs));
}

// ---------------------------------------------------------------------------- arithmetic

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g) {
  same_twist(*f.endo(), *g.endo());
  const Ring& r = f.ring();
  std::vector<Element> out(std::max(f.coefficients().size(), g.coefficients().size()), r.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.add(f.coefficient(i), g.coefficient(i));
  return SkewPoly(f.endo(), std::move(out));
}

SkewPoly skew_neg(const SkewPoly& f) {
  std::vector<Element> out;
  for (const auto& c : f.coefficients()) out.push_back(f.ring().neg(c));
  return SkewPoly(f.endo(), std::move(out));
}

SkewPoly skew_sub(const SkewPoly& f, const SkewPoly& g) { return skew_add(f, skew_neg(g)); }

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
  same_twist(*f.endo(), *g.endo());
  return SkewPoly(f.endo(), convolve(*f.endo(), f.coefficients(), g.coefficients(), SIZE_MAX));
}

SkewPoly skew_pow(const SkewPoly& f, std::uint64_t k) {
  SkewPoly out = poly_constant(f.endo(), f.ring().one());
  for (std::uint64_t i = 0; i < k; ++i) out = skew_mul(out, f);
  return out;
}

TruncSeries skew_add(const TruncSeries& f, const TruncSeries& g) {
  same_series(f, g);
  const Ring& r = f.ring();
  std::vector<Element> out;
  for (int i = 0; i <= f.precision(); ++i) out.push_back(r.add(f.coefficient(i), g.coefficient(i)));
  return TruncSeries(f.endo(), f.precision(), std::move(out));
}

TruncSeries skew_neg(const TruncSeries& f) {
  std::vector<Element> out;
  for (const auto& c : f.coefficients()) out.push_back(f.ring().neg(c));
  return TruncSeries(f.endo(), f.precision(), std::move(out));
}

TruncSeries skew_sub(const TruncSeries& f, const TruncSeries& g) { return skew_add(f, skew_neg(g)); }

TruncSeries skew_mul(const TruncSeries& f, const TruncSeries& g) {
  same_series(f, g);
  return TruncSeries(f.endo(), f.precision(),
                     convolve(*f.endo(), f.coefficients(), g.coefficients(), static_cast<std::size_t>(f.precision()) + 1));
}

TruncSeries skew_pow(const TruncSeries& f, std::uint64_t k) {
  TruncSeries out = series_constant(f.endo(), f.precision(), f.ring().one());
  for (std::uint64_t i = 0; i < k; ++i) out = skew_mul(out, f);
  return out;
}

bool product_faithful(const TruncSeries& f, const TruncSeries& g) {
  same_series(f, g);
  if (f.is_zero() || g.is_zero()) return true;
  if (f.degree() + g.degree() > f.precision()) return false;
  const Ring& r = f.ring();
  const Endo& endo = *f.endo();
  if (r.profile_limit().empty()) return true;
  for (int i = 0; i <= f.degree(); ++i) {
    if (r.is_zero(f.coefficient(i))) continue;
    for (int j = 0; j <= g.degree(); ++j) {
      if (r.is_zero(g.coefficient(j))) continue;
      if (!endo.twisted_product_faithful(f.coefficient(i), static_cast<std::uint64_t>(i), g.coefficient(j))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------- inverses and probes

GeometricInverse geometric_inverse(const SkewPoly& f, int precision) {
  if (precision < 1) throw SpecError("geometric_inverse requires precision >= 1");
  const Ring& r = f.ring();
  std::vector<Element> shifted{r.zero()};
  for (const auto& c : f.coefficients()) shifted.push_back(c);
  const SkewPoly fx(f.endo(), std::move(shifted));

  TruncSeries sum = series_zero(f.endo(), precision);
  SkewPoly power = poly_constant(f.endo(), r.one());
  std::optional<std::uint64_t> terminated;
  for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(precision); ++k) {
    const TruncSeries term = to_series(power, precision);
    sum = k % 2 == 0 ? skew_add(sum, term) : skew_sub(sum, term);
    power = skew_mul(power, fx);
    if (power.is_zero()) {
      terminated = k + 1;
      break;
    }
  }
  return {sum, terminated};
}

TruncSeries series_inverse(const TruncSeries& g) {
  const Ring& r = g.ring();
  const Endo& endo = *g.endo();
  const auto inv0 = r.inverse(g.coefficient(0));
  if (!inv0) throw NotInvertibleError("constant term " + r.format(g.coefficient(0)) + " is not a unit");
  std::vector<Element> h{*inv0};
  for (int m = 1; m <= g.precision(); ++m) {
    Element acc = r.zero();
    for (int i = 1; i <= m; ++i) {
      if (r.is_zero(g.coefficient(i))) continue;
      acc = r.add(acc, r.mul(g.coefficient(i), endo.power_apply(static_cast<std::uint64_t>(i), h[m - i])));
    }
    h.push_back(r.neg(r.mul(*inv0, acc)));
  }
  return TruncSeries(g.endo(), g.precision(), std::move(h));
}

NilpotencyProbe nilpotency_probe(const SkewPoly& f, std::uint64_t bound) {
  if (bound < 1) throw SpecError("nilpotency bound must be at least 1");
  SkewPoly power = f;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (power.is_zero()) return {ProbeKind::nilpotent, k};
    if (k < bound) power = skew_mul(power, f);
  }
  return {ProbeKind::not_within_bound, 0};
}

NilpotencyProbe nilpotency_probe(const TruncSeries& f, std::uint64_t bound) {
  if (bound < 1) throw SpecError("nilpotency bound must be at least 1");
  TruncSeries power = f;
  bool faithful = true;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (power.is_zero()) return {faithful ? ProbeKind::nilpotent : ProbeKind::truncation_artifact, k};
    if (k < bound) {
      faithful = faithful && product_faithful(power, f);
      power = skew_mul(power, f);
    }
  }
  return {ProbeKind::not_within_bound, 0};
}

// ---------------------------------------------------------------------------- divisibility

const DivisibilityCache::Table& DivisibilityCache::table(const Ring& ring, const std::vector<Element>& candidates,
                                                         const Element& v) {
  if (ring_tag_ != ring.tag()) {
    tables_.clear();
    ring_tag_ = ring.tag();
  }
  auto it = tables_.find(v.coords);
  if (it != tables_.end()) return it->second;
  Table t;
  for (std::size_t c = 0; c < candidates.size(); ++c) t[ring.mul(candidates[c], v).coords].push_back(c);
  return tables_.emplace(v.coords, std::move(t)).first->second;
}

DivisibilityResult solve_right_divisibility(const TruncSeries& f, const TruncSeries& g, std::uint64_t n,
                                            const DivisibilityOptions& options) {
  same_series(f, g);
  if (n < 1) throw SpecError("divisibility exponent must be at least 1");
  const Ring& r = f.ring();
  const Endo& endo = *f.endo();
  const int N = f.precision();
  const std::size_t L = static_cast<std::size_t>(N) + 1;

  DivisibilityResult result;
  result.exact = r.is_finite();
  const std::vector<Element>& candidates = r.is_finite() ? r.elements() : r.scope_elements();

  const TruncSeries G = skew_pow(g, n);
  // twisted[i][j] = alpha^i(G_j), i + j <= N
  std::vector<std::vector<Element>> twisted(L);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; i + j < L; ++j) twisted[i].push_back(endo.power_apply(i, G.coefficient(j)));

  // Per level: residual -> candidate indices c with c * alpha^m(G_0) = residual.
  using Table = DivisibilityCache::Table;
  DivisibilityCache local;
  DivisibilityCache& cache = options.cache ? *options.cache : local;
  auto table_for = [&](std::size_t m) -> const Table& { return cache.table(r, candidates, twisted[m][0]); };

  const std::vector<std::size_t> none;
  std::vector<const std::vector<std::size_t>*> cand(L, &none);
  std::vector<std::size_t> pos(L, 0);
  std::vector<std::vector<char>> conflict(L, std::vector<char>(L, 0));
  std::vector<Element> h(L, r.zero());

  auto enter = [&](std::size_t m) {
    Element residual = f.coefficient(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Element& t = twisted[i][m - i];
      if (!r.is_zero(t)) residual = r.sub(residual, r.mul(h[i], t));
    }
    const Table& table = table_for(m);
    auto it = table.find(residual.coords);
    cand[m] = it == table.end() ? &none : &it->second;
    pos[m] = 0;
    std::fill(conflict[m].begin(), conflict[m].end(), 0);
  };

  std::size_t m = 0;
  enter(0);
  while (true) {
    if (pos[m] < cand[m]->size()) {
      h[m] = candidates[(*cand[m])[pos[m]++]];
      if (++result.nodes > options.node_limit) {
        result.status = DivisibilityStatus::budget;
        return result;
      }
      if (m + 1 == L) {
        result.status = DivisibilityStatus::found;
        result.h = TruncSeries(f.endo(), N, h);
        return result;
      }
      enter(++m);
      continue;
    }
    for (std::size_t j = 1; j <= m; ++j)
      if (!r.is_zero(G.coefficient(j))) conflict[m][m - j] = 1;
    std::size_t k = m;
    for (std::size_t i = m; i-- > 0;) {
      if (conflict[m][i]) {
        k = i;
        break;
      }
    }
    if (k == m) {
      result.status = DivisibilityStatus::none;
      return result;
    }
    for (std::size_t i = 0; i < k; ++i) conflict[k][i] = conflict[k][i] || conflict[m][i];
    m = k;
  }
}

// ---------------------------------------------------------------------------- text

std::string format_coefficients(const Ring& ring, const std::vector<Element>& coefficients) {
  std::size_t len = coefficients.size();
  while (len > 0 && ring.is_zero(coefficients[len - 1])) --len;
  std::string out = "[";
  for (std::size_t i = 0; i < len; ++i) {
    if (i) out += ',';
    out += ring.format(coefficients[i]);
  }
  return out + "]";
}

std::string format(const SkewPoly& f) {
  return format_coefficients(f.ring(), f.coefficients()) + "@" + f.ring().name() + ";" + f.endo()->name();
}

std::string format(const TruncSeries& f) {
  return format_coefficients(f.ring(), f.coefficients()) + "@" + f.ring().name() + ";" + f.endo()->name() +
         ";N=" + std::to_string(f.precision());
}

SkewPoly parse_poly(const EndoHandle& endo, std::string_view coefficients) {
  return SkewPoly(endo, parse_coefficient_list(*endo->ring(), coefficients));
}

TruncSeries parse_series(const EndoHandle& endo, int precision, std::string_view coefficients) {
  return TruncSeries(endo, precision, parse_coefficient_list(*endo->ring(), coefficients));
}

SkewPoly parse_poly(std::string_view text) {
  const SplitText s = split_text(text);
  if (s.precision) throw SpecError("polynomial text must not carry a precision");
  const EndoHandle endo = build_endo(construct_ring(s.ring), s.endo);
  return parse_poly(endo, s.coefficients);
}

TruncSeries parse_series(std::string_view text) {
  const SplitText s = split_text(text);
  if (!s.precision) throw SpecError("series text requires ';N=<precision>'");
  const EndoHandle endo = build_endo(construct_ring(s.ring), s.endo);
  return parse_series(endo, *s.precision, s.coefficients);
}

}  // namespace skewarch
