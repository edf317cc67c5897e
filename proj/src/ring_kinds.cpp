#include "skewarch/ring_kinds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "skewarch/error.hpp"

namespace skewarch {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  return mod(t, n);
}

std::string strip_brackets(std::string_view text, char open, char close) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != open || t.back() != close) {
    throw SpecError(std::string("expected '") + open + "...'" + close + "', got '" + t + "'");
  }
  return t.substr(1, t.size() - 2);
}

std::vector<std::string> parse_list(std::string_view text, char open, char close) {
  auto parts = split_top_level(strip_brackets(text, open, close), ',');
  if (parts.size() == 1 && trim(parts[0]).empty()) return {};
  return parts;
}

// Polynomials over F_p, coefficients low to high.
using Poly = std::vector<std::int64_t>;

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& m, std::int64_t p) {
  normalize(a);
  const auto lead_inv = *inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::int64_t factor = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = mod(a[shift + i] - mulmod(factor, m[i], p), p);
    normalize(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::int64_t>& poly, std::int64_t p) {
  Poly f = poly;
  normalize(f);
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  // Any factorization has a monic factor of degree <= k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::int64_t c = code;
      for (int i = 0; i < d; ++i, c /= p) g[i] = c % p;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> default_modulus(std::int64_t p, int k) {
  if (k == 1) return {0, 1};
  // Conway polynomials, coefficients low to high.
  struct Known {
    std::int64_t p;
    int k;
    std::vector<std::int64_t> coeffs;
  };
  static const std::vector<Known> conway = {
      {2, 2, {1, 1, 1}},    {2, 3, {1, 1, 0, 1}}, {2, 4, {1, 1, 0, 0, 1}}, {2, 5, {1, 0, 1, 0, 0, 1}},
      {3, 2, {2, 2, 1}},    {3, 3, {1, 2, 0, 1}}, {5, 2, {2, 4, 1}},       {7, 2, {3, 6, 1}},
  };
  for (auto& c : conway)
    if (c.p == p && c.k == k) return c.coeffs;
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::int64_t code = 0; code < count; ++code) {
    Poly g(k + 1, 0);
    g[k] = 1;
    std::int64_t c = code;
    for (int i = 0; i < k; ++i, c /= p) g[i] = c % p;
    if (is_irreducible_mod_p(g, p)) return g;
  }
  throw SpecError("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------- Zmod

ZmodRing::ZmodRing(RingSpec spec)
    : Ring(spec, static_cast<std::size_t>(std::get<RingSpec::Zmod>(spec.kind).n)),
      n_(std::get<RingSpec::Zmod>(spec.kind).n) {
  set_commutative(true);
}

Coords ZmodRing::do_add(const Coords& a, const Coords& b) const { return {mod(a[0] + b[0], n_)}; }
Coords ZmodRing::do_neg(const Coords& a) const { return {mod(-a[0], n_)}; }
Coords ZmodRing::do_mul(const Coords& a, const Coords& b) const { return {mulmod(a[0], b[0], n_)}; }
std::string ZmodRing::do_format(const Coords& a) const { return std::to_string(a[0]); }
Coords ZmodRing::do_parse(std::string_view text) const { return {mod(parse_integer(text), n_)}; }

// ---------------------------------------------------------------------------- GF(p^k)

namespace {

std::size_t power_size(std::int64_t p, int k) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) n *= static_cast<std::size_t>(p);
  return n;
}

}  // namespace

GaloisRing::GaloisRing(RingSpec spec, std::int64_t p, int k, std::vector<std::int64_t> modulus)
    : Ring(std::move(spec), power_size(p, k)), p_(p), k_(k), modulus_(std::move(modulus)) {
  set_commutative(true);
}

Coords GaloisRing::do_one() const {
  Coords c(k_, 0);
  c[0] = 1;
  return c;
}

Coords GaloisRing::do_add(const Coords& a, const Coords& b) const {
  Coords c(k_);
  for (int i = 0; i < k_; ++i) c[i] = mod(a[i] + b[i], p_);
  return c;
}

Coords GaloisRing::do_neg(const Coords& a) const {
  Coords c(k_);
  for (int i = 0; i < k_; ++i) c[i] = mod(-a[i], p_);
  return c;
}

Coords GaloisRing::do_mul(const Coords& a, const Coords& b) const {
  Poly prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p_);
  }
  Poly r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(k_, 0);
  return r;
}

std::string GaloisRing::do_format(const Coords& a) const {
  if (k_ == 1) return std::to_string(a[0]);
  std::string out = "[";
  for (int i = 0; i < k_; ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + "]";
}

Coords GaloisRing::do_parse(std::string_view text) const {
  Coords c(k_, 0);
  if (text.empty() || text.front() != '[') {
    c[0] = mod(parse_integer(text), p_);
    return c;
  }
  auto parts = parse_list(text, '[', ']');
  if (static_cast<int>(parts.size()) != k_) {
    throw SpecError("GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ") element needs " +
                    std::to_string(k_) + " coordinates: '" + std::string(text) + "'");
  }
  for (int i = 0; i < k_; ++i) c[i] = mod(parse_integer(parts[i]), p_);
  return c;
}

std::size_t GaloisRing::do_index(const Coords& a) const {
  std::size_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * static_cast<std::size_t>(p_) + static_cast<std::size_t>(a[i]);
  return idx;
}

Coords GaloisRing::do_at(std::size_t i) const {
  Coords c(k_);
  for (int j = 0; j < k_; ++j, i /= static_cast<std::size_t>(p_)) c[j] = static_cast<std::int64_t>(i % p_);
  return c;
}

// ---------------------------------------------------------------------------- products

namespace {

std::size_t product_cardinality(const std::vector<RingHandle>& factors) {
  std::size_t n = 1;
  for (auto& f : factors) {
    if (!f->is_finite()) throw SpecError("product factors must be finite rings, got " + f->name());
    n *= *f->cardinality();
    if (n > (std::size_t{1} << 20)) throw SpecError("product ring too large");
  }
  return n;
}

}  // namespace

ProductRing::ProductRing(RingSpec spec, std::vector<RingHandle> factors)
    : Ring(std::move(spec), product_cardinality(factors)), factors_(std::move(factors)) {
  std::size_t offset = 0;
  for (auto& f : factors_) {
    offsets_.push_back(offset);
    dims_.push_back(f->zero().coords.size());
    offset += dims_.back();
  }
}

template <class F>
Coords ProductRing::componentwise(const Coords& a, const Coords& b, F f) const {
  Coords out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& r = *factors_[i];
    Element x{r.tag(), Coords(a.begin() + offsets_[i], a.begin() + offsets_[i] + dims_[i])};
    Element y{r.tag(), Coords(b.begin() + offsets_[i], b.begin() + offsets_[i] + dims_[i])};
    Element z = f(r, x, y);
    out.insert(out.end(), z.coords.begin(), z.coords.end());
  }
  return out;
}

Element ProductRing::component(const Element& a, std::size_t i) const {
  check(a);
  return Element{factors_[i]->tag(),
                 Coords(a.coords.begin() + offsets_[i], a.coords.begin() + offsets_[i] + dims_[i])};
}

Element ProductRing::make(const std::vector<Element>& components) const {
  if (components.size() != factors_.size()) throw SpecError("wrong number of product components");
  Coords out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    factors_[i]->check(components[i]);
    out.insert(out.end(), components[i].coords.begin(), components[i].coords.end());
  }
  return wrap(std::move(out));
}

Coords ProductRing::do_zero() const {
  Coords out;
  for (auto& f : factors_) {
    auto z = f->zero();
    out.insert(out.end(), z.coords.begin(), z.coords.end());
  }
  return out;
}

Coords ProductRing::do_one() const {
  Coords out;
  for (auto& f : factors_) {
    auto z = f->one();
    out.insert(out.end(), z.coords.begin(), z.coords.end());
  }
  return out;
}

Coords ProductRing::do_add(const Coords& a, const Coords& b) const {
  return componentwise(a, b, [](const Ring& r, const Element& x, const Element& y) { return r.add(x, y); });
}

Coords ProductRing::do_neg(const Coords& a) const {
  return componentwise(a, a, [](const Ring& r, const Element& x, const Element&) { return r.neg(x); });
}

Coords ProductRing::do_mul(const Coords& a, const Coords& b) const {
  return componentwise(a, b, [](const Ring& r, const Element& x, const Element& y) { return r.mul(x, y); });
}

std::string ProductRing::do_format(const Coords& a) const {
  std::string out = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ",";
    const auto& r = *factors_[i];
    out += r.format(Element{r.tag(), Coords(a.begin() + offsets_[i], a.begin() + offsets_[i] + dims_[i])});
  }
  return out + ")";
}

Coords ProductRing::do_parse(std::string_view text) const {
  auto parts = parse_list(text, '(', ')');
  if (parts.size() != factors_.size()) throw SpecError("wrong number of components in '" + std::string(text) + "'");
  Coords out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto e = factors_[i]->parse(parts[i]);
    out.insert(out.end(), e.coords.begin(), e.coords.end());
  }
  return out;
}

std::size_t ProductRing::do_index(const Coords& a) const {
  // Mixed radix with the first factor least significant.
  std::size_t idx = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto& r = *factors_[i];
    idx = idx * *r.cardinality() +
          r.index(Element{r.tag(), Coords(a.begin() + offsets_[i], a.begin() + offsets_[i] + dims_[i])});
  }
  return idx;
}

Coords ProductRing::do_at(std::size_t i) const {
  std::vector<Coords> parts(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto n = *factors_[j]->cardinality();
    parts[j] = factors_[j]->at(i % n).coords;
    i /= n;
  }
  Coords out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// ---------------------------------------------------------------------------- subrings

SubRing::SubRing(RingSpec spec, RingHandle parent, std::vector<std::size_t> members)
    : Ring(std::move(spec), members.size()), parent_(std::move(parent)), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) position_[members_[i]] = i;
}


Element SubRing::embed(const Element& a) const {
  check(a);
  return Element{parent_->tag(), a.coords};
}

Coords SubRing::do_zero() const { return parent_->zero().coords; }
Coords SubRing::do_one() const { return parent_->one().coords; }
Coords SubRing::do_add(const Coords& a, const Coords& b) const {
  return parent_->add(Element{parent_->tag(), a}, Element{parent_->tag(), b}).coords;
}
Coords SubRing::do_neg(const Coords& a) const { return parent_->neg(Element{parent_->tag(), a}).coords; }
Coords SubRing::do_mul(const Coords& a, const Coords& b) const {
  return parent_->mul(Element{parent_->tag(), a}, Element{parent_->tag(), b}).coords;
}
std::string SubRing::do_format(const Coords& a) const { return parent_->format(Element{parent_->tag(), a}); }
Coords SubRing::do_parse(std::string_view text) const {
  auto e = parent_->parse(text);
  if (!position_.count(parent_->index(e))) throw SpecError("'" + std::string(text) + "' is not in the subring");
  return e.coords;
}
std::size_t SubRing::do_index(const Coords& a) const {
  auto it = position_.find(parent_->index(Element{parent_->tag(), a}));
  if (it == position_.end()) throw MismatchError("element is not in the subring");
  return it->second;
}
Coords SubRing::do_at(std::size_t i) const { return parent_->at(members_[i]).coords; }

// ---------------------------------------------------------------------------- quotients

QuotientRing::QuotientRing(RingSpec spec, RingHandle parent, std::vector<std::size_t> ideal,
                           std::vector<std::size_t> rep_of, std::vector<std::size_t> reps)
    : Ring(std::move(spec), reps.size()),
      parent_(std::move(parent)),
      ideal_(std::move(ideal)),
      rep_of_(std::move(rep_of)),
      reps_(std::move(reps)) {
  for (std::size_t i = 0; i < reps_.size(); ++i) position_[reps_[i]] = i;
}

Element QuotientRing::project(const Element& parent_element) const {
  parent_->check(parent_element);
  return wrap(canonical(parent_element.coords));
}

Coords QuotientRing::canonical(const Coords& parent_coords) const {
  return parent_->at(rep_of_[parent_->index(Element{parent_->tag(), parent_coords})]).coords;
}

Coords QuotientRing::do_zero() const { return canonical(parent_->zero().coords); }
Coords QuotientRing::do_one() const { return canonical(parent_->one().coords); }
Coords QuotientRing::do_add(const Coords& a, const Coords& b) const {
  return canonical(parent_->add(Element{parent_->tag(), a}, Element{parent_->tag(), b}).coords);
}
Coords QuotientRing::do_neg(const Coords& a) const {
  return canonical(parent_->neg(Element{parent_->tag(), a}).coords);
}
Coords QuotientRing::do_mul(const Coords& a, const Coords& b) const {
  return canonical(parent_->mul(Element{parent_->tag(), a}, Element{parent_->tag(), b}).coords);
}
std::string QuotientRing::do_format(const Coords& a) const { return parent_->format(Element{parent_->tag(), a}); }
Coords QuotientRing::do_parse(std::string_view text) const { return canonical(parent_->parse(text).coords); }
std::size_t QuotientRing::do_index(const Coords& a) const {
  return position_.at(parent_->index(Element{parent_->tag(), a}));
}
Coords QuotientRing::do_at(std::size_t i) const { return parent_->at(reps_[i]).coords; }

// ---------------------------------------------------------------------------- truncated series

TruncatedSeriesRing::TruncatedSeriesRing(RingSpec spec, RingHandle base, int precision)
    : Ring(std::move(spec), std::nullopt),
      base_(std::move(base)),
      n_(precision),
      dim_(base_->zero().coords.size()) {
  set_profile_limit({n_});
  set_commutative(base_->is_commutative());
}

std::vector<Element> TruncatedSeriesRing::split(const Coords& a) const {
  std::vector<Element> out;
  out.reserve(n_ + 1);
  for (int i = 0; i <= n_; ++i)
    out.push_back(Element{base_->tag(), Coords(a.begin() + i * dim_, a.begin() + (i + 1) * dim_)});
  return out;
}

Coords TruncatedSeriesRing::join(const std::vector<Element>& cs) const {
  Coords out;
  out.reserve((n_ + 1) * dim_);
  for (auto& c : cs) out.insert(out.end(), c.coords.begin(), c.coords.end());
  return out;
}

Element TruncatedSeriesRing::coefficient(const Element& a, int i) const {
  check(a);
  return split(a.coords).at(i);
}

Element TruncatedSeriesRing::make(const std::vector<Element>& coefficients) const {
  if (static_cast<int>(coefficients.size()) > n_ + 1) throw SpecError("too many series coefficients");
  std::vector<Element> cs(coefficients);
  cs.resize(n_ + 1, base_->zero());
  return wrap(join(cs));
}

Coords TruncatedSeriesRing::do_zero() const { return Coords((n_ + 1) * dim_, 0); }

Coords TruncatedSeriesRing::do_one() const {
  std::vector<Element> cs(n_ + 1, base_->zero());
  cs[0] = base_->one();
  return join(cs);
}

Coords TruncatedSeriesRing::do_add(const Coords& a, const Coords& b) const {
  auto x = split(a), y = split(b);
  for (int i = 0; i <= n_; ++i) x[i] = base_->add(x[i], y[i]);
  return join(x);
}

Coords TruncatedSeriesRing::do_neg(const Coords& a) const {
  auto x = split(a);
  for (auto& c : x) c = base_->neg(c);
  return join(x);
}

Coords TruncatedSeriesRing::do_mul(const Coords& a, const Coords& b) const {
  auto x = split(a), y = split(b);
  std::vector<Element> z(n_ + 1, base_->zero());
  for (int i = 0; i <= n_; ++i) {
    if (base_->is_zero(x[i])) continue;
    for (int j = 0; i + j <= n_; ++j) z[i + j] = base_->add(z[i + j], base_->mul(x[i], y[j]));
  }
  return join(z);
}

std::string TruncatedSeriesRing::do_format(const Coords& a) const {
  auto x = split(a);
  int last = n_;
  while (last > 0 && base_->is_zero(x[last])) --last;
  std::string out = "[";
  for (int i = 0; i <= last; ++i) {
    if (i) out += ",";
    out += base_->format(x[i]);
  }
  return out + "]";
}

Coords TruncatedSeriesRing::do_parse(std::string_view text) const {
  auto parts = parse_list(text, '[', ']');
  if (static_cast<int>(parts.size()) > n_ + 1) throw SpecError("series has more than N+1 coefficients");
  std::vector<Element> cs;
  for (auto& p : parts) cs.push_back(base_->parse(p));
  cs.resize(n_ + 1, base_->zero());
  return join(cs);
}

std::optional<Coords> TruncatedSeriesRing::do_inverse(const Coords& a) const {
  auto g = split(a);
  auto g0_inv = base_->inverse(g[0]);
  if (!g0_inv) return std::nullopt;
  // Right inverse, degree by degree: sum_{i+j=m} g_i h_j = [m == 0].
  std::vector<Element> h(n_ + 1, base_->zero());
  h[0] = *g0_inv;
  for (int m = 1; m <= n_; ++m) {
    Element acc = base_->zero();
    for (int i = 1; i <= m; ++i) acc = base_->add(acc, base_->mul(g[i], h[m - i]));
    h[m] = base_->neg(base_->mul(*g0_inv, acc));
  }
  return join(h);
}

std::vector<Coords> TruncatedSeriesRing::do_scope() const {
  const int half = n_ / 2;
  const auto& base_els = base_->elements();
  std::size_t count = 1;
  for (int i = 0; i <= half; ++i) {
    count *= base_els.size();
    if (count > (std::size_t{1} << 16)) throw NonEnumerableError(name() + ": scope too large");
  }
  std::vector<Coords> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Element> cs(n_ + 1, base_->zero());
    std::size_t c = code;
    for (int i = 0; i <= half; ++i, c /= base_els.size()) cs[i] = base_els[c % base_els.size()];
    out.push_back(join(cs));
  }
  return out;
}

std::vector<int> TruncatedSeriesRing::do_profile(const Coords& a) const {
  auto x = split(a);
  int last = n_;
  while (last > 0 && base_->is_zero(x[last])) --last;
  return {last};
}

Coords TruncatedSeriesRing::do_random(std::mt19937_64& rng) const {
  std::vector<Element> cs;
  for (int i = 0; i <= n_; ++i) cs.push_back(base_->random_element(rng));
  return join(cs);
}

// ---------------------------------------------------------------------------- F[[x,y]]/(xy)

XYQuotientRing::XYQuotientRing(RingSpec spec, RingHandle base, int precision)
    : Ring(std::move(spec), std::nullopt), base_(std::move(base)), n_(precision) {
  if (auto* z = dynamic_cast<const ZmodRing*>(base_.get())) {
    m_ = z->modulus();
  } else if (auto* g = dynamic_cast<const GaloisRing*>(base_.get()); g && g->degree() == 1) {
    m_ = g->characteristic();
  } else {
    throw SpecError("xyq base must be a prime field (zmod:p or gf:p:1), got " + base_->name());
  }
  if (!is_prime(m_)) throw SpecError("xyq base must be a field, got " + base_->name());
  set_profile_limit({n_, n_});
  set_commutative(true);
}

Element XYQuotientRing::x_power(int k) const {
  Coords c = do_zero();
  if (k == 0) c[0] = 1;
  else if (k <= n_) c[k] = 1;
  return wrap(std::move(c));
}

Element XYQuotientRing::y_power(int k) const {
  Coords c = do_zero();
  if (k == 0) c[0] = 1;
  else if (k <= n_) c[n_ + k] = 1;
  return wrap(std::move(c));
}

Element XYQuotientRing::square_x_block(const Element& a, unsigned t) const {
  check(a);
  Coords c = do_zero();
  c[0] = a.coords[0];
  for (int i = 1; i <= n_; ++i) c[n_ + i] = a.coords[n_ + i];
  for (int i = 1; i <= n_; ++i) {
    if (!a.coords[i]) continue;
    std::int64_t target = i;
    for (unsigned s = 0; s < t && target <= n_; ++s) target *= 2;
    if (target <= n_) c[target] = a.coords[i];
  }
  return wrap(std::move(c));
}

Coords XYQuotientRing::do_zero() const { return Coords(2 * n_ + 1, 0); }

Coords XYQuotientRing::do_one() const {
  Coords c = do_zero();
  c[0] = 1;
  return c;
}

Coords XYQuotientRing::do_add(const Coords& a, const Coords& b) const {
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod(a[i] + b[i], m_);
  return c;
}

Coords XYQuotientRing::do_neg(const Coords& a) const {
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod(-a[i], m_);
  return c;
}

Coords XYQuotientRing::do_mul(const Coords& a, const Coords& b) const {
  Coords c = do_zero();
  c[0] = mulmod(a[0], b[0], m_);
  // Each block: coefficient of v^k for v = x (offset 0) or v = y (offset n).
  for (int offset : {0, n_}) {
    auto at = [&](const Coords& v, int k) { return k == 0 ? v[0] : v[offset + k]; };
    for (int k = 1; k <= n_; ++k) {
      std::int64_t s = 0;
      for (int i = 0; i <= k; ++i) s += mulmod(at(a, i), at(b, k - i), m_);
      c[offset + k] = mod(s, m_);
    }
  }
  return c;
}

std::string XYQuotientRing::do_format(const Coords& a) const {
  std::string out;
  auto term = [&](std::int64_t coeff, const std::string& var) {
    if (!coeff) return;
    if (!out.empty()) out += "+";
    if (var.empty()) {
      out += std::to_string(coeff);
    } else {
      if (coeff != 1) out += std::to_string(coeff) + "*";
      out += var;
    }
  };
  term(a[0], "");
  for (int k = 1; k <= n_; ++k) term(a[k], k == 1 ? "x" : "x^" + std::to_string(k));
  for (int k = 1; k <= n_; ++k) term(a[n_ + k], k == 1 ? "y" : "y^" + std::to_string(k));
  return out.empty() ? "0" : out;
}

Coords XYQuotientRing::do_parse(std::string_view text) const {
  Coords c = do_zero();
  for (auto& raw : split_top_level(text, '+')) {
    std::string t = trim(raw);
    if (t.empty()) throw SpecError("empty term in '" + std::string(text) + "'");
    std::int64_t coeff = 1;
    if (auto star = t.find('*'); star != std::string::npos) {
      coeff = parse_integer(t.substr(0, star));
      t = trim(t.substr(star + 1));
    } else if (t[0] != 'x' && t[0] != 'y') {
      c[0] = mod(c[0] + parse_integer(t), m_);
      continue;
    }
    if (t.empty() || (t[0] != 'x' && t[0] != 'y')) throw SpecError("bad term '" + std::string(raw) + "'");
    int k = 1;
    if (t.size() > 1) {
      if (t[1] != '^') throw SpecError("bad term '" + std::string(raw) + "'");
      k = static_cast<int>(parse_integer(t.substr(2)));
    }
    if (k < 0) throw SpecError("negative exponent in '" + std::string(raw) + "'");
    if (k == 0) {
      c[0] = mod(c[0] + coeff, m_);
    } else if (k <= n_) {
      auto& slot = c[(t[0] == 'x' ? 0 : n_) + k];
      slot = mod(slot + coeff, m_);
    }
  }
  return c;
}

std::optional<Coords> XYQuotientRing::do_inverse(const Coords& a) const {
  auto a0_inv = inverse_mod(a[0], m_);
  if (!a0_inv) return std::nullopt;
  // (a0 + r)^{-1} = a0^{-1} * sum_k (-a0^{-1} r)^k; r^{N+1} = 0 here.
  Coords u = a;
  u[0] = 0;
  Coords scale = do_zero();
  scale[0] = *a0_inv;
  Coords step = do_neg(do_mul(scale, u));
  Coords term = do_one();
  Coords sum = do_one();
  for (int k = 1; k <= n_; ++k) {
    term = do_mul(term, step);
    sum = do_add(sum, term);
  }
  return do_mul(scale, sum);
}

std::vector<Coords> XYQuotientRing::do_scope() const {
  const int half = n_ / 2;
  const int digits = 1 + 2 * half;
  std::size_t count = 1;
  for (int i = 0; i < digits; ++i) {
    count *= static_cast<std::size_t>(m_);
    if (count > (std::size_t{1} << 16)) throw NonEnumerableError(name() + ": scope too large");
  }
  std::vector<Coords> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    Coords c = do_zero();
    std::size_t v = code;
    c[0] = static_cast<std::int64_t>(v % m_);
    v /= m_;
    for (int k = 1; k <= half; ++k, v /= m_) c[k] = static_cast<std::int64_t>(v % m_);
    for (int k = 1; k <= half; ++k, v /= m_) c[n_ + k] = static_cast<std::int64_t>(v % m_);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> XYQuotientRing::do_profile(const Coords& a) const {
  int dx = 0, dy = 0;
  for (int k = 1; k <= n_; ++k) {
    if (a[k]) dx = k;
    if (a[n_ + k]) dy = k;
  }
  return {dx, dy};
}

Coords XYQuotientRing::do_random(std::mt19937_64& rng) const {
  Coords c(2 * n_ + 1);
  for (auto& v : c) v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(m_));
  return c;
}

// ---------------------------------------------------------------------------- construction

namespace {

std::vector<std::size_t> closure_indices(const FiniteTables& t, std::vector<std::size_t> seed, bool multiplicative) {
  std::vector<char> in(t.size, 0);
  std::vector<std::size_t> members;
  auto push = [&](std::size_t i) {
    if (!in[i]) {
      in[i] = 1;
      members.push_back(i);
    }
  };
  for (auto s : seed) push(s);
  for (std::size_t done = 0; done < members.size(); ++done) {
    const std::size_t a = members[done];
    push(t.neg[a]);
    for (std::size_t j = 0; j <= done; ++j) {
      const std::size_t b = members[j];
      push(t.plus(a, b));
      if (multiplicative) {
        push(t.times(a, b));
        push(t.times(b, a));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

namespace {

std::mutex intern_mutex;
std::map<std::string, RingHandle> interned;

std::string intern_key(const std::string& spec_text, const ConstructOptions& options) {
  return spec_text + "|" + std::to_string(options.exhaustive_axiom_bound) + "|" +
         std::to_string(options.sampled_triples) + "|" + std::to_string(options.seed);
}

}  // namespace

RingHandle construct_ring(const RingSpec& spec, const ConstructOptions& options) {
  // Rings are immutable, so equal specs share one handle and their elements combine.
  const std::string key = intern_key(spec.to_string(), options);
  {
    std::lock_guard lock(intern_mutex);
    if (auto it = interned.find(key); it != interned.end()) return it->second;
  }
  RingHandle built = construct_ring_uncached(spec, options);
  std::lock_guard lock(intern_mutex);
  RingHandle canonical = interned.emplace(intern_key(built->name(), options), built).first->second;
  interned.emplace(key, canonical);
  return canonical;
}

RingHandle construct_ring_uncached(const RingSpec& spec, const ConstructOptions& options) {
  std::shared_ptr<Ring> ring;
  if (auto* z = std::get_if<RingSpec::Zmod>(&spec.kind)) {
    if (z->n < 2) throw SpecError("zmod requires n >= 2, got " + std::to_string(z->n));
    if (z->n > (std::int64_t{1} << 20)) throw SpecError("zmod modulus too large");
    ring = std::make_shared<ZmodRing>(spec);
  } else if (auto* g = std::get_if<RingSpec::Galois>(&spec.kind)) {
    if (!is_prime(g->p)) throw SpecError("gf requires a prime characteristic, got " + std::to_string(g->p));
    if (g->k < 1) throw SpecError("gf requires k >= 1");
    RingSpec canonical = spec;
    auto& cg = std::get<RingSpec::Galois>(canonical.kind);
    if (cg.modulus.empty()) {
      if (cg.k > 1) cg.modulus = default_modulus(cg.p, cg.k);
    } else {
      if (static_cast<int>(cg.modulus.size()) != cg.k + 1 || cg.modulus.back() != 1) {
        throw SpecError("gf modulus must be monic of degree k: " + spec.to_string());
      }
      for (auto c : cg.modulus)
        if (c < 0 || c >= cg.p) throw SpecError("gf modulus coefficient out of range: " + spec.to_string());
      if (!is_irreducible_mod_p(cg.modulus, cg.p)) throw SpecError("gf modulus is reducible: " + spec.to_string());
    }
    if (power_size(cg.p, cg.k) > (std::size_t{1} << 20)) throw SpecError("gf field too large");
    // Degree-one fields print without a modulus.
    std::vector<std::int64_t> modulus = cg.k == 1 ? std::vector<std::int64_t>{0, 1} : cg.modulus;
    if (cg.k == 1) cg.modulus.clear();
    ring = std::make_shared<GaloisRing>(canonical, cg.p, cg.k, std::move(modulus));
  } else if (auto* p = std::get_if<RingSpec::Product>(&spec.kind)) {
    std::vector<RingHandle> factors;
    RingSpec canonical{RingSpec::Product{}};
    for (auto& f : p->factors) {
      factors.push_back(construct_ring(f, options));
      std::get<RingSpec::Product>(canonical.kind).factors.push_back(factors.back()->spec());
    }
    ring = std::make_shared<ProductRing>(canonical, std::move(factors));
  } else if (auto* s = std::get_if<RingSpec::Subring>(&spec.kind)) {
    auto parent = construct_ring(*s->parent, options);
    std::vector<Element> gens;
    for (auto& g : s->generators) gens.push_back(parent->parse(g));
    return make_subring(parent, gens, options);
  } else if (auto* q = std::get_if<RingSpec::Quotient>(&spec.kind)) {
    auto parent = construct_ring(*q->parent, options);
    std::vector<std::size_t> gens;
    for (auto& g : q->generators) gens.push_back(parent->index(parent->parse(g)));
    return make_quotient(parent, ideal_generated(*parent, gens), options);
  } else if (auto* ts = std::get_if<RingSpec::TruncatedSeries>(&spec.kind)) {
    if (ts->precision < 1) throw SpecError("tser requires precision N >= 1");
    auto base = construct_ring(*ts->base, options);
    if (!base->is_finite()) throw SpecError("tser base must be a finite ring, got " + base->name());
    RingSpec canonical{RingSpec::TruncatedSeries{std::make_shared<const RingSpec>(base->spec()), ts->precision}};
    ring = std::make_shared<TruncatedSeriesRing>(canonical, base, ts->precision);
  } else if (auto* xy = std::get_if<RingSpec::XYQuotient>(&spec.kind)) {
    if (xy->precision < 1) throw SpecError("xyq requires precision N >= 1");
    auto base = construct_ring(*xy->base, options);
    RingSpec canonical{RingSpec::XYQuotient{std::make_shared<const RingSpec>(base->spec()), xy->precision}};
    ring = std::make_shared<XYQuotientRing>(canonical, base, xy->precision);
  }
  static_cast<Ring&>(*ring).validate(options);
  return ring;
}

std::vector<std::size_t> ideal_generated(const Ring& ring, const std::vector<std::size_t>& generators) {
  const auto& t = ring.tables();
  std::vector<std::size_t> seed{t.zero};
  for (auto gi : generators)
    for (std::size_t r = 0; r < t.size; ++r)
      for (std::size_t s = 0; s < t.size; ++s) seed.push_back(t.times(t.times(r, gi), s));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  return closure_indices(t, seed, false);
}

std::shared_ptr<const SubRing> make_subring(const RingHandle& parent, const std::vector<Element>& generators,
                                            const ConstructOptions& options) {
  const auto& t = parent->tables();
  std::vector<std::size_t> seed{t.zero, t.one};
  std::vector<std::string> canonical_gens;
  for (auto& g : generators) {
    seed.push_back(parent->index(g));
    canonical_gens.push_back(parent->format(g));
  }
  auto members = closure_indices(t, seed, true);
  RingSpec canonical{RingSpec::Subring{std::make_shared<const RingSpec>(parent->spec()), canonical_gens}};
  auto ring = std::make_shared<SubRing>(canonical, parent, std::move(members));
  static_cast<Ring&>(*ring).validate(options);
  return ring;
}

std::shared_ptr<const QuotientRing> make_quotient(const RingHandle& parent, const std::vector<std::size_t>& ideal,
                                                  const ConstructOptions& options) {
  const auto& t = parent->tables();
  std::vector<char> in(t.size, 0);
  for (auto i : ideal) in[i] = 1;
  for (auto a : ideal) {
    for (auto b : ideal)
      if (!in[t.plus(a, b)]) throw SpecError("not an ideal: not closed under addition");
    for (std::size_t r = 0; r < t.size; ++r)
      if (!in[t.times(r, a)] || !in[t.times(a, r)]) throw SpecError("not an ideal: not closed under multiplication");
  }
  if (!in[t.zero]) throw SpecError("not an ideal: missing zero");
  // Smallest generating set, greedily, for the canonical spec.
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{t.zero};
  for (auto i : ideal) {
    if (std::binary_search(span.begin(), span.end(), i)) continue;
    gens.push_back(i);
    span = ideal_generated(*parent, gens);
  }
  std::vector<std::string> canonical_gens;
  for (auto g : gens) canonical_gens.push_back(parent->format(parent->at(g)));
  RingSpec canonical{RingSpec::Quotient{std::make_shared<const RingSpec>(parent->spec()), canonical_gens}};
  std::vector<std::size_t> sorted_ideal(ideal);
  std::sort(sorted_ideal.begin(), sorted_ideal.end());
  // Coset representatives: first member of a + I in enumeration order.
  std::vector<std::size_t> rep_of(t.size, t.size), reps;
  for (std::size_t a = 0; a < t.size; ++a) {
    if (rep_of[a] != t.size) continue;
    for (auto i : sorted_ideal) rep_of[t.plus(a, i)] = a;
    reps.push_back(a);
  }
  auto ring = std::make_shared<QuotientRing>(canonical, parent, sorted_ideal, std::move(rep_of), std::move(reps));
  static_cast<Ring&>(*ring).validate(options);
  return ring;
}

RingHandle construct_ring(std::string_view spec_text) { return construct_ring(RingSpec::parse(spec_text)); }

}  // namespace skewarch
