#include "skewarch/endo.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <random>
#include <unordered_map>

#include "skewarch/error.hpp"
#include "skewarch/ring_kinds.hpp"

namespace skewarch {

namespace {

std::atomic<std::uint64_t> next_endo_tag{1};

}  // namespace

Endo::Endo(Parts parts)
    : ring_(std::move(parts.ring)),
      name_(std::move(parts.name)),
      tag_(next_endo_tag.fetch_add(1)),
      identity_(parts.identity),
      action_(std::move(parts.action)),
      structural_power_(std::move(parts.structural_power)),
      profile_map_(std::move(parts.profile_map)) {}

std::shared_ptr<const Endo> Endo::build(Parts parts, const EndoOptions& options) {
  std::shared_ptr<Endo> endo(new Endo(std::move(parts)));
  endo->validate(options);
  if (endo->ring_->is_finite() && *endo->ring_->cardinality() <= kMaxTabulated) endo->tabulate(options.cache_depth);
  return endo;
}

void Endo::validate(const EndoOptions& options) const {
  const Ring& r = *ring_;
  auto image = [&](const Element& a) {
    Element b = action_(a);
    if (b.ring_tag != r.tag()) throw EndoError(name_ + " does not map " + r.name() + " into itself");
    return b;
  };
  if (image(r.one()) != r.one()) {
    throw EndoError(name_ + " is not unital: maps 1 to " + r.format(image(r.one())), {r.format(r.one())});
  }
  auto check_pair = [&](const Element& a, const Element& b, const Element& fa, const Element& fb) {
    if (image(r.add(a, b)) != r.add(fa, fb)) {
      throw EndoError(name_ + " is not additive: image of " + r.format(a) + "+" + r.format(b) + " is " +
                          r.format(image(r.add(a, b))) + " but the sum of images is " + r.format(r.add(fa, fb)),
                      {r.format(a), r.format(b)});
    }
    if (image(r.mul(a, b)) != r.mul(fa, fb)) {
      throw EndoError(name_ + " is not multiplicative: image of " + r.format(a) + "*" + r.format(b) + " is " +
                          r.format(image(r.mul(a, b))) + " but the product of images is " + r.format(r.mul(fa, fb)),
                      {r.format(a), r.format(b)});
    }
  };
  if (r.is_finite()) {
    const auto& els = r.elements();
    std::vector<Element> images;
    images.reserve(els.size());
    for (auto& a : els) images.push_back(image(a));
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = 0; j < els.size(); ++j) check_pair(els[i], els[j], images[i], images[j]);
    return;
  }
  std::vector<Element> gens{r.one()};
  if (auto* xy = as_xy_quotient(r)) {
    gens.push_back(xy->x_power(1));
    gens.push_back(xy->y_power(1));
  }
  for (auto& a : gens)
    for (auto& b : gens) check_pair(a, b, image(a), image(b));
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.sampled_pairs; ++i) {
    const Element a = r.random_element(rng), b = r.random_element(rng);
    check_pair(a, b, image(a), image(b));
  }
}

void Endo::tabulate(std::uint64_t depth) {
  const auto& els = ring_->elements();
  std::vector<std::uint32_t> id(els.size()), once(els.size());
  for (std::size_t i = 0; i < els.size(); ++i) {
    id[i] = static_cast<std::uint32_t>(i);
    once[i] = static_cast<std::uint32_t>(ring_->index(action_(els[i])));
  }
  power_tables_.push_back(std::move(id));
  for (std::uint64_t t = 1; t <= depth; ++t) {
    const auto& prev = power_tables_.back();
    std::vector<std::uint32_t> next(els.size());
    for (std::size_t i = 0; i < els.size(); ++i) next[i] = once[prev[i]];
    power_tables_.push_back(std::move(next));
  }
}

Element Endo::apply(const Element& a) const { return power_apply(1, a); }

Element Endo::power_apply(std::uint64_t t, const Element& a) const {
  ring_->check(a);
  if (identity_ || t == 0) return a;
  if (!power_tables_.empty()) {
    const std::uint64_t depth = power_tables_.size() - 1;
    std::size_t idx = ring_->index(a);
    while (t > depth) {
      idx = power_tables_[depth][idx];
      t -= depth;
    }
    return ring_->at(power_tables_[t][idx]);
  }
  if (structural_power_) return structural_power_(t, a);
  Element b = a;
  for (std::uint64_t s = 0; s < t; ++s) b = action_(b);
  return b;
}

std::vector<int> Endo::profile_after(std::uint64_t t, std::vector<int> profile) const {
  if (!profile_map_ || t == 0) return profile;
  return profile_map_(t, std::move(profile));
}

bool Endo::image_faithful(std::uint64_t t, const Element& a) const {
  const auto& limit = ring_->profile_limit();
  if (limit.empty()) return true;
  const auto p = profile_after(t, ring_->degree_profile(a));
  for (std::size_t i = 0; i < limit.size() && i < p.size(); ++i)
    if (p[i] > limit[i]) return false;
  return true;
}

bool Endo::twisted_product_faithful(const Element& a, std::uint64_t t, const Element& b) const {
  if (ring_->profile_limit().empty()) return true;
  return ring_->profiles_fit(ring_->degree_profile(a), profile_after(t, ring_->degree_profile(b)));
}

EndoHandle build_endo(const RingHandle& ring, std::string name, Endo::Action action, const EndoOptions& options) {
  return Endo::build(Endo::Parts{ring, std::move(name), std::move(action), {}, {}, false}, options);
}

EndoHandle identity_endo(const RingHandle& ring) {
  return Endo::build(Endo::Parts{ring, "endo:id", [](const Element& a) { return a; }, {}, {}, true});
}

namespace {

EndoHandle table_endo(const RingHandle& ring, const std::string& path, const EndoOptions& options) {
  if (!ring->is_finite()) throw SpecError("endo:table requires a finite ring, got " + ring->name());
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open endomorphism table '" + path + "'");
  std::unordered_map<std::size_t, Element> map;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto arrow = t.find("->");
    if (arrow == std::string::npos) throw SpecError(path + ":" + std::to_string(lineno) + ": expected 'a -> b'");
    const Element a = ring->parse(t.substr(0, arrow));
    const Element b = ring->parse(t.substr(arrow + 2));
    if (!map.emplace(ring->index(a), b).second) {
      throw SpecError(path + ":" + std::to_string(lineno) + ": " + ring->format(a) + " mapped twice");
    }
  }
  for (const auto& a : ring->elements())
    if (!map.count(ring->index(a))) throw SpecError("endomorphism table does not define " + ring->format(a));
  return build_endo(
      ring, "endo:table:" + path, [ring, map](const Element& a) { return map.at(ring->index(a)); }, options);
}

}  // namespace

EndoHandle build_endo(const RingHandle& ring, std::string_view spec_text, const EndoOptions& options) {
  const std::string text = trim(spec_text);
  if (text == "endo:id") return identity_endo(ring);
  if (text == "endo:frob") {
    auto* gf = as_galois(*ring);
    if (!gf) throw SpecError("endo:frob requires a finite field gf:p:k, got " + ring->name());
    const auto p = static_cast<std::uint64_t>(gf->characteristic());
    return Endo::build(
        Endo::Parts{ring, "endo:frob", [ring, p](const Element& a) { return ring->pow(a, p); }, {}, {}, gf->degree() == 1},
        options);
  }
  if (text == "endo:diag") {
    auto* prod = as_product(*ring);
    if (!prod || prod->factors().size() != 2 || prod->factors()[0]->spec().to_string() != prod->factors()[1]->spec().to_string()) {
      throw SpecError("endo:diag requires a product of two equal factors, got " + ring->name());
    }
    return build_endo(
        ring, "endo:diag",
        [ring, prod](const Element& a) {
          const Element first = prod->component(a, 0);
          return prod->make({first, Element{prod->factors()[1]->tag(), first.coords}});
        },
        options);
  }
  if (text == "endo:xsq") {
    auto* xy = as_xy_quotient(*ring);
    if (!xy) throw SpecError("endo:xsq requires an xyq ring, got " + ring->name());
    Endo::Parts parts{ring,
                      "endo:xsq",
                      [xy](const Element& a) { return xy->square_x_block(a, 1); },
                      [xy](std::uint64_t t, const Element& a) {
                        return xy->square_x_block(a, static_cast<unsigned>(std::min<std::uint64_t>(t, 62)));
                      },
                      [](std::uint64_t t, std::vector<int> p) {
                        if (!p.empty()) {
                          std::int64_t d = p[0];
                          for (std::uint64_t s = 0; s < t && d < (1 << 20); ++s) d *= 2;
                          p[0] = static_cast<int>(std::min<std::int64_t>(d, 1 << 20));
                        }
                        return p;
                      },
                      false};
    return Endo::build(std::move(parts), options);
  }
  if (text.rfind("endo:table:", 0) == 0) return table_endo(ring, text.substr(11), options);
  throw SpecError("unknown endomorphism spec '" + text + "'");
}

// ---------------------------------------------------------------------------- predicates

EndoPredicate is_injective(const Endo& endo) {
  const Ring& r = *endo.ring();
  EndoPredicate out;
  out.exact = r.is_finite();
  std::map<Coords, Element> seen;
  for (const auto& a : r.scope_elements()) {
    if (!endo.image_faithful(1, a)) continue;
    ++out.tested;
    const Element b = endo.apply(a);
    auto [it, inserted] = seen.emplace(b.coords, a);
    if (!inserted) {
      out.value = false;
      out.witness = {a, it->second};
      return out;
    }
  }
  return out;
}

EndoPredicate is_rigid(const Endo& endo) {
  const Ring& r = *endo.ring();
  EndoPredicate out;
  out.exact = r.is_finite();
  for (const auto& a : r.scope_elements()) {
    if (r.is_zero(a) || !endo.image_faithful(1, a) || !endo.twisted_product_faithful(a, 1, a)) continue;
    ++out.tested;
    if (r.is_zero(r.mul(a, endo.apply(a)))) {
      out.value = false;
      out.witness = {a};
      return out;
    }
  }
  return out;
}

EndoPredicate is_compatible(const Endo& endo) {
  const Ring& r = *endo.ring();
  EndoPredicate out;
  out.exact = r.is_finite();
  const auto& scope = r.scope_elements();
  std::vector<Element> images;
  std::vector<char> image_ok;
  images.reserve(scope.size());
  for (const auto& b : scope) {
    images.push_back(endo.apply(b));
    image_ok.push_back(endo.image_faithful(1, b));
  }
  for (const auto& a : scope) {
    const auto pa = r.degree_profile(a);
    for (std::size_t j = 0; j < scope.size(); ++j) {
      const auto& b = scope[j];
      if (!image_ok[j] || !r.profiles_fit(pa, r.degree_profile(b)) || !endo.twisted_product_faithful(a, 1, b)) continue;
      ++out.tested;
      const bool plain = r.is_zero(r.mul(a, b));
      const bool twisted = r.is_zero(r.mul(a, images[j]));
      if (plain != twisted) {
        out.value = false;
        out.witness = {a, b};
        return out;
      }
    }
  }
  return out;
}

EndoPredicate preserves_nonunits(const Endo& endo) {
  const Ring& r = *endo.ring();
  EndoPredicate out;
  out.exact = r.is_finite();
  for (const auto& a : r.scope_elements()) {
    ++out.tested;
    if (r.is_unit(a)) continue;
    const Element b = endo.apply(a);
    if (r.is_unit(b)) {
      out.value = false;
      out.witness = {a, b};
      return out;
    }
  }
  return out;
}

RigidDecomposition rigid_decomposition_check(const Endo& endo) {
  RigidDecomposition d;
  d.rigid = is_rigid(endo);
  d.compatible = is_compatible(endo);
  d.reduced = is_reduced(*endo.ring());
  d.consistent = d.rigid.value == (d.compatible.value && d.reduced.value);
  return d;
}

}  // namespace skewarch
