#include "skewarch/spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "skewarch/error.hpp"

namespace skewarch {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

// "<inner>)" with matching outer parenthesis; returns inner.
std::string_view strip_call(std::string_view text, std::string_view head) {
  if (!starts_with(text, head) || text.empty() || text.back() != ')') {
    throw SpecError("malformed ring spec '" + std::string(text) + "'");
  }
  return text.substr(head.size(), text.size() - head.size() - 1);
}

int parse_precision(std::string_view text) {
  const std::string t = trim(text);
  if (!starts_with(t, "N=")) {
    throw SpecError("expected 'N=<precision>', got '" + t + "'");
  }
  return static_cast<int>(parse_integer(std::string_view(t).substr(2)));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Comma-separated ring specs. A gf modulus is itself comma-separated, so bare
// integers are glued back onto the preceding piece.
std::vector<std::string> split_specs(std::string_view body) {
  std::vector<std::string> out;
  for (auto& piece : split_top_level(body, ',')) {
    const std::string t = trim(piece);
    const bool digits = !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
    if (digits && !out.empty()) {
      out.back() += "," + t;
    } else {
      out.push_back(t);
    }
  }
  return out;
}

// "sub(<spec>;g1,g2)" style bodies.
std::pair<RingSpec, std::vector<std::string>> parse_parent_and_generators(std::string_view body) {
  auto parts = split_top_level(body, ';');
  if (parts.size() != 2) {
    throw SpecError("expected '<spec>;<generators>' in '" + std::string(body) + "'");
  }
  std::vector<std::string> gens;
  if (!trim(parts[1]).empty()) {
    for (auto& g : split_top_level(parts[1], ',')) gens.push_back(trim(g));
  }
  return {RingSpec::parse(parts[0]), std::move(gens)};
}

}  // namespace

std::string trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::int64_t parse_integer(std::string_view text) {
  const std::string t = trim(text);
  std::int64_t value = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && t[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc() || ptr != last) {
    throw SpecError("expected an integer, got '" + t + "'");
  }
  return value;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) throw SpecError("unbalanced brackets in '" + std::string(text) + "'");
    if (c == sep && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (depth != 0) throw SpecError("unbalanced brackets in '" + std::string(text) + "'");
  out.push_back(current);
  return out;
}

RingSpec RingSpec::parse(std::string_view raw) {
  const std::string owned = trim(raw);
  std::string_view text = owned;
  if (starts_with(text, "zmod:")) {
    return RingSpec{Zmod{parse_integer(text.substr(5))}};
  }
  if (starts_with(text, "gf:")) {
    auto parts = split_top_level(text.substr(3), ':');
    if (parts.size() != 2 && parts.size() != 3) {
      throw SpecError("expected gf:<p>:<k>[:<modulus>], got '" + owned + "'");
    }
    Galois g{parse_integer(parts[0]), static_cast<int>(parse_integer(parts[1])), {}};
    if (parts.size() == 3) {
      for (auto& c : split_top_level(parts[2], ',')) g.modulus.push_back(parse_integer(c));
    }
    return RingSpec{g};
  }
  if (starts_with(text, "prod(")) {
    Product p;
    for (auto& f : split_specs(strip_call(text, "prod("))) p.factors.push_back(parse(f));
    if (p.factors.empty()) throw SpecError("empty product");
    return RingSpec{std::move(p)};
  }
  if (starts_with(text, "sub(")) {
    auto [parent, gens] = parse_parent_and_generators(strip_call(text, "sub("));
    return RingSpec{Subring{std::make_shared<const RingSpec>(std::move(parent)), std::move(gens)}};
  }
  if (starts_with(text, "quot(")) {
    auto [parent, gens] = parse_parent_and_generators(strip_call(text, "quot("));
    return RingSpec{Quotient{std::make_shared<const RingSpec>(std::move(parent)), std::move(gens)}};
  }
  if (starts_with(text, "tser(")) {
    auto parts = split_specs(strip_call(text, "tser("));
    if (parts.size() != 2) throw SpecError("expected tser(<spec>,N=<precision>), got '" + owned + "'");
    return RingSpec{TruncatedSeries{std::make_shared<const RingSpec>(parse(parts[0])), parse_precision(parts[1])}};
  }
  if (starts_with(text, "xyq:")) {
    const auto pos = text.rfind(":N=");
    if (pos == std::string_view::npos || pos < 4) {
      throw SpecError("expected xyq:<base>:N=<precision>, got '" + owned + "'");
    }
    return RingSpec{XYQuotient{std::make_shared<const RingSpec>(parse(text.substr(4, pos - 4))),
                               parse_precision(text.substr(pos + 1))}};
  }
  throw SpecError("unknown ring spec '" + owned + "'");
}

std::string RingSpec::to_string() const {
  struct Printer {
    std::string operator()(const Zmod& z) const { return "zmod:" + std::to_string(z.n); }
    std::string operator()(const Galois& g) const {
      std::string out = "gf:" + std::to_string(g.p) + ":" + std::to_string(g.k);
      if (!g.modulus.empty()) {
        std::vector<std::string> cs;
        for (auto c : g.modulus) cs.push_back(std::to_string(c));
        out += ":" + join(cs, ",");
      }
      return out;
    }
    std::string operator()(const Product& p) const {
      std::vector<std::string> fs;
      for (auto& f : p.factors) fs.push_back(f.to_string());
      return "prod(" + join(fs, ",") + ")";
    }
    std::string operator()(const Subring& s) const {
      return "sub(" + s.parent->to_string() + ";" + join(s.generators, ",") + ")";
    }
    std::string operator()(const Quotient& q) const {
      return "quot(" + q.parent->to_string() + ";" + join(q.generators, ",") + ")";
    }
    std::string operator()(const TruncatedSeries& t) const {
      return "tser(" + t.base->to_string() + ",N=" + std::to_string(t.precision) + ")";
    }
    std::string operator()(const XYQuotient& x) const {
      return "xyq:" + x.base->to_string() + ":N=" + std::to_string(x.precision);
    }
  };
  return std::visit(Printer{}, kind);
}

}  // namespace skewarch
