#include <algorithm>

#include "props_internal.hpp"

namespace skewarch {

std::optional<bool> ClassificationReport::predicted(const std::string& target, const std::string& property) const {
  for (const auto& p : predictions)
    if (p.target == target && p.property == property) return p.value;
  return std::nullopt;
}

ClassificationReport classify(const EndoHandle& endo) {
  const RingHandle& ring = endo->ring();
  ClassificationReport rep;
  rep.ring = ring->name();
  rep.endo = endo->name();
  auto from_check = [](const Check& c) { return Condition{c.value, c.exact}; };
  auto from_pred = [](const EndoPredicate& p) { return Condition{p.value, p.exact}; };
  auto from_verdict = [](const Verdict& v) {
    return Condition{detail::is_holds(v.status), v.status == Status::holds || v.status == Status::fails};
  };
  rep.reduced = from_check(is_reduced(*ring));
  rep.domain = from_check(is_domain(*ring));
  rep.right_archimedean = from_verdict(is_archimedean(ring, Side::right));
  rep.left_archimedean = from_verdict(is_archimedean(ring, Side::left));
  rep.injective = from_pred(is_injective(*endo));
  rep.rigid = from_pred(is_rigid(*endo));
  rep.compatible = from_pred(is_compatible(*endo));
  rep.preserves_nonunits = from_pred(preserves_nonunits(*endo));

  const bool id = endo->is_identity();
  const bool ra = rep.right_archimedean.value, la = rep.left_archimedean.value;
  const bool dom = rep.domain.value, inj = rep.injective.value, pres = rep.preserves_nonunits.value;
  const bool rigid = rep.rigid.value, red = rep.reduced.value;
  const std::string poly = "R[x;a]", series = "R[[x;a]]";
  auto& p = rep.predictions;
  if (id) {
    p.push_back({poly, "reduced right Archimedean", ra && dom, "Corollary 3.5"});
    p.push_back({poly, "reduced left Archimedean", la && dom, "Corollary 3.5"});
    p.push_back({series, "reduced right Archimedean", red && ra, "Corollary 4.6"});
    p.push_back({series, "reduced left Archimedean", red && la, "Corollary 4.6"});
  } else {
    p.push_back({poly, "reduced right Archimedean", ra && dom && inj && pres, "Theorem 3.3"});
    p.push_back({poly, "reduced left Archimedean", la && dom && inj, "Theorem 3.4"});
    p.push_back({series, "reduced right Archimedean", ra && rigid && pres, "Theorem 4.4"});
    p.push_back({series, "reduced left Archimedean", la && rigid, "Theorem 4.5"});
  }
  p.push_back({series, "right Archimedean domain", ra && dom && inj && pres, "Theorem 1.2"});
  p.push_back({series, "left Archimedean domain", la && dom && inj, "Theorem 1.2"});
  return rep;
}

Verdict to_verdict(const ClassificationReport& rep) {
  Json w;
  w["ring"] = rep.ring;
  w["endo"] = rep.endo;
  Json conds;
  bool exact = true;
  auto put = [&](const char* name, const Condition& c) {
    conds[name] = c.value;
    exact = exact && c.exact;
  };
  put("reduced", rep.reduced);
  put("domain", rep.domain);
  put("right_archimedean", rep.right_archimedean);
  put("left_archimedean", rep.left_archimedean);
  put("alpha_injective", rep.injective);
  put("alpha_rigid", rep.rigid);
  put("alpha_compatible", rep.compatible);
  put("alpha_preserves_nonunits", rep.preserves_nonunits);
  w["conditions"] = conds;
  w["conditions_exact"] = exact;
  Json preds = Json::array();
  std::vector<std::string> positive, all;
  auto add_tag = [](std::vector<std::string>& v, const std::string& t) {
    if (std::find(v.begin(), v.end(), t) == v.end()) v.push_back(t);
  };
  for (const auto& p : rep.predictions) {
    Json j;
    j["target"] = p.target;
    j["property"] = p.property;
    j["value"] = p.value;
    j["tag"] = p.tag;
    preds.push_back(j);
    add_tag(all, p.tag);
    if (p.value) add_tag(positive, p.tag);
  }
  w["predictions"] = preds;
  const std::string basis = exact ? "conditions decided by exhaustive scans"
                                  : "conditions decided by scope-exact scans and theorems on a truncated model";
  if (!positive.empty()) {
    return make_verdict("classify", Status::holds_by_theorem,
                        basis + "; " + std::to_string(positive.size()) + " theorem(s) give positive predictions",
                        std::move(w), positive);
  }
  return make_verdict("classify", Status::hypothesis_not_met, basis + "; no characterization predicts a positive property",
                      std::move(w), all);
}

}  // namespace skewarch
