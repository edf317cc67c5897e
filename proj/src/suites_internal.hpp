#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewarch/suites.hpp"

namespace skewarch::detail {

/// One registry entry under one configuration, with the expensive probes cached.
class EntryContext {
 public:
  EntryContext(ResolvedEntry entry, const RunConfig& config) : entry_(std::move(entry)), config_(config) {}

  const RingHandle& ring() const { return entry_.ring; }
  const EndoHandle& endo() const { return entry_.endo; }
  const RunConfig& config() const { return config_; }
  ProbeConfig probe() const { return {config_.precision, config_.depth, config_.budget, config_.seed}; }

  const ClassificationReport& classification();
  /// Right Archimedean falsifier at the configured depth.
  const Verdict& falsifier();
  const Verdict& sampler();

 private:
  ResolvedEntry entry_;
  RunConfig config_;
  std::optional<ClassificationReport> classification_;
  std::optional<Verdict> falsifier_;
  std::optional<Verdict> sampler_;
};

/// Copy of `v` under another suite name.
Verdict renamed(Verdict v, std::string suite);

/// Folds per-instance verdicts into one: the first failure wins, otherwise holds when
/// any instance holds, otherwise the status of the first instance.
Verdict aggregate(std::string suite, const std::vector<Verdict>& parts, const std::string& what,
                  std::vector<std::string> tags);

using SuiteFn = std::vector<Verdict> (*)(EntryContext&);

std::vector<Verdict> suite_arithmetic(EntryContext& ctx);
std::vector<Verdict> suite_lemma_2_3(EntryContext& ctx);
std::vector<Verdict> suite_prop_2_2(EntryContext& ctx);
std::vector<Verdict> suite_remark_2_4(EntryContext& ctx);
std::vector<Verdict> suite_prop_3_1(EntryContext& ctx);
std::vector<Verdict> suite_cor_3_2(EntryContext& ctx);
std::vector<Verdict> suite_thm_3_3(EntryContext& ctx);
std::vector<Verdict> suite_thm_3_4(EntryContext& ctx);
std::vector<Verdict> suite_prop_4_1(EntryContext& ctx);
std::vector<Verdict> suite_lemma_4_2(EntryContext& ctx);
std::vector<Verdict> suite_lemma_4_3(EntryContext& ctx);
std::vector<Verdict> suite_thm_4_4(EntryContext& ctx);
std::vector<Verdict> suite_thm_4_5(EntryContext& ctx);
std::vector<Verdict> suite_cor_4_6(EntryContext& ctx);
std::vector<Verdict> suite_prop_4_7(EntryContext& ctx);
std::vector<Verdict> suite_examples_4_8_9(EntryContext& ctx);
std::vector<Verdict> suite_classify(EntryContext& ctx);
std::vector<Verdict> suite_falsify(EntryContext& ctx);

}  // namespace skewarch::detail
