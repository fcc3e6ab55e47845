// arglab :: postulate checkers and exhaustive counterexample search
//
// The four postulates:
//   collective rationality  the outcome is a complete labeling;
//   compatibility           no outcome label is in where a voter said out or
//                           out where a voter said in;
//   unanimity               a label voted by everyone is kept;
//   independence            equal votes on an argument across two profiles
//                           give it equal outcome labels.
//
// admissible_outcome is the weakened rationality cell used for the credulous
// operator, whose guarantee stops at admissibility.
//
// search_violation sweeps every profile of complete ballots (and every
// profile pair, for independence) over the framework catalog, within the
// given bounds, and reports the first violation in a fixed enumeration
// order: catalog front to back, voter count ascending, profile index
// ascending with voter 1 as the most significant digit. The sweep is
// sharded across threads; shards report the smallest violating index, so
// the witness does not depend on scheduling.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arglab/aggregation.hpp"
#include "arglab/catalog.hpp"
#include "arglab/detail/parallel.hpp"

namespace arglab {

struct RuleId {
  enum class Kind { Awpr, Sceptical, Credulous, SuperCredulous, Supermajority };

  Kind kind = Kind::Awpr;
  int threshold = 0;  // supermajority only

  static RuleId awpr() { return {Kind::Awpr, 0}; }
  static RuleId so() { return {Kind::Sceptical, 0}; }
  static RuleId co() { return {Kind::Credulous, 0}; }
  static RuleId sco() { return {Kind::SuperCredulous, 0}; }
  static RuleId supermajority(int k) { return {Kind::Supermajority, k}; }

  std::string name() const {
    switch (kind) {
      case Kind::Awpr: return "awpr";
      case Kind::Sceptical: return "so";
      case Kind::Credulous: return "co";
      case Kind::SuperCredulous: return "sco";
      case Kind::Supermajority: return "supermajority(" + std::to_string(threshold) + ")";
    }
    return "?";
  }

  friend bool operator==(const RuleId&, const RuleId&) = default;
};

inline std::optional<RuleId> rule_from_name(std::string_view name, int supermajority_k = 0) {
  if (name == "awpr") return RuleId::awpr();
  if (name == "so") return RuleId::so();
  if (name == "co") return RuleId::co();
  if (name == "sco") return RuleId::sco();
  if (name == "supermajority") return RuleId::supermajority(supermajority_k);
  return std::nullopt;
}

// Applies the rule, or nullopt where it is undefined: a plurality tie for
// awpr, or a threshold outside [majority, N] for supermajority.
inline std::optional<Labeling> apply_rule(const RuleId& rule, const LabelingProfile& profile) {
  switch (rule.kind) {
    case RuleId::Kind::Awpr: {
      AggregationOutcome o = awpr(profile);
      if (is_tie(o)) return std::nullopt;
      return std::get<Labeling>(std::move(o));
    }
    case RuleId::Kind::Sceptical:
      return sceptical(profile);
    case RuleId::Kind::Credulous:
      return credulous(profile);
    case RuleId::Kind::SuperCredulous:
      return super_credulous(profile);
    case RuleId::Kind::Supermajority: {
      const int n = static_cast<int>(profile.voter_count());
      if (rule.threshold < majority_threshold(n) || rule.threshold > n) return std::nullopt;
      return std::get<Labeling>(supermajority(profile, rule.threshold));
    }
  }
  return std::nullopt;
}

inline Labeling apply_rule_or_throw(const RuleId& rule, const LabelingProfile& profile) {
  auto outcome = apply_rule(rule, profile);
  if (!outcome)
    throw RuleUndefinedError("rule " + rule.name() + " is undefined on this profile");
  return *std::move(outcome);
}

enum class Postulate {
  CollectiveRationality,
  Compatibility,
  Unanimity,
  Independence,
  AdmissibleOutcome,
};

constexpr std::string_view to_string(Postulate p) {
  switch (p) {
    case Postulate::CollectiveRationality: return "collective_rationality";
    case Postulate::Compatibility: return "compatibility";
    case Postulate::Unanimity: return "unanimity";
    case Postulate::Independence: return "independence";
    case Postulate::AdmissibleOutcome: return "admissible_outcome";
  }
  return "?";
}

namespace detail {

// First argument whose legality clause fails, if any.
inline std::optional<std::size_t> first_illegal_argument(const ArgumentationFramework& af,
                                                         const Labeling& l,
                                                         bool complete_clauses) {
  for (std::size_t a = 0; a < af.argument_count(); ++a) {
    const auto& ds = af.defeaters_of(a);
    if (l[a] == Label::In) {
      for (std::size_t d : ds)
        if (l[d] != Label::Out) return a;
    } else if (l[a] == Label::Out) {
      bool has_in = false;
      for (std::size_t d : ds)
        if (l[d] == Label::In) { has_in = true; break; }
      if (!has_in) return a;
    } else if (complete_clauses) {
      bool has_undec = false, has_in = false;
      for (std::size_t d : ds) {
        if (l[d] == Label::In) has_in = true;
        if (l[d] == Label::Undec) has_undec = true;
      }
      if (has_in || !has_undec) return a;
    }
  }
  return std::nullopt;
}

inline std::optional<std::size_t> first_incompatible_argument(const LabelingProfile& profile,
                                                              const Labeling& outcome) {
  for (std::size_t a = 0; a < outcome.size(); ++a)
    for (const Labeling& b : profile.ballots()) {
      if (outcome[a] == Label::In && b[a] == Label::Out) return a;
      if (outcome[a] == Label::Out && b[a] == Label::In) return a;
    }
  return std::nullopt;
}

inline std::optional<std::size_t> first_unanimity_break(const LabelingProfile& profile,
                                                        const Labeling& outcome) {
  const auto& ballots = profile.ballots();
  for (std::size_t a = 0; a < outcome.size(); ++a) {
    Label common = ballots.front()[a];
    bool unanimous = true;
    for (const Labeling& b : ballots)
      if (b[a] != common) { unanimous = false; break; }
    if (unanimous && outcome[a] != common) return a;
  }
  return std::nullopt;
}

}  // namespace detail

// Each checker applies the rule once and throws RuleUndefinedError where the
// rule is undefined, so callers can report such profiles instead of counting
// them as violations.

inline bool check_collective_rationality(const RuleId& rule, const LabelingProfile& profile) {
  return is_complete(profile.framework(), apply_rule_or_throw(rule, profile));
}

inline bool check_outcome_admissible(const RuleId& rule, const LabelingProfile& profile) {
  return is_admissible(profile.framework(), apply_rule_or_throw(rule, profile));
}

inline bool check_compatibility(const RuleId& rule, const LabelingProfile& profile) {
  Labeling outcome = apply_rule_or_throw(rule, profile);
  return !detail::first_incompatible_argument(profile, outcome).has_value();
}

inline bool check_unanimity(const RuleId& rule, const LabelingProfile& profile) {
  Labeling outcome = apply_rule_or_throw(rule, profile);
  return !detail::first_unanimity_break(profile, outcome).has_value();
}

inline bool check_independence(const RuleId& rule, const LabelingProfile& first,
                               const LabelingProfile& second) {
  if (!(first.framework() == second.framework()))
    throw MismatchError("independence requires profiles over the same framework");
  if (first.voter_count() != second.voter_count())
    throw MismatchError("independence requires profiles with the same voters");
  Labeling o1 = apply_rule_or_throw(rule, first);
  Labeling o2 = apply_rule_or_throw(rule, second);
  for (std::size_t a = 0; a < o1.size(); ++a) {
    bool same_votes = true;
    for (std::size_t v = 0; v < first.voter_count(); ++v)
      if (first.ballots()[v][a] != second.ballots()[v][a]) { same_votes = false; break; }
    if (same_votes && o1[a] != o2[a]) return false;
  }
  return true;
}

struct SearchBounds {
  std::size_t max_args = 5;  // catalog frameworks with more arguments are skipped
  int max_voters = 3;
};

struct PostulateWitness {
  std::string framework_name;
  ArgumentationFramework framework;
  std::vector<Labeling> ballots;
  std::vector<Labeling> second_ballots;  // independence only
  std::optional<std::size_t> argument;
};

struct PostulateReport {
  enum class Verdict { HoldsOnTestedSpace, Violated };

  RuleId rule;
  Postulate postulate = Postulate::CollectiveRationality;
  Verdict verdict = Verdict::HoldsOnTestedSpace;
  std::optional<PostulateWitness> witness;
  std::uint64_t profiles_checked = 0;   // profiles (pairs, for independence) with the rule defined
  std::uint64_t undefined_skipped = 0;  // profiles (pairs) skipped as rule-undefined
  SearchBounds bounds;
};

constexpr std::string_view to_string(PostulateReport::Verdict v) {
  return v == PostulateReport::Verdict::Violated ? "violated" : "holds_on_tested_space";
}

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Ballot indices of profile `idx`, voter 1 as the most significant digit.
inline std::vector<std::size_t> profile_digits(std::uint64_t idx, std::size_t base, int n) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(n));
  for (int v = n - 1; v >= 0; --v) {
    digits[static_cast<std::size_t>(v)] = static_cast<std::size_t>(idx % base);
    idx /= base;
  }
  return digits;
}

struct SweepSlot {
  std::uint64_t checked = 0;
  std::uint64_t undefined = 0;
  std::optional<std::uint64_t> hit_index;
  std::optional<std::size_t> hit_argument;
};

inline void validate_bounds(const SearchBounds& b) {
  if (b.max_voters < 1 || b.max_voters > 4)
    throw SizeLimitError("max_voters must lie in [1, 4] for an exhaustive sweep");
  if (b.max_args < 1) throw SizeLimitError("max_args must be at least 1");
}

}  // namespace detail

inline PostulateReport search_violation(const RuleId& rule, Postulate postulate,
                                        SearchBounds bounds = {}) {
  detail::validate_bounds(bounds);
  PostulateReport report;
  report.rule = rule;
  report.postulate = postulate;
  report.bounds = bounds;

  for (const CatalogEntry& entry : framework_catalog()) {
    if (entry.framework.argument_count() > bounds.max_args) continue;
    auto af = std::make_shared<const ArgumentationFramework>(entry.framework);
    const std::vector<Labeling> complete = enumerate_complete(*af);
    const std::uint64_t m = complete.size();

    for (int n = 1; n <= bounds.max_voters; ++n) {
      const std::uint64_t profile_count = detail::ipow(m, n);

      auto make_profile = [&](std::uint64_t idx) {
        std::vector<Labeling> ballots;
        ballots.reserve(static_cast<std::size_t>(n));
        for (std::size_t d : detail::profile_digits(idx, m, n)) ballots.push_back(complete[d]);
        return LabelingProfile(af, std::move(ballots));
      };

      if (postulate != Postulate::Independence) {
        auto ranges = detail::plan_shards(profile_count, detail::default_worker_count());
        std::vector<detail::SweepSlot> slots(ranges.size());
        detail::run_shards(ranges.size(), [&](std::size_t s) {
          detail::SweepSlot& slot = slots[s];
          for (std::uint64_t idx = ranges[s].first; idx < ranges[s].second; ++idx) {
            LabelingProfile p = make_profile(idx);
            std::optional<Labeling> outcome = apply_rule(rule, p);
            if (!outcome) {
              ++slot.undefined;
              continue;
            }
            ++slot.checked;
            std::optional<std::size_t> bad;
            switch (postulate) {
              case Postulate::CollectiveRationality:
                bad = detail::first_illegal_argument(*af, *outcome, true);
                break;
              case Postulate::AdmissibleOutcome:
                bad = detail::first_illegal_argument(*af, *outcome, false);
                break;
              case Postulate::Compatibility:
                bad = detail::first_incompatible_argument(p, *outcome);
                break;
              case Postulate::Unanimity:
                bad = detail::first_unanimity_break(p, *outcome);
                break;
              case Postulate::Independence:
                break;
            }
            if (bad) {
              slot.hit_index = idx;
              slot.hit_argument = bad;
              break;
            }
          }
        });
        for (const auto& slot : slots) {
          report.profiles_checked += slot.checked;
          report.undefined_skipped += slot.undefined;
        }
        for (const auto& slot : slots) {
          if (!slot.hit_index) continue;
          report.verdict = PostulateReport::Verdict::Violated;
          report.witness = PostulateWitness{entry.name, entry.framework,
                                            make_profile(*slot.hit_index).ballots(),
                                            {}, slot.hit_argument};
          return report;
        }
      } else {
        // Outcomes once per profile, then the pair sweep compares votes
        // argument-wise.
        std::vector<std::optional<Labeling>> outcomes;
        outcomes.reserve(static_cast<std::size_t>(profile_count));
        std::vector<std::vector<std::size_t>> digits;
        digits.reserve(static_cast<std::size_t>(profile_count));
        for (std::uint64_t idx = 0; idx < profile_count; ++idx) {
          outcomes.push_back(apply_rule(rule, make_profile(idx)));
          digits.push_back(detail::profile_digits(idx, m, n));
        }

        const std::uint64_t pair_count = profile_count * profile_count;
        auto ranges = detail::plan_shards(pair_count, detail::default_worker_count());
        std::vector<detail::SweepSlot> slots(ranges.size());
        detail::run_shards(ranges.size(), [&](std::size_t s) {
          detail::SweepSlot& slot = slots[s];
          for (std::uint64_t pair = ranges[s].first; pair < ranges[s].second; ++pair) {
            const std::uint64_t i = pair / profile_count;
            const std::uint64_t j = pair % profile_count;
            if (!outcomes[i] || !outcomes[j]) {
              ++slot.undefined;
              continue;
            }
            ++slot.checked;
            const Labeling& oi = *outcomes[i];
            const Labeling& oj = *outcomes[j];
            for (std::size_t a = 0; a < af->argument_count(); ++a) {
              if (oi[a] == oj[a]) continue;
              bool same_votes = true;
              for (int v = 0; v < n; ++v) {
                const std::size_t vi = digits[i][static_cast<std::size_t>(v)];
                const std::size_t vj = digits[j][static_cast<std::size_t>(v)];
                if (complete[vi][a] != complete[vj][a]) { same_votes = false; break; }
              }
              if (same_votes) {
                slot.hit_index = pair;
                slot.hit_argument = a;
                break;
              }
            }
            if (slot.hit_index) break;
          }
        });
        for (const auto& slot : slots) {
          report.profiles_checked += slot.checked;
          report.undefined_skipped += slot.undefined;
        }
        for (const auto& slot : slots) {
          if (!slot.hit_index) continue;
          const std::uint64_t i = *slot.hit_index / profile_count;
          const std::uint64_t j = *slot.hit_index % profile_count;
          report.verdict = PostulateReport::Verdict::Violated;
          report.witness = PostulateWitness{entry.name, entry.framework,
                                            make_profile(i).ballots(),
                                            make_profile(j).ballots(), slot.hit_argument};
          return report;
        }
      }
    }
  }
  return report;
}

// One matrix row: the four postulates, plus the admissibility cell for the
// credulous operator (its rationality guarantee).
inline std::vector<PostulateReport> postulate_row(const RuleId& rule, SearchBounds bounds = {}) {
  std::vector<Postulate> postulates{Postulate::CollectiveRationality, Postulate::Compatibility,
                                    Postulate::Unanimity, Postulate::Independence};
  if (rule.kind == RuleId::Kind::Credulous) postulates.push_back(Postulate::AdmissibleOutcome);
  std::vector<PostulateReport> row;
  row.reserve(postulates.size());
  for (Postulate p : postulates) row.push_back(search_violation(rule, p, bounds));
  return row;
}

// Re-runs the reported violation on its own witness. True when the witness
// still demonstrates the violation.
inline bool revalidate(const PostulateReport& report) {
  if (report.verdict != PostulateReport::Verdict::Violated || !report.witness) return false;
  const PostulateWitness& w = *report.witness;
  auto af = std::make_shared<const ArgumentationFramework>(w.framework);
  LabelingProfile first(af, w.ballots);
  try {
    switch (report.postulate) {
      case Postulate::CollectiveRationality:
        return !check_collective_rationality(report.rule, first);
      case Postulate::AdmissibleOutcome:
        return !check_outcome_admissible(report.rule, first);
      case Postulate::Compatibility:
        return !check_compatibility(report.rule, first);
      case Postulate::Unanimity:
        return !check_unanimity(report.rule, first);
      case Postulate::Independence: {
        LabelingProfile second(af, w.second_ballots);
        return !check_independence(report.rule, first, second);
      }
    }
  } catch (const RuleUndefinedError&) {
    return false;
  }
  return false;
}

}  // namespace arglab
