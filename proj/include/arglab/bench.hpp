// arglab :: scenario bench and divergence census
//
// Six committee scenarios, three on the simple graph (a conclusion A, one
// counterargument B, one counter-counterargument C) and three on the complex
// graph (two independent counterargument pairs B/C and D/E). Ballots are
// recorded as votes on the counterarguments and extended to the unique
// complete labeling consistent with them, so every voter holds a coherent
// position. replicate() contrasts the plurality conclusion with the three
// unanimity-style operators; divergence_census() does the same over every
// voter multiset.

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
#include "arglab/postulates.hpp"

namespace arglab {

struct Scenario {
  std::string id;
  ArgumentationFramework framework;
  std::size_t conclusion = 0;  // always argument "A"
  bool harm = false;           // the conclusion inflicts a personal cost or punishment
  std::string conclusion_text;
  std::string fallback_text;
};

inline const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids{"flu",     "uniform",   "hiring",
                                            "stephen", "excursion", "marconi"};
  return ids;
}

inline Scenario build_scenario(std::string_view id) {
  Scenario s;
  s.id = std::string(id);
  if (id == "flu") {
    s.framework = make_af_s();
    s.harm = false;
    s.conclusion_text = "the government stocks up on medicines against the flu";
    s.fallback_text = "the decision is postponed for further investigation";
  } else if (id == "uniform") {
    s.framework = make_af_s();
    s.harm = true;
    s.conclusion_text = "the school introduces a uniform";
    s.fallback_text = "the decision is deferred to the school principal";
  } else if (id == "hiring") {
    s.framework = make_af_s();
    s.harm = false;
    s.conclusion_text = "the candidate receives a good offer";
    s.fallback_text = "the decision is postponed until further reference letters arrive";
  } else if (id == "stephen") {
    s.framework = make_af_c();
    s.harm = true;
    s.conclusion_text = "there is evidence against the suspect";
    s.fallback_text = "the decision is deferred to the judge";
  } else if (id == "excursion") {
    s.framework = make_af_c();
    s.harm = false;
    s.conclusion_text = "the summer excursion goes to Niagara Falls";
    s.fallback_text = "the decision is deferred to senior management";
  } else if (id == "marconi") {
    s.framework = make_af_c();
    s.harm = true;
    s.conclusion_text = "the footballer is banned for three matches";
    s.fallback_text = "the decision is postponed for further investigation";
  } else {
    throw UnknownScenarioError("unknown scenario '" + std::string(id) + "'");
  }
  s.conclusion = s.framework.require("A");
  return s;
}

struct VoteRatio {
  int majority = 0;
  int minority = 0;

  VoteRatio() = default;
  VoteRatio(int maj, int min) : majority(maj), minority(min) {
    if (majority <= 0) throw Error("majority must be positive");
    if (minority < 0) throw Error("minority must be nonnegative");
    if (majority <= minority) throw Error("majority must exceed minority");
  }

  std::string to_string() const {
    return std::to_string(majority) + ":" + std::to_string(minority);
  }

  friend bool operator==(const VoteRatio&, const VoteRatio&) = default;
};

inline VoteRatio parse_ratio(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 >= text.size())
    throw Error("ratio must look like '6:4'");
  int maj = 0, min = 0;
  try {
    maj = std::stoi(std::string(text.substr(0, colon)));
    min = std::stoi(std::string(text.substr(colon + 1)));
  } catch (const std::exception&) {
    throw Error("ratio must look like '6:4'");
  }
  return VoteRatio(maj, min);
}

// Which side the majority takes on the counterarguments.
enum class MajoritySide { ProConclusion, AntiConclusion };

namespace detail {

// The unique complete labeling that agrees with the given votes.
inline Labeling extend_votes(const ArgumentationFramework& af,
                             const std::vector<std::pair<std::size_t, Label>>& votes) {
  std::optional<Labeling> found;
  for (const Labeling& l : enumerate_complete(af)) {
    bool match = true;
    for (const auto& [arg, lab] : votes)
      if (l[arg] != lab) { match = false; break; }
    if (!match) continue;
    if (found) throw Error("ballot votes extend to more than one complete labeling");
    found = l;
  }
  if (!found) throw Error("ballot votes extend to no complete labeling");
  return *found;
}

inline std::vector<std::pair<std::size_t, Label>> counterargument_votes(
    const ArgumentationFramework& af, bool pro_conclusion) {
  // B rejected / C accepted clears the way for A; the opposite blocks A.
  // The complex graph repeats the pattern on D/E.
  const Label reject = pro_conclusion ? Label::Out : Label::In;
  const Label accept = pro_conclusion ? Label::In : Label::Out;
  std::vector<std::pair<std::size_t, Label>> votes{{af.require("B"), reject},
                                                   {af.require("C"), accept}};
  if (af.find("D")) {
    votes.emplace_back(af.require("D"), reject);
    votes.emplace_back(af.require("E"), accept);
  }
  return votes;
}

}  // namespace detail

// Majority-many copies of one side's ballot followed by minority-many copies
// of the other side's.
inline LabelingProfile build_profile(const Scenario& scenario, const VoteRatio& ratio,
                                     MajoritySide side = MajoritySide::ProConclusion) {
  auto af = std::make_shared<const ArgumentationFramework>(scenario.framework);
  const bool majority_pro = side == MajoritySide::ProConclusion;
  const Labeling majority_ballot =
      detail::extend_votes(*af, detail::counterargument_votes(*af, majority_pro));
  const Labeling minority_ballot =
      detail::extend_votes(*af, detail::counterargument_votes(*af, !majority_pro));
  std::vector<Labeling> ballots;
  ballots.reserve(static_cast<std::size_t>(ratio.majority + ratio.minority));
  for (int i = 0; i < ratio.majority; ++i) ballots.push_back(majority_ballot);
  for (int i = 0; i < ratio.minority; ++i) ballots.push_back(minority_ballot);
  return LabelingProfile(std::move(af), std::move(ballots));
}

struct ReplicationRow {
  std::string scenario;
  VoteRatio ratio;
  bool harm = false;
  Label awpr_conclusion = Label::Undec;
  Label so_conclusion = Label::Undec;
  Label co_conclusion = Label::Undec;
  Label sco_conclusion = Label::Undec;
  std::string conclusion_text;
  std::string fallback_text;
};

inline ReplicationRow replicate(const Scenario& scenario, const VoteRatio& ratio,
                                MajoritySide side = MajoritySide::ProConclusion) {
  LabelingProfile profile = build_profile(scenario, ratio, side);
  ReplicationRow row;
  row.scenario = scenario.id;
  row.ratio = ratio;
  row.harm = scenario.harm;
  row.conclusion_text = scenario.conclusion_text;
  row.fallback_text = scenario.fallback_text;
  // majority != minority and the two ballots disagree on every argument, so
  // plurality is always defined here
  row.awpr_conclusion = outcome_labeling(awpr(profile))[scenario.conclusion];
  row.so_conclusion = sceptical(profile)[scenario.conclusion];
  row.co_conclusion = credulous(profile)[scenario.conclusion];
  row.sco_conclusion = super_credulous(profile)[scenario.conclusion];
  return row;
}

// All six scenarios under both bench ratios.
inline std::vector<ReplicationRow> replicate_all() {
  std::vector<ReplicationRow> rows;
  for (const std::string& id : scenario_ids())
    for (const VoteRatio& ratio : {VoteRatio(6, 4), VoteRatio(9, 1)})
      rows.push_back(replicate(build_scenario(id), ratio));
  return rows;
}

struct DivergenceCensus {
  std::size_t conclusion = 0;
  int n_voters = 0;
  std::uint64_t total_profiles = 0;  // voter multisets over the complete labelings
  std::uint64_t awpr_ties = 0;       // multisets where plurality is undefined

  struct Contrast {
    std::uint64_t agree = 0;
    std::uint64_t disagree = 0;
  };
  Contrast vs_so, vs_co, vs_sco;  // per multiset, on the conclusion argument
};

namespace detail {

inline std::uint64_t multiset_count(std::uint64_t labelings, int voters) {
  // C(labelings + voters - 1, voters)
  std::uint64_t r = 1;
  for (int i = 1; i <= voters; ++i) r = r * (labelings + static_cast<std::uint64_t>(i) - 1) / i;
  return r;
}

}  // namespace detail

inline constexpr std::uint64_t kMaxCensusProfiles = 5'000'000;

// Exhaustive sweep of voter multisets (anonymity makes order irrelevant;
// the ordered cross-check lives in the test suite). Multisets are sharded
// by their smallest ballot index and merged additively in index order.
inline DivergenceCensus divergence_census(const ArgumentationFramework& framework,
                                          std::size_t conclusion, int n_voters) {
  if (conclusion >= framework.argument_count())
    throw Error("conclusion argument out of range");
  if (n_voters < 1 || n_voters > 6) throw SizeLimitError("voter count must lie in [1, 6]");

  auto af = std::make_shared<const ArgumentationFramework>(framework);
  const std::vector<Labeling> complete = enumerate_complete(*af);
  const std::size_t m = complete.size();
  const std::uint64_t expected = detail::multiset_count(m, n_voters);
  if (expected > kMaxCensusProfiles)
    throw SizeLimitError("census of " + std::to_string(expected) + " profiles exceeds the " +
                         std::to_string(kMaxCensusProfiles) + " limit");

  auto ranges = detail::plan_shards(m, detail::default_worker_count());
  std::vector<DivergenceCensus> slots(ranges.size());
  detail::run_shards(ranges.size(), [&](std::size_t s) {
    DivergenceCensus& local = slots[s];
    std::vector<std::size_t> pick(static_cast<std::size_t>(n_voters), 0);

    auto visit = [&](const std::vector<std::size_t>& indices) {
      std::vector<Labeling> ballots;
      ballots.reserve(indices.size());
      for (std::size_t i : indices) ballots.push_back(complete[i]);
      LabelingProfile profile(af, std::move(ballots));
      ++local.total_profiles;
      AggregationOutcome plurality = awpr(profile);
      if (is_tie(plurality)) {
        ++local.awpr_ties;
        return;
      }
      const Label awpr_label = outcome_labeling(plurality)[conclusion];
      auto bump = [&](DivergenceCensus::Contrast& c, Label l) {
        if (l == awpr_label)
          ++c.agree;
        else
          ++c.disagree;
      };
      bump(local.vs_so, sceptical(profile)[conclusion]);
      bump(local.vs_co, credulous(profile)[conclusion]);
      bump(local.vs_sco, super_credulous(profile)[conclusion]);
    };

    // non-decreasing index tuples whose smallest entry falls in this shard
    auto descend = [&](auto&& self, std::size_t pos) -> void {
      if (pos == pick.size()) {
        visit(pick);
        return;
      }
      for (std::size_t i = pick[pos - 1]; i < m; ++i) {
        pick[pos] = i;
        self(self, pos + 1);
      }
    };
    for (std::uint64_t first = ranges[s].first; first < ranges[s].second; ++first) {
      pick[0] = static_cast<std::size_t>(first);
      if (n_voters == 1)
        visit(pick);
      else
        descend(descend, 1);
    }
  });

  DivergenceCensus census;
  census.conclusion = conclusion;
  census.n_voters = n_voters;
  for (const DivergenceCensus& local : slots) {
    census.total_profiles += local.total_profiles;
    census.awpr_ties += local.awpr_ties;
    census.vs_so.agree += local.vs_so.agree;
    census.vs_so.disagree += local.vs_so.disagree;
    census.vs_co.agree += local.vs_co.agree;
    census.vs_co.disagree += local.vs_co.disagree;
    census.vs_sco.agree += local.vs_sco.agree;
    census.vs_sco.disagree += local.vs_sco.disagree;
  }
  return census;
}

}  // namespace arglab
