// arglab :: labeling aggregation rules
//
// A LabelingProfile is one ballot (labeling) per voter over a shared
// framework. By default every ballot must be a complete labeling; pass
// BallotPolicy::AllowAny to lift that for experimentation, at the price of
// the completeness guarantees below.
//
// Rules:
//   awpr               per argument, the label with a strict plurality of
//                      votes; undefined (TieFailure) when any argument ties.
//   sceptical_initial  unanimously-voted in/out survives, everything else
//                      collapses to undec.
//   credulous_initial  in/out survives when voted by someone and opposed by
//                      no one, everything else collapses to undec.
//   sceptical          down-admissible of sceptical_initial; complete.
//   credulous          down-admissible of credulous_initial; admissible but
//                      possibly not complete.
//   super_credulous    up-complete of credulous; complete.
//   supermajority      per argument, the label holding at least k > N/2
//                      votes if any, else undec. k = N is unanimity, the
//                      smallest legal k is per-argument majority.

#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arglab/framework.hpp"
#include "arglab/order.hpp"
#include "arglab/semantics.hpp"

namespace arglab {

enum class BallotPolicy { RequireComplete, AllowAny };

class LabelingProfile {
public:
  LabelingProfile(std::shared_ptr<const ArgumentationFramework> af,
                  std::vector<Labeling> ballots,
                  BallotPolicy policy = BallotPolicy::RequireComplete,
                  std::vector<std::string> voter_ids = {})
      : af_(std::move(af)), ballots_(std::move(ballots)), voter_ids_(std::move(voter_ids)) {
    if (!af_) throw ProfileError("profile requires a framework");
    if (ballots_.empty()) throw ProfileError("profile requires at least one voter");
    if (voter_ids_.empty()) {
      voter_ids_.reserve(ballots_.size());
      for (std::size_t i = 0; i < ballots_.size(); ++i)
        voter_ids_.push_back("v" + std::to_string(i + 1));
    } else if (voter_ids_.size() != ballots_.size()) {
      throw ProfileError("voter id count does not match ballot count");
    }
    for (std::size_t i = 0; i < ballots_.size(); ++i) {
      require_same_arity(*af_, ballots_[i]);
      if (policy == BallotPolicy::RequireComplete && !is_complete(*af_, ballots_[i]))
        throw ProfileError("ballot of voter '" + voter_ids_[i] +
                           "' is not a complete labeling"
                           " (use BallotPolicy::AllowAny to relax)");
    }
  }

  LabelingProfile(ArgumentationFramework af, std::vector<Labeling> ballots,
                  BallotPolicy policy = BallotPolicy::RequireComplete,
                  std::vector<std::string> voter_ids = {})
      : LabelingProfile(std::make_shared<const ArgumentationFramework>(std::move(af)),
                        std::move(ballots), policy, std::move(voter_ids)) {}

  const ArgumentationFramework& framework() const noexcept { return *af_; }

  const std::shared_ptr<const ArgumentationFramework>& framework_ptr() const noexcept {
    return af_;
  }

  std::size_t voter_count() const noexcept { return ballots_.size(); }

  const std::vector<Labeling>& ballots() const noexcept { return ballots_; }

  const std::vector<std::string>& voter_ids() const noexcept { return voter_ids_; }

private:
  std::shared_ptr<const ArgumentationFramework> af_;
  std::vector<Labeling> ballots_;
  std::vector<std::string> voter_ids_;
};

struct VoteCounts {
  int counts[3] = {0, 0, 0};

  int of(Label l) const { return counts[static_cast<std::size_t>(l)]; }
  int& of(Label l) { return counts[static_cast<std::size_t>(l)]; }
  int total() const { return counts[0] + counts[1] + counts[2]; }

  friend bool operator==(const VoteCounts& a, const VoteCounts& b) {
    return a.counts[0] == b.counts[0] && a.counts[1] == b.counts[1] &&
           a.counts[2] == b.counts[2];
  }
};

// Per-argument vote counts, indexed by argument index.
using VoteTally = std::vector<VoteCounts>;

inline VoteTally tally(const LabelingProfile& profile) {
  VoteTally t(profile.framework().argument_count());
  for (const Labeling& b : profile.ballots())
    for (std::size_t a = 0; a < b.size(); ++a) ++t[a].of(b[a]);
  return t;
}

// Arguments whose plurality is not unique, with the full tally for
// diagnostics. tied_arguments is ascending and nonempty.
struct TieFailure {
  std::vector<std::size_t> tied_arguments;
  VoteTally tally;
};

using AggregationOutcome = std::variant<Labeling, TieFailure>;

inline bool is_tie(const AggregationOutcome& o) {
  return std::holds_alternative<TieFailure>(o);
}

inline const Labeling& outcome_labeling(const AggregationOutcome& o) {
  return std::get<Labeling>(o);
}

inline const TieFailure& outcome_tie(const AggregationOutcome& o) {
  return std::get<TieFailure>(o);
}

// Argument-wise plurality. Each argument independently takes the label with
// strictly more votes than any other; the rule is partial and reports all
// tied arguments instead of inventing a tie-break.
inline AggregationOutcome awpr(const LabelingProfile& profile) {
  VoteTally t = tally(profile);
  Labeling result(t.size());
  std::vector<std::size_t> tied;
  for (std::size_t a = 0; a < t.size(); ++a) {
    Label best = Label::In;
    bool unique = true;
    for (Label l : {Label::Out, Label::Undec}) {
      if (t[a].of(l) > t[a].of(best)) {
        best = l;
        unique = true;
      } else if (t[a].of(l) == t[a].of(best)) {
        unique = false;
      }
    }
    if (unique)
      result.set(a, best);
    else
      tied.push_back(a);
  }
  if (!tied.empty()) return TieFailure{std::move(tied), std::move(t)};
  return result;
}

inline Labeling sceptical_initial(const LabelingProfile& profile) {
  const auto& ballots = profile.ballots();
  Labeling result(profile.framework().argument_count());
  for (std::size_t a = 0; a < result.size(); ++a) {
    bool all_in = true, all_out = true;
    for (const Labeling& b : ballots) {
      all_in = all_in && b[a] == Label::In;
      all_out = all_out && b[a] == Label::Out;
    }
    result.set(a, all_in ? Label::In : all_out ? Label::Out : Label::Undec);
  }
  return result;
}

inline Labeling credulous_initial(const LabelingProfile& profile) {
  const auto& ballots = profile.ballots();
  Labeling result(profile.framework().argument_count());
  for (std::size_t a = 0; a < result.size(); ++a) {
    bool has_in = false, has_out = false;
    for (const Labeling& b : ballots) {
      has_in = has_in || b[a] == Label::In;
      has_out = has_out || b[a] == Label::Out;
    }
    if (has_in && !has_out)
      result.set(a, Label::In);
    else if (has_out && !has_in)
      result.set(a, Label::Out);
    else
      result.set(a, Label::Undec);
  }
  return result;
}

// Sceptical operator: complete for profiles of complete ballots.
inline Labeling sceptical(const LabelingProfile& profile) {
  return down_admissible(profile.framework(), sceptical_initial(profile));
}

// Credulous operator: admissible, but may stop short of complete.
inline Labeling credulous(const LabelingProfile& profile) {
  return down_admissible(profile.framework(), credulous_initial(profile));
}

// Super-credulous operator: promotes the credulous outcome to the nearest
// complete labeling.
inline Labeling super_credulous(const LabelingProfile& profile) {
  Labeling c = credulous(profile);
  // down_admissible output is admissible by construction; a failure here is
  // an internal fault, not a user error.
  assert(is_admissible(profile.framework(), c));
  return up_complete(profile.framework(), std::move(c));
}

// Smallest threshold that still outweighs every other label combined.
inline int majority_threshold(int n_voters) { return n_voters / 2 + 1; }

inline AggregationOutcome supermajority(const LabelingProfile& profile, int k) {
  const int n = static_cast<int>(profile.voter_count());
  if (k < majority_threshold(n) || k > n)
    throw InvalidThresholdError("threshold k=" + std::to_string(k) + " outside [" +
                                std::to_string(majority_threshold(n)) + ", " +
                                std::to_string(n) + "] for " + std::to_string(n) +
                                " voters");
  VoteTally t = tally(profile);
  Labeling result(t.size());
  for (std::size_t a = 0; a < t.size(); ++a) {
    result.set(a, Label::Undec);
    for (Label l : kLabels) {
      if (t[a].of(l) >= k) {  // at most one label can reach k > N/2
        result.set(a, l);
        break;
      }
    }
  }
  return result;
}

// Indecision-inconvenience level above which plurality beats the
// unanimity-style operators for a minority of the given size: (m/N) * D_o.
inline double plurality_preference_threshold(int n_voters, int minority_size,
                                             double opposed_cost) {
  if (n_voters <= 0) throw Error("voter count must be positive");
  if (minority_size < 0 || minority_size > n_voters)
    throw Error("minority size must lie in [0, N]");
  if (opposed_cost < 0) throw Error("inconvenience must be nonnegative");
  return (static_cast<double>(minority_size) / static_cast<double>(n_voters)) * opposed_cost;
}

}  // namespace arglab
