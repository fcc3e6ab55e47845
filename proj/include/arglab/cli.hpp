// arglab :: command line front end
//
// Subcommands:
//   semantics <af> [--kind complete|admissible|grounded]
//   aggregate --rule awpr|so|co|sco|supermajority [--k K] [--relax] <af> <profile>
//   postulates --rule R [--k K] [--max-args N] [--max-voters V]
//   explore <af> --conclusion A --voters N
//   replicate [--scenario S] [--ratio M:m]
// Every subcommand takes --json for a machine-readable object with stable
// field order. Exit codes: 0 success, 1 usage/parse errors, 2 plurality tie.

#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arglab/aggregation.hpp"
#include "arglab/bench.hpp"
#include "arglab/io.hpp"
#include "arglab/postulates.hpp"
#include "arglab/semantics.hpp"

namespace arglab::cli {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Json labeling_json(const ArgumentationFramework& af, const Labeling& l) {
  Json obj = Json::object();
  for (std::size_t a = 0; a < l.size(); ++a)
    obj[af.name_of(a)] = std::string(to_string(l[a]));
  return obj;
}

inline Json tally_json(const ArgumentationFramework& af, const VoteTally& t) {
  Json obj = Json::object();
  for (std::size_t a = 0; a < t.size(); ++a) {
    Json counts = Json::object();
    counts["in"] = t[a].of(Label::In);
    counts["out"] = t[a].of(Label::Out);
    counts["undec"] = t[a].of(Label::Undec);
    obj[af.name_of(a)] = std::move(counts);
  }
  return obj;
}

namespace detail {

inline std::string ballots_text(const ArgumentationFramework& af,
                                const std::vector<Labeling>& ballots) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    if (i > 0) out << " | ";
    out << format_labeling(af, ballots[i]);
  }
  out << ']';
  return out.str();
}

inline Json ballots_json(const ArgumentationFramework& af, const std::vector<Labeling>& ballots) {
  Json arr = Json::array();
  for (const Labeling& b : ballots) arr.push_back(labeling_json(af, b));
  return arr;
}

inline Json report_json(const PostulateReport& report) {
  Json obj = Json::object();
  obj["postulate"] = std::string(to_string(report.postulate));
  obj["verdict"] = std::string(to_string(report.verdict));
  obj["profiles_checked"] = report.profiles_checked;
  obj["undefined_skipped"] = report.undefined_skipped;
  if (report.witness) {
    const PostulateWitness& w = *report.witness;
    Json witness = Json::object();
    witness["framework"] = w.framework_name;
    witness["profile"] = ballots_json(w.framework, w.ballots);
    if (!w.second_ballots.empty())
      witness["second_profile"] = ballots_json(w.framework, w.second_ballots);
    if (w.argument) witness["argument"] = w.framework.name_of(*w.argument);
    obj["witness"] = std::move(witness);
  }
  return obj;
}

inline void print_report(std::ostream& out, const PostulateReport& report) {
  out << to_string(report.postulate) << '\t' << to_string(report.verdict) << '\t';
  if (report.witness) {
    const PostulateWitness& w = *report.witness;
    out << "witness: framework=" << w.framework_name
        << " profile=" << ballots_text(w.framework, w.ballots);
    if (!w.second_ballots.empty())
      out << " second_profile=" << ballots_text(w.framework, w.second_ballots);
    if (w.argument) out << " argument=" << w.framework.name_of(*w.argument);
  } else {
    out << "checked=" << report.profiles_checked
        << " undefined_skipped=" << report.undefined_skipped;
  }
  out << '\n';
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"evaluate argumentation frameworks and aggregate argument labelings"};
  app.name("arglab");
  app.require_subcommand(1);

  // semantics
  auto* sem = app.add_subcommand("semantics", "enumerate labelings of a framework");
  std::string sem_path;
  std::string sem_kind = "complete";
  bool sem_json = false;
  sem->add_option("af", sem_path, "framework file")->required();
  sem->add_option("--kind", sem_kind, "complete, admissible, or grounded")
      ->check(CLI::IsMember({"complete", "admissible", "grounded"}));
  sem->add_flag("--json", sem_json, "emit JSON");

  // aggregate
  auto* agg = app.add_subcommand("aggregate", "aggregate a labeling profile");
  std::string agg_rule, agg_af_path, agg_profile_path;
  int agg_k = 0;
  bool agg_json = false, agg_relax = false;
  auto* agg_rule_opt = agg->add_option("--rule", agg_rule, "awpr, so, co, sco, or supermajority")
                           ->required()
                           ->check(CLI::IsMember({"awpr", "so", "co", "sco", "supermajority"}));
  (void)agg_rule_opt;
  auto* agg_k_opt = agg->add_option("--k", agg_k, "supermajority vote threshold");
  agg->add_flag("--relax", agg_relax, "accept ballots that are not complete labelings");
  agg->add_option("af", agg_af_path, "framework file")->required();
  agg->add_option("profile", agg_profile_path, "profile file")->required();
  agg->add_flag("--json", agg_json, "emit JSON");

  // postulates
  auto* post = app.add_subcommand("postulates", "search the postulate matrix row of a rule");
  std::string post_rule;
  int post_k = 0;
  std::size_t post_max_args = 5;
  int post_max_voters = 3;
  bool post_json = false;
  post->add_option("--rule", post_rule, "awpr, so, co, sco, or supermajority")
      ->required()
      ->check(CLI::IsMember({"awpr", "so", "co", "sco", "supermajority"}));
  auto* post_k_opt = post->add_option("--k", post_k, "supermajority vote threshold");
  post->add_option("--max-args", post_max_args, "skip catalog frameworks with more arguments");
  post->add_option("--max-voters", post_max_voters, "largest profile size to sweep");
  post->add_flag("--json", post_json, "emit JSON");

  // explore
  auto* exp = app.add_subcommand("explore", "divergence census over all voter multisets");
  std::string exp_path, exp_conclusion;
  int exp_voters = 0;
  bool exp_json = false;
  exp->add_option("af", exp_path, "framework file")->required();
  exp->add_option("--conclusion", exp_conclusion, "conclusion argument name")->required();
  exp->add_option("--voters", exp_voters, "number of voters")->required();
  exp->add_flag("--json", exp_json, "emit JSON");

  // replicate
  auto* rep = app.add_subcommand("replicate", "plurality-vs-SSCO contrast on the bench scenarios");
  std::string rep_scenario, rep_ratio;
  bool rep_json = false;
  rep->add_option("--scenario", rep_scenario, "one scenario id")
      ->check(CLI::IsMember(scenario_ids()));
  rep->add_option("--ratio", rep_ratio, "vote ratio, e.g. 6:4 or 9:1");
  rep->add_flag("--json", rep_json, "emit JSON");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("arglab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*sem) {
      ArgumentationFramework af = parse_af(read_file(sem_path));
      std::vector<Labeling> labelings;
      if (sem_kind == "grounded")
        labelings.push_back(grounded(af));
      else if (sem_kind == "admissible")
        labelings = enumerate_admissible(af);
      else
        labelings = enumerate_complete(af);
      if (sem_json) {
        Json obj = Json::object();
        obj["command"] = "semantics";
        obj["kind"] = sem_kind;
        obj["count"] = labelings.size();
        Json arr = Json::array();
        for (const Labeling& l : labelings) arr.push_back(labeling_json(af, l));
        obj["labelings"] = std::move(arr);
        out << obj.dump(2) << "\n";
      } else {
        for (const Labeling& l : labelings) out << format_labeling(af, l) << "\n";
      }
      return 0;
    }

    if (*agg) {
      if (agg_rule == "supermajority" && agg_k_opt->count() == 0)
        throw Error("rule 'supermajority' requires --k");
      if (agg_rule != "supermajority" && agg_k_opt->count() > 0)
        throw Error("--k applies to rule 'supermajority' only");
      auto af = std::make_shared<const ArgumentationFramework>(parse_af(read_file(agg_af_path)));
      LabelingProfile profile =
          parse_profile(read_file(agg_profile_path), af,
                        agg_relax ? BallotPolicy::AllowAny : BallotPolicy::RequireComplete);

      AggregationOutcome outcome = [&]() -> AggregationOutcome {
        if (agg_rule == "awpr") return awpr(profile);
        if (agg_rule == "so") return sceptical(profile);
        if (agg_rule == "co") return credulous(profile);
        if (agg_rule == "sco") return super_credulous(profile);
        return supermajority(profile, agg_k);
      }();

      if (is_tie(outcome)) {
        const TieFailure& tie = outcome_tie(outcome);
        if (agg_json) {
          Json obj = Json::object();
          obj["command"] = "aggregate";
          obj["rule"] = agg_rule;
          obj["outcome"] = "tie";
          Json tied = Json::array();
          for (std::size_t a : tie.tied_arguments) tied.push_back(af->name_of(a));
          obj["tied_arguments"] = std::move(tied);
          obj["tally"] = tally_json(*af, tie.tally);
          out << obj.dump(2) << "\n";
        } else {
          out << "TIE:";
          for (std::size_t a : tie.tied_arguments) out << ' ' << af->name_of(a);
          out << "\n";
        }
        return 2;
      }

      const Labeling& result = outcome_labeling(outcome);
      if (agg_json) {
        Json obj = Json::object();
        obj["command"] = "aggregate";
        obj["rule"] = agg_rule;
        if (agg_rule == "supermajority") obj["k"] = agg_k;
        obj["outcome"] = "labeling";
        obj["labeling"] = labeling_json(*af, result);
        out << obj.dump(2) << "\n";
      } else {
        out << format_labeling(*af, result) << "\n";
      }
      return 0;
    }

    if (*post) {
      if (post_rule == "supermajority" && post_k_opt->count() == 0)
        throw Error("rule 'supermajority' requires --k");
      if (post_rule != "supermajority" && post_k_opt->count() > 0)
        throw Error("--k applies to rule 'supermajority' only");
      RuleId rule = *rule_from_name(post_rule, post_k);
      SearchBounds bounds{post_max_args, post_max_voters};
      std::vector<PostulateReport> row = postulate_row(rule, bounds);
      if (post_json) {
        Json obj = Json::object();
        obj["command"] = "postulates";
        obj["rule"] = rule.name();
        Json b = Json::object();
        b["max_args"] = bounds.max_args;
        b["max_voters"] = bounds.max_voters;
        obj["bounds"] = std::move(b);
        Json results = Json::array();
        for (const PostulateReport& r : row) results.push_back(detail::report_json(r));
        obj["results"] = std::move(results);
        out << obj.dump(2) << "\n";
      } else {
        out << "rule: " << rule.name() << " (max_args=" << bounds.max_args
            << ", max_voters=" << bounds.max_voters << ")\n";
        for (const PostulateReport& r : row) detail::print_report(out, r);
      }
      return 0;
    }

    if (*exp) {
      ArgumentationFramework af = parse_af(read_file(exp_path));
      std::size_t conclusion = af.require(exp_conclusion);
      DivergenceCensus census = divergence_census(af, conclusion, exp_voters);
      if (exp_json) {
        Json obj = Json::object();
        obj["command"] = "explore";
        obj["conclusion"] = exp_conclusion;
        obj["voters"] = census.n_voters;
        obj["total_profiles"] = census.total_profiles;
        obj["awpr_ties"] = census.awpr_ties;
        Json contrast = Json::object();
        for (const auto& [name, c] :
             {std::pair<const char*, const DivergenceCensus::Contrast&>{"so", census.vs_so},
              {"co", census.vs_co},
              {"sco", census.vs_sco}}) {
          Json entry = Json::object();
          entry["agree"] = c.agree;
          entry["disagree"] = c.disagree;
          contrast[name] = std::move(entry);
        }
        obj["contrast"] = std::move(contrast);
        out << obj.dump(2) << "\n";
      } else {
        out << "rule\tagree\tdisagree\tties\ttotal\n";
        for (const auto& [name, c] :
             {std::pair<const char*, const DivergenceCensus::Contrast&>{"so", census.vs_so},
              {"co", census.vs_co},
              {"sco", census.vs_sco}}) {
          out << name << '\t' << c.agree << '\t' << c.disagree << '\t' << census.awpr_ties
              << '\t' << census.total_profiles << "\n";
        }
      }
      return 0;
    }

    if (*rep) {
      std::vector<std::string> ids =
          rep_scenario.empty() ? scenario_ids() : std::vector<std::string>{rep_scenario};
      std::vector<VoteRatio> ratios;
      if (rep_ratio.empty())
        ratios = {VoteRatio(6, 4), VoteRatio(9, 1)};
      else
        ratios = {parse_ratio(rep_ratio)};

      std::vector<ReplicationRow> rows;
      for (const std::string& id : ids)
        for (const VoteRatio& ratio : ratios) rows.push_back(replicate(build_scenario(id), ratio));

      if (rep_json) {
        Json obj = Json::object();
        obj["command"] = "replicate";
        Json arr = Json::array();
        for (const ReplicationRow& r : rows) {
          Json row = Json::object();
          row["scenario"] = r.scenario;
          row["ratio"] = r.ratio.to_string();
          row["harm"] = r.harm;
          row["awpr"] = std::string(to_string(r.awpr_conclusion));
          row["so"] = std::string(to_string(r.so_conclusion));
          row["co"] = std::string(to_string(r.co_conclusion));
          row["sco"] = std::string(to_string(r.sco_conclusion));
          row["conclusion_text"] = r.conclusion_text;
          row["fallback_text"] = r.fallback_text;
          arr.push_back(std::move(row));
        }
        obj["rows"] = std::move(arr);
        out << obj.dump(2) << "\n";
      } else {
        out << "scenario\tratio\tharm\tawpr\tso\tco\tsco\n";
        for (const ReplicationRow& r : rows) {
          out << r.scenario << '\t' << r.ratio.to_string() << '\t' << (r.harm ? "yes" : "no")
              << '\t' << to_string(r.awpr_conclusion) << '\t' << to_string(r.so_conclusion)
              << '\t' << to_string(r.co_conclusion) << '\t' << to_string(r.sco_conclusion)
              << "\n";
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace arglab::cli
