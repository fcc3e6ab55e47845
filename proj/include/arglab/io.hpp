// arglab :: text formats
//
// Framework documents, one directive per line:
//     # comment (also allowed after a directive)
//     arg <name>
//     att <source> <target>
// Arguments must be declared before they are attacked or attack; declaring
// an argument twice is an error; repeating an att line is harmless. Lines
// may end in LF or CRLF.
//
// Profile documents, one voter block per line:
//     <multiplicity>: <arg>=<label>(,<arg>=<label>)*
// with label in {in, out, undec}. Every framework argument must be assigned
// exactly once per line; multiplicities must be positive and expand to
// voters v1..vN in order.

#pragma once

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arglab/aggregation.hpp"
#include "arglab/framework.hpp"

namespace arglab {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Lines with trailing '\r' stripped and '#' comments removed.
inline std::vector<std::string_view> logical_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    lines.push_back(line);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace detail

inline ArgumentationFramework parse_af(std::string_view text) {
  ArgumentationFramework af;
  int line_no = 0;
  for (std::string_view raw : detail::logical_lines(text)) {
    ++line_no;
    auto tokens = detail::split_tokens(raw);
    if (tokens.empty()) continue;
    try {
      if (tokens[0] == "arg") {
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'arg <name>'");
        af.add_argument(std::string(tokens[1]));
      } else if (tokens[0] == "att") {
        if (tokens.size() != 3) throw ParseError(line_no, "expected 'att <source> <target>'");
        af.add_defeat(tokens[1], tokens[2]);
      } else {
        throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
      }
    } catch (const FrameworkError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return af;
}

inline std::string write_af(const ArgumentationFramework& af) {
  std::ostringstream out;
  for (const std::string& name : af.arguments()) out << "arg " << name << "\n";
  for (const auto& [src, dst] : af.defeat_list())
    out << "att " << af.name_of(src) << " " << af.name_of(dst) << "\n";
  return out.str();
}

namespace detail {

inline Labeling parse_ballot_line(std::string_view body, const ArgumentationFramework& af,
                                  int line_no) {
  const std::size_t n = af.argument_count();
  Labeling ballot(n);
  std::vector<bool> seen(n, false);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view item = comma == std::string_view::npos ? body.substr(pos)
                                                            : body.substr(pos, comma - pos);
    item = trim(item);
    if (item.empty()) throw ParseError(line_no, "empty assignment");
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(line_no, "expected '<arg>=<label>' in '" + std::string(item) + "'");
    std::string_view arg_name = trim(item.substr(0, eq));
    std::string_view label_name = trim(item.substr(eq + 1));
    auto arg = af.find(arg_name);
    if (!arg) throw ParseError(line_no, "unknown argument '" + std::string(arg_name) + "'");
    auto label = label_from_string(label_name);
    if (!label) throw ParseError(line_no, "bad label token '" + std::string(label_name) + "'");
    if (seen[*arg])
      throw ParseError(line_no, "argument '" + std::string(arg_name) + "' assigned twice");
    seen[*arg] = true;
    ballot.set(*arg, *label);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!seen[a]) throw ParseError(line_no, "missing assignment for argument '" + af.name_of(a) + "'");
  return ballot;
}

}  // namespace detail

inline LabelingProfile parse_profile(std::string_view text,
                                     std::shared_ptr<const ArgumentationFramework> af,
                                     BallotPolicy policy = BallotPolicy::RequireComplete) {
  if (!af) throw Error("parse_profile requires a framework");
  std::vector<Labeling> ballots;
  int line_no = 0;
  for (std::string_view raw : detail::logical_lines(text)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(line_no, "expected '<multiplicity>: <assignments>'");
    std::string_view count_text = detail::trim(line.substr(0, colon));
    long multiplicity = 0;
    try {
      std::size_t used = 0;
      multiplicity = std::stol(std::string(count_text), &used);
      if (used != count_text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad multiplicity '" + std::string(count_text) + "'");
    }
    if (multiplicity < 1) throw ParseError(line_no, "multiplicity must be at least 1");
    if (multiplicity > 1'000'000 ||
        ballots.size() + static_cast<std::size_t>(multiplicity) > 1'000'000)
      throw ParseError(line_no, "profile expands to more than 1000000 voters");
    Labeling ballot = detail::parse_ballot_line(line.substr(colon + 1), *af, line_no);
    for (long i = 0; i < multiplicity; ++i) ballots.push_back(ballot);
  }
  return LabelingProfile(std::move(af), std::move(ballots), policy);
}

inline LabelingProfile parse_profile(std::string_view text, const ArgumentationFramework& af,
                                     BallotPolicy policy = BallotPolicy::RequireComplete) {
  return parse_profile(text, std::make_shared<const ArgumentationFramework>(af), policy);
}

inline std::string format_labeling(const ArgumentationFramework& af, const Labeling& l) {
  require_same_arity(af, l);
  std::ostringstream out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (a > 0) out << ' ';
    out << af.name_of(a) << '=' << to_string(l[a]);
  }
  return out.str();
}

// Consecutive identical ballots are collapsed into one multiplicity line, so
// profiles built from ratio blocks round-trip to the same shape.
inline std::string write_profile(const LabelingProfile& profile) {
  const ArgumentationFramework& af = profile.framework();
  const auto& ballots = profile.ballots();
  std::ostringstream out;
  std::size_t i = 0;
  while (i < ballots.size()) {
    std::size_t j = i;
    while (j < ballots.size() && ballots[j] == ballots[i]) ++j;
    out << (j - i) << ": ";
    for (std::size_t a = 0; a < af.argument_count(); ++a) {
      if (a > 0) out << ',';
      out << af.name_of(a) << '=' << to_string(ballots[i][a]);
    }
    out << "\n";
    i = j;
  }
  return out.str();
}

}  // namespace arglab
