// Test-side oracles: plain 3^n sweeps written straight from the labeling
// definitions, kept independent of the library's backtracking and fixpoint
// paths so they can referee them.

#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arglab/framework.hpp"

namespace oracle {

using arglab::ArgumentationFramework;
using arglab::Label;
using arglab::Labeling;

inline std::vector<Labeling> all_labelings(const ArgumentationFramework& af) {
  const std::size_t n = af.argument_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<Labeling> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Labeling l(n);
    std::size_t rest = code;
    for (std::size_t a = n; a-- > 0;) {
      l.set(a, static_cast<Label>(rest % 3));
      rest /= 3;
    }
    out.push_back(std::move(l));
  }
  return out;
}

inline bool is_admissible(const ArgumentationFramework& af, const Labeling& l) {
  for (std::size_t a = 0; a < af.argument_count(); ++a) {
    if (l[a] == Label::In) {
      for (std::size_t d : af.defeaters_of(a))
        if (l[d] != Label::Out) return false;
    }
    if (l[a] == Label::Out) {
      bool in_defeater = false;
      for (std::size_t d : af.defeaters_of(a))
        if (l[d] == Label::In) in_defeater = true;
      if (!in_defeater) return false;
    }
  }
  return true;
}

inline bool is_complete(const ArgumentationFramework& af, const Labeling& l) {
  if (!oracle::is_admissible(af, l)) return false;
  for (std::size_t a = 0; a < af.argument_count(); ++a) {
    if (l[a] != Label::Undec) continue;
    bool in_defeater = false, undec_defeater = false;
    for (std::size_t d : af.defeaters_of(a)) {
      if (l[d] == Label::In) in_defeater = true;
      if (l[d] == Label::Undec) undec_defeater = true;
    }
    if (in_defeater || !undec_defeater) return false;
  }
  return true;
}

inline std::vector<Labeling> brute_admissible(const ArgumentationFramework& af) {
  std::vector<Labeling> out;
  for (const Labeling& l : all_labelings(af))
    if (oracle::is_admissible(af, l)) out.push_back(l);
  return out;
}

inline std::vector<Labeling> brute_complete(const ArgumentationFramework& af) {
  std::vector<Labeling> out;
  for (const Labeling& l : all_labelings(af))
    if (oracle::is_complete(af, l)) out.push_back(l);
  return out;
}

inline bool leq(const Labeling& l1, const Labeling& l2) {
  for (std::size_t a = 0; a < l1.size(); ++a) {
    if (l1[a] == Label::In && l2[a] != Label::In) return false;
    if (l1[a] == Label::Out && l2[a] != Label::Out) return false;
  }
  return true;
}

inline bool compat(const Labeling& l1, const Labeling& l2) {
  for (std::size_t a = 0; a < l1.size(); ++a) {
    if (l1[a] == Label::In && l2[a] == Label::Out) return false;
    if (l1[a] == Label::Out && l2[a] == Label::In) return false;
  }
  return true;
}

// The unique most committed admissible labeling below l; set-maximum over
// the brute-force candidate list.
inline Labeling brute_down(const ArgumentationFramework& af, const Labeling& l) {
  std::vector<Labeling> candidates;
  for (const Labeling& cand : brute_admissible(af))
    if (leq(cand, l)) candidates.push_back(cand);
  std::vector<Labeling> maxima;
  for (const Labeling& cand : candidates) {
    bool is_max = true;
    for (const Labeling& other : candidates)
      if (!leq(other, cand)) { is_max = false; break; }
    if (is_max) maxima.push_back(cand);
  }
  if (maxima.size() != 1) throw std::logic_error("down-admissible maximum not unique");
  return maxima.front();
}

// The unique least committed complete labeling above l, when one exists.
inline std::optional<Labeling> brute_up(const ArgumentationFramework& af, const Labeling& l) {
  std::vector<Labeling> candidates;
  for (const Labeling& cand : brute_complete(af))
    if (leq(l, cand)) candidates.push_back(cand);
  std::vector<Labeling> minima;
  for (const Labeling& cand : candidates) {
    bool is_min = true;
    for (const Labeling& other : candidates)
      if (!leq(cand, other)) { is_min = false; break; }
    if (is_min) minima.push_back(cand);
  }
  if (minima.empty()) return std::nullopt;
  if (minima.size() != 1) throw std::logic_error("up-complete minimum not unique");
  return minima.front();
}

inline Labeling brute_grounded(const ArgumentationFramework& af) {
  std::vector<Labeling> complete = brute_complete(af);
  std::vector<Labeling> minima;
  for (const Labeling& cand : complete) {
    bool is_min = true;
    for (const Labeling& other : complete)
      if (!leq(cand, other)) { is_min = false; break; }
    if (is_min) minima.push_back(cand);
  }
  if (minima.size() != 1) throw std::logic_error("grounded labeling not unique");
  return minima.front();
}

}  // namespace oracle

namespace testutil {

// "A=in B=out C=in" -> labeling (tiny parser independent of arglab::io).
inline arglab::Labeling lab(const arglab::ArgumentationFramework& af, std::string_view text) {
  arglab::Labeling l(af.argument_count());
  std::istringstream in{std::string(text)};
  std::string item;
  std::size_t assigned = 0;
  while (in >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad labeling text: " + item);
    auto arg = af.find(item.substr(0, eq));
    auto label = arglab::label_from_string(item.substr(eq + 1));
    if (!arg || !label) throw std::invalid_argument("bad labeling text: " + item);
    l.set(*arg, *label);
    ++assigned;
  }
  if (assigned != af.argument_count())
    throw std::invalid_argument("labeling text does not cover every argument");
  return l;
}

}  // namespace testutil
