// arglab :: labeling legality and enumeration
//
// Legality of a labeling L:
//   admissible: every in-argument has all defeaters out, and every
//               out-argument has at least one in defeater;
//   complete:   admissible, and every undec-argument has no in defeater and
//               at least one undec defeater.
//
// Enumeration backtracks over the arguments in declaration order, trying
// in, out, undec per argument, and prunes a partial assignment only when a
// constraint is already definitely violated (labels are never revisited, so
// an in-argument with a non-out assigned defeater can never be repaired).
// The result order is therefore lexicographic. Output equivalence with the
// plain 3^n filter is pinned by the test suite.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arglab/framework.hpp"

namespace arglab {

// Exhaustive tooling, desk scale: enumeration refuses anything bigger.
inline constexpr std::size_t kMaxEnumerationArguments = 24;

inline bool is_admissible(const ArgumentationFramework& af, const Labeling& l) {
  require_same_arity(af, l);
  for (std::size_t a = 0; a < af.argument_count(); ++a) {
    const auto& ds = af.defeaters_of(a);
    if (l[a] == Label::In) {
      for (std::size_t d : ds)
        if (l[d] != Label::Out) return false;
    } else if (l[a] == Label::Out) {
      bool has_in = false;
      for (std::size_t d : ds)
        if (l[d] == Label::In) { has_in = true; break; }
      if (!has_in) return false;
    }
  }
  return true;
}

inline bool is_complete(const ArgumentationFramework& af, const Labeling& l) {
  require_same_arity(af, l);
  for (std::size_t a = 0; a < af.argument_count(); ++a) {
    const auto& ds = af.defeaters_of(a);
    switch (l[a]) {
      case Label::In:
        for (std::size_t d : ds)
          if (l[d] != Label::Out) return false;
        break;
      case Label::Out: {
        bool has_in = false;
        for (std::size_t d : ds)
          if (l[d] == Label::In) { has_in = true; break; }
        if (!has_in) return false;
        break;
      }
      case Label::Undec: {
        bool has_undec = false;
        for (std::size_t d : ds) {
          if (l[d] == Label::In) return false;
          if (l[d] == Label::Undec) has_undec = true;
        }
        if (!has_undec) return false;
        break;
      }
    }
  }
  return true;
}

namespace detail {

enum class LegalityMode { Admissible, Complete };

// True iff argument `a` already violates its clause given that only the
// arguments [0, assigned) carry labels. Unassigned defeaters may still take
// any label, so only irreparable situations count.
inline bool prefix_violation(const ArgumentationFramework& af, const std::vector<Label>& l,
                             std::size_t assigned, std::size_t a, LegalityMode mode) {
  const auto& ds = af.defeaters_of(a);
  switch (l[a]) {
    case Label::In:
      for (std::size_t d : ds)
        if (d < assigned && l[d] != Label::Out) return true;
      return false;
    case Label::Out: {
      bool all_assigned = true;
      for (std::size_t d : ds) {
        if (d >= assigned) { all_assigned = false; continue; }
        if (l[d] == Label::In) return false;
      }
      return all_assigned;  // no defeater can ever become in
    }
    case Label::Undec: {
      if (mode == LegalityMode::Admissible) return false;
      bool all_assigned = true, has_undec = false;
      for (std::size_t d : ds) {
        if (d >= assigned) { all_assigned = false; continue; }
        if (l[d] == Label::In) return true;
        if (l[d] == Label::Undec) has_undec = true;
      }
      return all_assigned && !has_undec;
    }
  }
  return false;
}

inline void enumerate_legal(const ArgumentationFramework& af, LegalityMode mode,
                            std::vector<Labeling>& out) {
  const std::size_t n = af.argument_count();
  std::vector<Label> current(n, Label::Undec);

  auto consistent_after = [&](std::size_t k) {
    // Assigning argument k can only break clauses of k itself and of the
    // already-assigned arguments it attacks.
    if (prefix_violation(af, current, k + 1, k, mode)) return false;
    for (std::size_t t : af.targets_of(k))
      if (t < k && prefix_violation(af, current, k + 1, t, mode)) return false;
    return true;
  };

  auto descend = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      Labeling l(n);
      for (std::size_t i = 0; i < n; ++i) l.set(i, current[i]);
      bool legal = (mode == LegalityMode::Complete) ? is_complete(af, l) : is_admissible(af, l);
      if (legal) out.push_back(std::move(l));
      return;
    }
    for (Label lab : kLabels) {
      current[k] = lab;
      if (consistent_after(k)) self(self, k + 1);
    }
    current[k] = Label::Undec;
  };
  descend(descend, 0);
}

inline void require_enumerable(const ArgumentationFramework& af) {
  if (af.argument_count() > kMaxEnumerationArguments)
    throw SizeLimitError("framework has " + std::to_string(af.argument_count()) +
                         " arguments; enumeration is limited to " +
                         std::to_string(kMaxEnumerationArguments));
}

// In-place monotone promotion: undec becomes in once every defeater is out,
// and out once some defeater is in. Labels never change after leaving undec,
// so the loop runs at most n sweeps.
inline void promote_to_fixpoint(const ArgumentationFramework& af, Labeling& l) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < af.argument_count(); ++a) {
      if (l[a] != Label::Undec) continue;
      bool all_out = true, some_in = false;
      for (std::size_t d : af.defeaters_of(a)) {
        if (l[d] != Label::Out) all_out = false;
        if (l[d] == Label::In) { some_in = true; break; }
      }
      if (some_in) {
        l.set(a, Label::Out);
        changed = true;
      } else if (all_out) {
        l.set(a, Label::In);
        changed = true;
      }
    }
  }
}

}  // namespace detail

// All complete labelings in lexicographic order. Never empty: the grounded
// labeling is complete for every framework.
inline std::vector<Labeling> enumerate_complete(const ArgumentationFramework& af) {
  detail::require_enumerable(af);
  std::vector<Labeling> out;
  detail::enumerate_legal(af, detail::LegalityMode::Complete, out);
  return out;
}

// All admissible labelings in lexicographic order. Always contains the
// all-undec labeling.
inline std::vector<Labeling> enumerate_admissible(const ArgumentationFramework& af) {
  detail::require_enumerable(af);
  std::vector<Labeling> out;
  detail::enumerate_legal(af, detail::LegalityMode::Admissible, out);
  return out;
}

// The unique minimally committed complete labeling, by fixpoint promotion
// from all-undec.
inline Labeling grounded(const ArgumentationFramework& af) {
  Labeling l = Labeling::all_undec(af);
  detail::promote_to_fixpoint(af, l);
  return l;
}

}  // namespace arglab
