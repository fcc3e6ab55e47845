// arglab :: commitment order, compatibility, down-admissible, up-complete
//
// The commitment order compares how much two labelings decide: L1 <= L2 iff
// every in of L1 is in under L2 and every out of L1 is out under L2. The
// down-admissible of L is the most committed admissible labeling below L;
// the up-complete of an admissible L is the least committed complete
// labeling above L. Both are unique, which is what lets the fixpoints below
// stand in for the declarative set-maximum/minimum (the test suite checks
// them against brute-force oracles).

#pragma once

#include <cstddef>

#include "arglab/framework.hpp"
#include "arglab/semantics.hpp"

namespace arglab {

// L1 is less or equally committed than L2.
inline bool leq_committed(const Labeling& l1, const Labeling& l2) {
  if (l1.size() != l2.size())
    throw MismatchError("cannot order labelings of different frameworks");
  for (std::size_t a = 0; a < l1.size(); ++a) {
    if (l1[a] == Label::In && l2[a] != Label::In) return false;
    if (l1[a] == Label::Out && l2[a] != Label::Out) return false;
  }
  return true;
}

// No argument is in under one labeling and out under the other.
inline bool compatible(const Labeling& l1, const Labeling& l2) {
  if (l1.size() != l2.size())
    throw MismatchError("cannot compare labelings of different frameworks");
  for (std::size_t a = 0; a < l1.size(); ++a) {
    if (l1[a] == Label::In && l2[a] == Label::Out) return false;
    if (l1[a] == Label::Out && l2[a] == Label::In) return false;
  }
  return true;
}

namespace detail {

// Full-sweep demotion to undec of every illegally-in argument (some defeater
// not out) and illegally-out argument (no in defeater). Labels move only
// toward undec, so at most n sweeps change anything; `demoting_sweeps`
// receives that count when non-null.
inline Labeling down_admissible_counted(const ArgumentationFramework& af, Labeling l,
                                        std::size_t* demoting_sweeps) {
  require_same_arity(af, l);
  std::size_t sweeps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < af.argument_count(); ++a) {
      const auto& ds = af.defeaters_of(a);
      if (l[a] == Label::In) {
        for (std::size_t d : ds) {
          if (l[d] != Label::Out) {
            l.set(a, Label::Undec);
            changed = true;
            break;
          }
        }
      } else if (l[a] == Label::Out) {
        bool has_in = false;
        for (std::size_t d : ds)
          if (l[d] == Label::In) { has_in = true; break; }
        if (!has_in) {
          l.set(a, Label::Undec);
          changed = true;
        }
      }
    }
    if (changed) ++sweeps;
  }
  if (demoting_sweeps) *demoting_sweeps = sweeps;
  return l;
}

}  // namespace detail

// Most committed admissible labeling below l. Defined for every labeling.
inline Labeling down_admissible(const ArgumentationFramework& af, Labeling l) {
  return detail::down_admissible_counted(af, std::move(l), nullptr);
}

// Least committed complete labeling above l. Requires l admissible.
inline Labeling up_complete(const ArgumentationFramework& af, Labeling l) {
  require_same_arity(af, l);
  if (!is_admissible(af, l))
    throw NotAdmissibleError("up_complete requires an admissible labeling");
  detail::promote_to_fixpoint(af, l);
  return l;
}

}  // namespace arglab
