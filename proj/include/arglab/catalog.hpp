// arglab :: fixed framework catalog
//
// The small graphs used by the postulate search and the test benches. The
// catalog is versioned by its order: searches walk it front to back, so
// reordering changes which witness is reported first.

#pragma once

#include <string>
#include <vector>

#include "arglab/framework.hpp"

namespace arglab {

// B attacks A; B and C attack each other. Three complete labelings.
inline ArgumentationFramework make_af_s() {
  ArgumentationFramework af;
  af.add_argument("A");
  af.add_argument("B");
  af.add_argument("C");
  af.add_defeat("B", "A");
  af.add_defeat("B", "C");
  af.add_defeat("C", "B");
  return af;
}

// A attacked by both B and D; B/C and D/E are mutual attacks. Nine complete
// labelings.
inline ArgumentationFramework make_af_c() {
  ArgumentationFramework af;
  for (const char* name : {"A", "B", "C", "D", "E"}) af.add_argument(name);
  af.add_defeat("B", "A");
  af.add_defeat("D", "A");
  af.add_defeat("B", "C");
  af.add_defeat("C", "B");
  af.add_defeat("D", "E");
  af.add_defeat("E", "D");
  return af;
}

// Acyclic: a1 attacked by a2 and a4, which are attacked by a3 and a5.
// Unique complete labeling.
inline ArgumentationFramework make_af_g() {
  ArgumentationFramework af;
  for (const char* name : {"a1", "a2", "a3", "a4", "a5"}) af.add_argument(name);
  af.add_defeat("a2", "a1");
  af.add_defeat("a4", "a1");
  af.add_defeat("a3", "a2");
  af.add_defeat("a5", "a4");
  return af;
}

// a -> b -> ... -> a over n single-letter arguments.
inline ArgumentationFramework make_cycle(std::size_t n) {
  if (n == 0 || n > 26) throw FrameworkError("cycle size must be in [1, 26]");
  ArgumentationFramework af;
  for (std::size_t i = 0; i < n; ++i) af.add_argument(std::string(1, static_cast<char>('a' + i)));
  for (std::size_t i = 0; i < n; ++i) af.add_defeat(i, (i + 1) % n);
  return af;
}

// a -> b -> ... over n single-letter arguments.
inline ArgumentationFramework make_chain(std::size_t n) {
  if (n == 0 || n > 26) throw FrameworkError("chain size must be in [1, 26]");
  ArgumentationFramework af;
  for (std::size_t i = 0; i < n; ++i) af.add_argument(std::string(1, static_cast<char>('a' + i)));
  for (std::size_t i = 0; i + 1 < n; ++i) af.add_defeat(i, i + 1);
  return af;
}

struct CatalogEntry {
  std::string name;
  ArgumentationFramework framework;
};

inline const std::vector<CatalogEntry>& framework_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> c;
    c.push_back({"af_s", make_af_s()});
    c.push_back({"af_c", make_af_c()});
    c.push_back({"af_g", make_af_g()});
    c.push_back({"cycle3", make_cycle(3)});
    c.push_back({"cycle2", make_cycle(2)});
    c.push_back({"chain3", make_chain(3)});
    return c;
  }();
  return catalog;
}

}  // namespace arglab
