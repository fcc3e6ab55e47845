#include <catch2/catch_amalgamated.hpp>

#include "arglab/catalog.hpp"
#include "arglab/order.hpp"
#include "support.hpp"

using namespace arglab;
using testutil::lab;

namespace {

std::vector<const CatalogEntry*> small_catalog(std::size_t max_args) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& entry : framework_catalog())
    if (entry.framework.argument_count() <= max_args) out.push_back(&entry);
  return out;
}

}  // namespace

TEST_CASE("commitment order basics") {
  ArgumentationFramework af = make_af_s();
  Labeling undec = Labeling::all_undec(af);

  for (const Labeling& l : oracle::all_labelings(af)) CHECK(leq_committed(undec, l));
  CHECK(leq_committed(lab(af, "A=undec B=in C=out"), lab(af, "A=out B=in C=out")));
  CHECK_FALSE(leq_committed(lab(af, "A=in B=in C=out"), lab(af, "A=out B=in C=out")));
  CHECK_THROWS_AS(leq_committed(Labeling(2), Labeling(3)), MismatchError);
}

TEST_CASE("commitment order is a partial order") {
  for (const CatalogEntry* entry : small_catalog(3)) {
    INFO(entry->name);
    auto space = oracle::all_labelings(entry->framework);
    for (const Labeling& x : space) {
      CHECK(leq_committed(x, x));
      for (const Labeling& y : space) {
        if (leq_committed(x, y) && leq_committed(y, x)) CHECK(x == y);
        for (const Labeling& z : space)
          if (leq_committed(x, y) && leq_committed(y, z)) CHECK(leq_committed(x, z));
      }
    }
  }
}

TEST_CASE("compatibility relation") {
  ArgumentationFramework af = make_af_s();
  Labeling undec = Labeling::all_undec(af);

  for (const Labeling& l : oracle::all_labelings(af)) {
    CHECK(compatible(undec, l));
    CHECK(compatible(l, l));  // a label conflicts only with a different label
  }
  CHECK_FALSE(compatible(lab(af, "A=in B=out C=in"), lab(af, "A=out B=in C=out")));

  // symmetric by definition
  for (const Labeling& x : oracle::all_labelings(af))
    for (const Labeling& y : oracle::all_labelings(af))
      CHECK(compatible(x, y) == compatible(y, x));
}

TEST_CASE("down_admissible examples") {
  ArgumentationFramework af_s = make_af_s();
  // already admissible: identity
  for (const Labeling& l : oracle::brute_admissible(af_s)) CHECK(down_admissible(af_s, l) == l);

  CHECK(down_admissible(af_s, lab(af_s, "A=in B=in C=out")) == lab(af_s, "A=undec B=in C=out"));

  ArgumentationFramework af_c = make_af_c();
  CHECK(down_admissible(af_c, lab(af_c, "A=out B=undec C=undec D=undec E=undec")) ==
        Labeling::all_undec(af_c));
}

TEST_CASE("down_admissible equals the brute-force set maximum") {
  for (const CatalogEntry& entry : framework_catalog()) {
    if (entry.framework.argument_count() > 5) continue;
    INFO(entry.name);
    std::size_t n = entry.framework.argument_count();
    for (const Labeling& l : oracle::all_labelings(entry.framework)) {
      std::size_t sweeps = 0;
      Labeling down = arglab::detail::down_admissible_counted(entry.framework, l, &sweeps);
      CHECK(down == oracle::brute_down(entry.framework, l));
      CHECK(is_admissible(entry.framework, down));
      CHECK(oracle::leq(down, l));
      CHECK(sweeps <= n);  // each demoting sweep only moves labels toward undec
    }
  }
}

TEST_CASE("up_complete examples") {
  ArgumentationFramework af_s = make_af_s();
  for (const Labeling& l : oracle::brute_complete(af_s)) CHECK(up_complete(af_s, l) == l);

  CHECK(up_complete(af_s, lab(af_s, "A=undec B=in C=out")) == lab(af_s, "A=out B=in C=out"));

  ArgumentationFramework af_g = make_af_g();
  CHECK(up_complete(af_g, Labeling::all_undec(af_g)) == grounded(af_g));

  CHECK_THROWS_AS(up_complete(af_s, lab(af_s, "A=out B=undec C=undec")), NotAdmissibleError);
}

TEST_CASE("up_complete equals the brute-force set minimum") {
  for (const CatalogEntry& entry : framework_catalog()) {
    if (entry.framework.argument_count() > 5) continue;
    INFO(entry.name);
    for (const Labeling& l : oracle::brute_admissible(entry.framework)) {
      Labeling up = up_complete(entry.framework, l);
      auto expected = oracle::brute_up(entry.framework, l);
      REQUIRE(expected.has_value());
      CHECK(up == *expected);
      CHECK(is_complete(entry.framework, up));
      CHECK(oracle::leq(l, up));
    }
  }
}

TEST_CASE("up_complete of all-undec is the grounded labeling") {
  for (const CatalogEntry& entry : framework_catalog()) {
    INFO(entry.name);
    Labeling undec = Labeling::all_undec(entry.framework);
    CHECK(up_complete(entry.framework, undec) == grounded(entry.framework));
  }
}
