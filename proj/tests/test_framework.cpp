#include <catch2/catch_amalgamated.hpp>

#include "arglab/catalog.hpp"
#include "arglab/framework.hpp"

using namespace arglab;

TEST_CASE("argument declaration") {
  ArgumentationFramework af;
  CHECK(af.add_argument("A") == 0);
  CHECK(af.add_argument("b_2") == 1);
  CHECK(af.argument_count() == 2);
  CHECK(af.name_of(1) == "b_2");
  CHECK(af.find("A") == 0);
  CHECK_FALSE(af.find("missing").has_value());

  SECTION("duplicate names are rejected") {
    CHECK_THROWS_AS(af.add_argument("A"), FrameworkError);
  }
  SECTION("names must be identifier tokens") {
    CHECK_THROWS_AS(af.add_argument(""), FrameworkError);
    CHECK_THROWS_AS(af.add_argument("a b"), FrameworkError);
    CHECK_THROWS_AS(af.add_argument("x-y"), FrameworkError);
  }
}

TEST_CASE("defeat relation is a set") {
  ArgumentationFramework af;
  af.add_argument("A");
  af.add_argument("B");
  af.add_defeat("B", "A");
  af.add_defeat("B", "A");  // idempotent
  CHECK(af.defeat_count() == 1);
  CHECK(af.defeats(1, 0));
  CHECK_FALSE(af.defeats(0, 1));
  CHECK(af.defeaters_of(0) == std::vector<std::size_t>{1});

  SECTION("self-defeat is allowed") {
    af.add_defeat("A", "A");
    CHECK(af.defeats(0, 0));
  }
  SECTION("endpoints must be declared") {
    CHECK_THROWS_AS(af.add_defeat("B", "Z"), FrameworkError);
    CHECK_THROWS_AS(af.add_defeat(std::size_t{0}, std::size_t{7}), FrameworkError);
  }
}

TEST_CASE("framework equality ignores defeat insertion order") {
  ArgumentationFramework a;
  a.add_argument("x");
  a.add_argument("y");
  a.add_defeat("x", "y");
  a.add_defeat("y", "x");

  ArgumentationFramework b;
  b.add_argument("x");
  b.add_argument("y");
  b.add_defeat("y", "x");
  b.add_defeat("x", "y");

  CHECK(a == b);

  ArgumentationFramework c;
  c.add_argument("y");
  c.add_argument("x");
  CHECK_FALSE(a == c);  // argument order is part of the identity
}

TEST_CASE("labelings are total and ordered lexicographically") {
  CHECK(Labeling(3)[1] == Label::Undec);
  CHECK(Labeling{Label::In} < Labeling{Label::Out});
  CHECK(Labeling{Label::Out} < Labeling{Label::Undec});
  CHECK(Labeling{Label::In, Label::Undec} < Labeling{Label::Out, Label::In});

  ArgumentationFramework af = make_af_s();
  CHECK_THROWS_AS(require_same_arity(af, Labeling(2)), MismatchError);
  CHECK_NOTHROW(require_same_arity(af, Labeling(3)));
}

TEST_CASE("label tokens round-trip") {
  for (Label l : kLabels) CHECK(label_from_string(to_string(l)) == l);
  CHECK_FALSE(label_from_string("maybe").has_value());
}
