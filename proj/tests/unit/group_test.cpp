#include <doctest.h>

#include <set>

#include "bridge.hpp"
#include "grpi/errors.hpp"
#include "grpi/group.hpp"

TEST_CASE("chain order matches brute-force closure across the corpus") {
  for (const auto& g : bridge::corpus(200)) {
    if (g.degree() > 10) continue;
    CAPTURE(g.label());
    CHECK(g.order() == bridge::table_of(g).order());
  }
}

TEST_CASE("element enumeration is complete and duplicate free") {
  for (const auto& g : bridge::corpus(60)) {
    CAPTURE(g.label());
    const auto all = grpi::elements(g);
    CHECK(all.size() == g.order());
    CHECK(std::set<grpi::Permutation>(all.begin(), all.end()).size() == all.size());
    for (const auto& x : all) CHECK(g.contains(x));
  }
}

TEST_CASE("membership agrees with the Cayley table") {
  const auto g = bridge::group(5, {"(0 1 2)", "(2 3 4)"});  // A5
  CHECK(g.order() == 60);
  CHECK(g.contains(grpi::Permutation::from_cycles("(0 1)(2 3)", 5)));
  CHECK_FALSE(g.contains(grpi::Permutation::from_cycles("(0 1)", 5)));
  CHECK_THROWS_AS(g.contains(grpi::Permutation::from_cycles("(0 1)", 4)), grpi::GroupError);
}

TEST_CASE("chains are deterministic") {
  const auto a = bridge::group(6, {"(0 1 2 3 4 5)", "(0 1)"});
  const auto b = bridge::group(6, {"(0 1 2 3 4 5)", "(0 1)"});
  CHECK(a.order() == 720);
  CHECK(a.chain().base() == b.chain().base());
  CHECK(grpi::elements(a) == grpi::elements(b));
}

TEST_CASE("enumeration cap is enforced") {
  const auto g = bridge::group(12, {"(0 1 2 3 4 5 6 7 8 9 10 11)", "(0 1)"});
  CHECK_THROWS_AS(grpi::elements(g), grpi::GroupError);
}
