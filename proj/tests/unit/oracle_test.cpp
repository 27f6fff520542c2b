// Sanity checks on the oracle itself, against hand counts.
#include <doctest.h>

#include "oracle/brute.hpp"

using namespace oracle;

namespace {

std::size_t subgroup_count(const std::vector<std::string>& gens, int degree) {
  return all_subgroups(from_cycles(gens, degree)).size();
}

}  // namespace

TEST_CASE("oracle closure orders") {
  CHECK(from_cycles({"(0 1 2)", "(0 1)"}, 3).order() == 6);
  CHECK(from_cycles({"(0 1 2 3)", "(0 1)"}, 4).order() == 24);
  CHECK(from_cycles({"(0 1)(2 3)", "(0 2)(1 3)"}, 4).order() == 4);
  CHECK(from_cycles({"(0 1 2 3 4)", "(0 1 2)"}, 5).order() == 60);
}

TEST_CASE("oracle product convention applies the left factor first") {
  const Perm a = parse_cycles("(0 1)", 3);
  const Perm b = parse_cycles("(1 2)", 3);
  CHECK(multiply(a, b) == parse_cycles("(0 2 1)", 3));
}

TEST_CASE("oracle subgroup counts") {
  CHECK(subgroup_count({"(0 1 2)", "(0 1)"}, 3) == 6);
  CHECK(subgroup_count({"(0 1 2 3)", "(0 1)"}, 4) == 30);
  CHECK(subgroup_count({"(0 1 2)", "(1 2 3)"}, 4) == 10);
  CHECK(subgroup_count({"(0 1 2 3)", "(1 3)"}, 4) == 10);
  CHECK(subgroup_count({"(0 1 2 3)(4 7 5 6)", "(0 4 2 5)(1 6 3 7)"}, 8) == 6);
  CHECK(subgroup_count({"(0 1 2 3 4)", "(0 1 2)"}, 5) == 59);
}

TEST_CASE("oracle normal structure of S4") {
  const Table t = from_cycles({"(0 1 2 3)", "(0 1)"}, 4);
  const auto subs = all_subgroups(t);
  const auto normals = normal_subgroups(t, subs);
  CHECK(normals.size() == 4);
  const auto factors = chief_factors(t, normals);
  CHECK(factors.size() == 3);
  CHECK(p_soluble(factors, 2));
  CHECK_FALSE(p_supersoluble(factors, 2));
  CHECK(p_supersoluble(factors, 3));
  CHECK_FALSE(p_nilpotent(t, normals, 2));
}

TEST_CASE("oracle reproduces the S4 cyclic-four negative case") {
  const Table t = from_cycles({"(0 1 2 3)", "(0 1)"}, 4);
  const auto normals = normal_subgroups(t, all_subgroups(t));
  const auto factors = chief_factors(t, normals);
  Set gen(t.order(), false);
  gen[t.index_of(parse_cycles("(0 1 2 3)", 4))] = true;
  const Set h = generate(t, gen);
  const auto trail = pi_property(t, h, factors);
  bool found = false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (count(factors[i].lower) == 1 && count(factors[i].upper) == 4) {
      found = true;
      CHECK(trail[i].intersection_order == 2);
      CHECK(trail[i].normalizer_index == 3);
      CHECK_FALSE(trail[i].pass);
    }
  }
  CHECK(found);
  CHECK_FALSE(pi_verdict(t, h, factors));
}
