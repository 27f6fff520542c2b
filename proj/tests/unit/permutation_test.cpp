#include <doctest.h>

#include "grpi/errors.hpp"
#include "grpi/permutation.hpp"

using grpi::ErrorCode;
using grpi::GroupError;
using grpi::Permutation;

namespace {

ErrorCode code_of(std::string_view text, std::size_t degree) {
  try {
    (void)Permutation::from_cycles(text, degree);
  } catch (const GroupError& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::parse_error;
}

}  // namespace

TEST_CASE("cycle notation round trips") {
  for (const char* text : {"()", "(0 1)", "(0 1 2)(3 4)", "(1 3 2)"}) {
    CHECK(Permutation::from_cycles(text, 5).to_cycles() == text);
  }
  CHECK(Permutation::from_cycles("", 3).is_identity());
  CHECK(Permutation::from_cycles("(2)", 3).is_identity());
}

TEST_CASE("malformed cycles are rejected with a code") {
  CHECK(code_of("(0 3)", 3) == ErrorCode::point_out_of_range);
  CHECK(code_of("(0 1 0)", 3) == ErrorCode::not_bijective);
  CHECK(code_of("(0 1)(1 2)", 3) == ErrorCode::not_bijective);
  CHECK(code_of("(0 1", 3) == ErrorCode::parse_error);
  CHECK(code_of("(0 x)", 3) == ErrorCode::parse_error);
  CHECK_THROWS_AS(Permutation(std::vector<grpi::Point>{0, 0, 1}), GroupError);
}

TEST_CASE("products read left to right") {
  const auto a = Permutation::from_cycles("(0 1)", 3);
  const auto b = Permutation::from_cycles("(1 2)", 3);
  const auto ab = a * b;
  for (grpi::Point i = 0; i < 3; ++i) CHECK(ab(i) == b(a(i)));
  CHECK(ab.to_cycles() == "(0 2 1)");
  CHECK(grpi::compose(a, b) == ab);
}

TEST_CASE("conjugation, inverse, powers and order") {
  const auto x = Permutation::from_cycles("(0 1 2 3)", 5);
  const auto g = Permutation::from_cycles("(3 4)", 5);
  CHECK(x.conjugate_by(g) == g.inverse() * x * g);
  CHECK(x.conjugate_by(g).to_cycles() == "(0 1 2 4)");
  CHECK((x * x.inverse()).is_identity());
  CHECK(x.order() == 4);
  CHECK(x.pow(4).is_identity());
  CHECK(x.pow(-1) == x.inverse());
  CHECK(x.pow(6) == x.pow(2));
  CHECK(Permutation::from_cycles("(0 1)(2 3 4)", 5).order() == 6);
  CHECK(x.first_moved_point() == 0);
  CHECK(Permutation::identity(4).first_moved_point() == 4);
  const auto c = grpi::commutator(x, g);
  CHECK(c == x.inverse() * g.inverse() * x * g);
}

TEST_CASE("hash is a function of the images") {
  const auto a = Permutation::from_cycles("(0 1 2)", 4);
  const auto b = Permutation::from_cycles("(1 2 0)", 4);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != Permutation::from_cycles("(0 2 1)", 4).hash());
}
