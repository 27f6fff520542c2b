#include <doctest.h>

#include "bridge.hpp"
#include "grpi/embeddings.hpp"

using bridge::group;
using bridge::sub;

TEST_CASE("named embedding cases") {
  const auto s3 = group(3, {"(0 1 2)", "(0 1)"});
  const auto s4 = group(4, {"(0 1 2 3)", "(0 1)"});
  const auto a4 = group(4, {"(0 1 2)", "(1 2 3)"});
  CHECK_FALSE(grpi::is_permutable(s3, sub(s3, {"(0 1)"})));
  CHECK(grpi::is_permutable(s3, sub(s3, {"(0 1 2)"})));
  CHECK(grpi::is_permutable(s3, grpi::Subgroup::whole(s3)));
  CHECK_FALSE(grpi::is_s_permutable(s4, sub(s4, {"(0 1)(2 3)"})));
  CHECK(grpi::is_s_permutable(s4, sub(s4, {"(0 1)(2 3)", "(0 2)(1 3)"})));
  CHECK_FALSE(grpi::is_cap_subgroup(s4, sub(s4, {"(0 1 2 3)"})));
  CHECK(grpi::is_cap_subgroup(s4, grpi::Subgroup::whole(s4)));
  CHECK_FALSE(grpi::is_c_normal(a4, sub(a4, {"(0 1)(2 3)"})));
  CHECK(grpi::is_c_normal(a4, grpi::Subgroup::whole(a4)));
  CHECK(grpi::is_c_normal(a4, grpi::Subgroup::trivial(a4)));
  CHECK(grpi::is_ss_quasinormal(s4, grpi::Subgroup::whole(s4)));
  CHECK(grpi::is_pi_normal(s4, sub(s4, {"(0 1)(2 3)", "(0 2)(1 3)"})));
  CHECK(grpi::conjugacy_class(s4, sub(s4, {"(0 1)"})).size() == 6);
  CHECK(grpi::conjugacy_class(s4, sub(s4, {"(0 1 2 3)"})).size() == 3);
}

TEST_CASE("normal subgroups have every embedding property") {
  for (const auto& g : bridge::corpus(48)) {
    CAPTURE(g.label());
    grpi::EmbeddingContext ctx(g);
    for (const auto& n : ctx.normal_lattice().subgroups()) {
      CHECK(ctx.is_permutable(n));
      CHECK(ctx.is_s_permutable(n));
      CHECK(ctx.is_s_semipermutable(n));
      CHECK(ctx.is_cap_subgroup(n));
      CHECK(ctx.is_c_normal(n));
      CHECK(ctx.is_c_sharp_normal(n));
      CHECK(ctx.is_uc_normal(n));
      CHECK(ctx.is_pi_normal(n));
      CHECK(ctx.is_ss_quasinormal(n));
      CHECK(ctx.is_u_hypercentral_mod_core(n));
    }
  }
}

TEST_CASE("checkers agree with brute force") {
  for (const auto& g : bridge::corpus(32)) {
    CAPTURE(g.label());
    const auto t = bridge::table_of(g);
    const auto subs = oracle::all_subgroups(t);
    const auto normals = oracle::normal_subgroups(t, subs);
    const auto covers = oracle::chief_factors(t, normals);
    grpi::EmbeddingContext ctx(g);
    REQUIRE(ctx.subgroups().size() == subs.size());
    for (const auto& h : ctx.subgroups()) {
      const auto hs = bridge::set_of(t, h);
      CHECK(ctx.is_permutable(h) == oracle::permutable(t, hs, subs));
      CHECK(ctx.is_s_permutable(h) == oracle::s_permutable(t, hs, subs));
      CHECK(ctx.is_s_semipermutable(h) == oracle::s_semipermutable(t, hs, subs));
      CHECK(ctx.is_cap_subgroup(h) == oracle::cap_subgroup(t, hs, covers));
      CHECK(ctx.is_c_normal(h) == oracle::c_normal(t, hs, normals));
    }
    for (std::uint64_t p : grpi::pi_of(g.order()).primes()) {
      CHECK(ctx.sylow_subgroups(p).size() == oracle::sylow_subgroups(t, subs, p).size());
    }
  }
}

TEST_CASE("subnormal subgroups match brute force") {
  for (const auto& g : bridge::corpus(24)) {
    CAPTURE(g.label());
    const auto t = bridge::table_of(g);
    const auto subs = oracle::all_subgroups(t);
    std::size_t expected = 0;
    for (const auto& s : subs) expected += oracle::is_subnormal(t, s, subs);
    grpi::EmbeddingContext ctx(g);
    CHECK(ctx.subnormal_subgroups().size() == expected);
  }
}

TEST_CASE("implication chain holds on every subgroup") {
  for (const auto& g : bridge::corpus(48)) {
    CAPTURE(g.label());
    grpi::EmbeddingContext ctx(g);
    for (const auto& h : ctx.subgroups()) {
      if (ctx.is_permutable(h)) CHECK(ctx.is_s_permutable(h));
      if (ctx.is_s_permutable(h)) CHECK(ctx.is_s_semipermutable(h));
      if (ctx.pi_checker().verdict(h)) CHECK(ctx.is_pi_normal(h));
      if (ctx.is_cap_subgroup(h)) CHECK(ctx.pi_checker().verdict(h));
      if (ctx.is_s_permutable(h)) CHECK(ctx.pi_checker().verdict(h));
    }
  }
}
