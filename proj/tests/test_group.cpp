#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grouplat/group.hpp"

using namespace grouplat;

TEST_CASE("orders of standard groups") {
  CHECK(Group::symmetric(3).order_u64() == 6);
  CHECK(Group::symmetric(5).order_u64() == 120);
  CHECK(Group::alternating(4).order_u64() == 12);
  CHECK(Group::alternating(6).order_u64() == 360);
  CHECK(Group::alternating(7).order_u64() == 2520);
  CHECK(Group::cyclic(6).order_u64() == 6);
  CHECK(Group::trivial(5).order_u64() == 1);
}

TEST_CASE("generate: S3 from a transposition and a 3-cycle") {
  Group g = Group::generate(3, {Perm::parse("(0 1)", 3), Perm::parse("(0 1 2)", 3)});
  CHECK(g.order_u64() == 6);
}

TEST_CASE("generate: empty generators give the trivial group") {
  Group g = Group::generate(5, {});
  CHECK(g.order_u64() == 1);
  CHECK(g.contains(Perm::identity(5)));
}

TEST_CASE("generator degree mismatch rejected") {
  CHECK_THROWS_AS(Group::generate(4, {Perm::identity(3)}), std::invalid_argument);
}

TEST_CASE("membership") {
  Group a4 = Group::alternating(4);
  CHECK_FALSE(a4.contains(Perm::parse("(0 1)", 4)));
  CHECK(a4.contains(Perm::parse("(0 1)(2 3)", 4)));
  for (const auto& g : a4.generators()) CHECK(a4.contains(g));
  CHECK_THROWS_AS(a4.contains(Perm::identity(5)), std::invalid_argument);
}

TEST_CASE("element enumeration matches order and is duplicate-free") {
  Group s4 = Group::symmetric(4);
  auto elems = s4.elements();
  CHECK(elems.size() == 24);
  std::set<Perm> dedup(elems.begin(), elems.end());
  CHECK(dedup.size() == 24);
}

TEST_CASE("point stabilizer and orbit-stabilizer") {
  Group s5 = Group::symmetric(5);
  Group stab = s5.point_stabilizer(0);
  CHECK(stab.order_u64() == 24);
  for (const auto& g : stab.generators()) CHECK(g[0] == 0);
  // Lagrange / orbit-stabilizer on the transitive S5: orbit size 5
  CHECK(s5.order() == stab.order() * 5);
  CHECK_THROWS_AS(s5.point_stabilizer(7), std::invalid_argument);
}

TEST_CASE("even part") {
  Group s5 = Group::symmetric(5);
  Group e = s5.even_part();
  CHECK(e.order_u64() == 60);
  CHECK(e.same_group(Group::alternating(5)));
  // identity case
  Group a7 = Group::alternating(7);
  CHECK(a7.even_part().same_group(a7));
  // even part of even part is a fixed point
  CHECK(e.even_part().same_group(e));
  // index is 1 or 2
  Group c6 = Group::cyclic(6);
  CHECK(c6.even_part().order_u64() == 3);
}

TEST_CASE("coset action on a point stabilizer recovers the natural action") {
  Group s4 = Group::symmetric(4);
  Group h = s4.point_stabilizer(0);
  auto [image, faithful] = coset_action(s4, h);
  CHECK(image.degree() == 4);
  CHECK(image.order_u64() == 24);
  CHECK(faithful);
  auto c = is_perm_isomorphic(image, s4);
  CHECK(c.has_value());
}

TEST_CASE("coset action rejects non-subgroups") {
  Group s4 = Group::symmetric(4);
  Group s5 = Group::symmetric(5);
  CHECK_THROWS_AS(coset_action(s4, s5), std::invalid_argument);
}

TEST_CASE("normalizer of A5 in S5 is S5") {
  Group n = normalizer_in_sym(Group::alternating(5));
  CHECK(n.order_u64() == 120);
}

TEST_CASE("normalizer of an 11-cycle is AGL(1,11), by backtrack") {
  Group c11 = Group::cyclic(11);
  Group n = normalizer_in_sym(c11);
  CHECK(n.order_u64() == 110);
  CHECK(c11.is_subgroup_of(n));
  for (const auto& g : n.generators()) {
    Perm gi = g.inverse();
    for (const auto& c : c11.generators()) CHECK(n.contains(gi * c * g));
  }
}

TEST_CASE("normalizer refuses above the degree budget") {
  Group c13 = Group::cyclic(13);
  CHECK_THROWS_AS(normalizer_in_sym(c13), budget_error);
}

TEST_CASE("perm isomorphism: two point stabilizers of S4") {
  Group s4 = Group::symmetric(4);
  Group h0 = s4.point_stabilizer(0);
  Group h1 = s4.point_stabilizer(1);
  auto c = is_perm_isomorphic(h0, h1);
  REQUIRE(c.has_value());
  CHECK(h0.conjugated_by(*c).same_group(h1));
  // identity is acceptable for G = H
  auto cc = is_perm_isomorphic(h0, h0);
  CHECK(cc.has_value());
}

TEST_CASE("all_subgroups: S3 has 6 subgroups") {
  auto subs = all_subgroups(Group::symmetric(3));
  CHECK(subs.size() == 6);
}

TEST_CASE("all_subgroups: Klein four-group has 5 subgroups") {
  Group v4 = Group::generate(4, {Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)});
  CHECK(v4.order_u64() == 4);
  auto subs = all_subgroups(v4);
  CHECK(subs.size() == 5);
}

TEST_CASE("all_subgroups: budget refusal") {
  CHECK_THROWS_AS(all_subgroups(Group::symmetric(6), 400), budget_error);
}

TEST_CASE("all_subgroups satisfies Lagrange") {
  Group s4 = Group::symmetric(4);
  auto subs = all_subgroups(s4);
  CHECK(subs.size() == 30);  // classical count for S4
  for (const auto& h : subs) CHECK(24 % h.order_u64() == 0);
}

TEST_CASE("pointwise stabilizer") {
  Group s5 = Group::symmetric(5);
  Group fix01 = s5.pointwise_stabilizer({0, 1});
  CHECK(fix01.order_u64() == 6);
}

TEST_CASE("Frattini argument: transitive H times point stabilizer is G") {
  Group g = Group::symmetric(4);
  Group h = Group::cyclic(4);  // transitive subgroup
  Group stab = g.point_stabilizer(0);
  // |HK| = |H||K|/|H ∩ K|; H ∩ K computed by element filter
  unsigned long long meet = 0;
  for (const auto& e : h.elements())
    if (stab.contains(e)) ++meet;
  CHECK(h.order_u64() * stab.order_u64() / meet == g.order_u64());
}

TEST_CASE("set system stabilizer: rows of a 2x3 grid") {
  // points 0..5 in two rows {0,1,2},{3,4,5}: stabilizer is S3 wr S2, order 72
  Group st = set_system_stabilizer(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(st.order_u64() == 72);
}
