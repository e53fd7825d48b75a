#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grouplat/perm.hpp"

using namespace grouplat;

namespace {

Perm random_perm(int degree, std::mt19937& rng) {
  std::vector<uint16_t> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = static_cast<uint16_t>(i);
  std::shuffle(im.begin(), im.end(), rng);
  return Perm(im);
}

// Independent parity oracle: count inversions.
int parity_by_inversions(const Perm& p) {
  int inv = 0;
  for (int i = 0; i < p.degree(); ++i)
    for (int j = i + 1; j < p.degree(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv & 1;
}

}  // namespace

TEST_CASE("identity and composition basics") {
  Perm id = Perm::identity(5);
  CHECK(id.is_identity());
  Perm t = Perm::parse("(0 1)", 4);
  CHECK(t * t == Perm::identity(4));
  CHECK(t.inverse() == t);
  Perm c = Perm::parse("(0 1 2)", 3);
  CHECK((c * c * c).is_identity());
  CHECK(c * c.inverse() == Perm::identity(3));
}

TEST_CASE("degree mismatch refuses to compose") {
  Perm a = Perm::identity(3);
  Perm b = Perm::identity(4);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("non-bijective image list rejected") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("parity examples") {
  CHECK(parity(Perm::identity(5)) == 0);
  CHECK(parity(Perm::parse("(0 1)", 4)) == 1);
  CHECK(parity(Perm::parse("(0 1 2 3 4 5 6)", 7)) == 0);  // 7-cycle is even
}

TEST_CASE("parity is a homomorphism and matches inversion count") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 12);
    Perm p = random_perm(n, rng);
    Perm q = random_perm(n, rng);
    CHECK(parity(p) == parity_by_inversions(p));
    CHECK(parity(p * q) == (parity(p) ^ parity(q)));
  }
}

TEST_CASE("cycle census examples") {
  CycleCensus c1 = cycle_census(Perm::identity(3));
  CHECK(c1.entries == std::map<long long, long long>{{1, 3}});

  CycleCensus c2 = cycle_census(Perm::parse("(0 1)(2 3 4)", 6));
  CHECK(c2.entries == std::map<long long, long long>{{1, 1}, {2, 2}, {3, 3}});

  CycleCensus c3 = cycle_census(Perm::parse("(0 1 2 3)", 4));
  CHECK(c3.entries == std::map<long long, long long>{{4, 4}});
}

TEST_CASE("cycle census totals sum to degree") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 20);
    Perm p = random_perm(n, rng);
    CHECK(cycle_census(p).total_points() == n);
    long long ord = p.order();
    for (auto& [e, pts] : cycle_census(p).entries) CHECK(ord % e == 0);
  }
}

TEST_CASE("parity_from_fixpoints on the worked examples") {
  // f = 1: no even divisors at all
  CHECK(parity_from_fixpoints({{1, 9}}, 1) == 0);
  // transposition in degree 4
  CHECK(parity_from_fixpoints({{1, 2}, {2, 4}}, 2) == 1);
  // 4-cycle in degree 4
  CHECK(parity_from_fixpoints({{1, 0}, {2, 0}, {4, 4}}, 4) == 1);
}

TEST_CASE("parity_from_fixpoints input errors") {
  CHECK_THROWS_AS(parity_from_fixpoints({{1, 2}}, 2), std::invalid_argument);
  // Corrupt census: Fix(s^2) < Fix(s) makes the e=2 term odd-sized
  CHECK_THROWS_AS(parity_from_fixpoints({{1, 3}, {2, 4}}, 2), std::runtime_error);
}

TEST_CASE("parity_from_fixpoints agrees with parity on random permutations") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 30);
    Perm p = random_perm(n, rng);
    long long f = p.order();
    std::map<long long, long long> fix;
    for (long long k = 1; k <= f; ++k)
      if (f % k == 0) fix[k] = p.pow(k).fixed_points();
    CHECK(parity_from_fixpoints(fix, f) == parity(p));
  }
}

TEST_CASE("text forms round-trip") {
  Perm p = Perm::parse("(0 1)(2 3 4)", 6);
  CHECK(p.to_cycle_string() == "(0 1)(2 3 4)");
  CHECK(Perm::parse(p.to_image_string()) == p);
  CHECK(Perm::parse("[1,0,3,4,2]") == Perm::parse("(0 1)(2 3 4)", 5));
  CHECK(Perm::identity(4).to_cycle_string() == "()");
  CHECK(Perm::parse("()", 4) == Perm::identity(4));
}

TEST_CASE("moebius values") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
}
