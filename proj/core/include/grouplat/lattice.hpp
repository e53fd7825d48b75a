#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grouplat/group.hpp"

namespace grouplat {

struct Shape {
  enum class Tag { chain, mr, general };
  Tag tag = Tag::general;
  int parameter = 0;  // covering steps for chain, r for Mr

  bool operator==(const Shape& o) const = default;
  std::string to_string() const;

  static Shape chain(int k) { return {Tag::chain, k}; }
  static Shape mr(int r) { return {Tag::mr, r}; }
  static Shape general() { return {Tag::general, 0}; }
};

/// The poset of all subgroups between bottom and top, with covering
/// edges.  Nodes are in canonical order; nodes[0] is the bottom and
/// nodes.back() is the top.
struct Interval {
  std::vector<Group> nodes;
  std::vector<std::pair<int, int>> hasse;  // (lower, upper) covering pairs

  const Group& bottom() const { return nodes.front(); }
  const Group& top() const { return nodes.back(); }
  std::vector<std::vector<bool>> leq_matrix() const;
};

struct OvergroupOptions {
  unsigned long long element_budget = 42000000ULL;  // cap on |G|
  std::vector<Perm> candidate_gens;  // optional caller-supplied hints
};

/// Covers of K in the interval [K, G].
std::vector<Group> minimal_overgroups(const Group& k, const Group& g,
                                      const OvergroupOptions& opt = {});

/// Every subgroup between H and G, exhaustively.
std::vector<Group> overgroups(const Group& h, const Group& g,
                              const OvergroupOptions& opt = {});

Interval interval(const Group& h, const Group& g, const OvergroupOptions& opt = {});

/// Interval computed through the all_subgroups oracle; top order must be
/// within the oracle budget.
Interval interval_by_oracle(const Group& h, const Group& g,
                            unsigned long long order_budget = 400);

Shape classify(const Interval& iv);

struct SecondMaximalReport {
  bool second_maximal = false;
  std::string reason;
  std::vector<Group> witnesses;  // the maximal overgroups when true
};
SecondMaximalReport is_second_maximal(const Group& h, const Group& u,
                                      const OvergroupOptions& opt = {});

/// Number of ambient-conjugates of K containing L or contained in L.
long long hm(const Group& k, const Group& l, const Group& ambient,
             long long conjugate_budget = 2000000);

/// Number of ambient-conjugates of K (the index of the normalizer).
long long conjugate_count(const Group& k, const Group& ambient,
                          long long conjugate_budget = 2000000);

/// Verifies |G:N(L)| hm(K,L) = |G:N(K)| hm(L,K).
bool palffy_check(const Group& k, const Group& l, const Group& ambient);

/// hm(G,H) = |N(H):H| hm(H,G) / (|N(G):G| |G:H|) for H <= G; throws on a
/// non-integral result (inconsistent ingredients).
long long palffy_count_overgroups(BigUint g_order, BigUint h_order, long long n_h_index,
                                  long long n_g_index, long long hm_h_g);

/// Exponent of the largest power of p dividing n!, by the digit-sum rule.
long long p_part_factorial(long long p, long long n);

bool poset_isomorphic(const std::vector<std::vector<bool>>& leq1,
                      const std::vector<std::vector<bool>>& leq2);
bool lattice_isomorphic(const Interval& a, const Interval& b);

std::vector<std::vector<bool>> chain_poset(int covering_steps);
std::vector<std::vector<bool>> mr_poset(int r);
std::vector<std::vector<bool>> vertical_sum(const std::vector<std::vector<bool>>& a,
                                            const std::vector<std::vector<bool>>& b);

std::string interval_to_dot(const Interval& iv);
std::string interval_to_json(const Interval& iv);

}  // namespace grouplat
