#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grouplat/perm.hpp"

namespace grouplat {

using BigUint = unsigned __int128;
std::string big_to_string(BigUint v);

/// A finitely generated permutation group with a stabilizer-chain
/// certificate.  Immutable after generate(); queries are read-only.
class Group {
public:
  Group() = default;

  static Group generate(int degree, std::vector<Perm> gens);
  /// generate() with the first base points forced, e.g. to read off a
  /// point stabilizer from the chain.
  static Group generate_with_base(int degree, std::vector<Perm> gens,
                                  const std::vector<int>& base_prefix);

  static Group trivial(int degree);
  static Group symmetric(int degree);
  static Group alternating(int degree);
  static Group cyclic(int degree);  // generated by the n-cycle (0 1 ... n-1)

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  BigUint order() const { return order_; }
  unsigned long long order_u64() const;
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Perm& s) const;
  bool is_subgroup_of(const Group& other) const;
  bool same_group(const Group& other) const;
  bool is_even() const;  // contained in Alt(degree)

  const std::vector<int>& base() const { return base_; }
  std::vector<Perm> strong_generators() const;

  /// Visit every element once (deterministic order).  Return false from
  /// the callback to stop early.
  void for_each_element(const std::function<bool(const Perm&)>& visit) const;
  std::vector<Perm> elements(unsigned long long budget = 2000000) const;

  Group point_stabilizer(int point) const;
  /// Pointwise stabilizer of a set of points.
  Group pointwise_stabilizer(const std::vector<int>& points) const;
  Group even_part() const;
  Group conjugated_by(const Perm& s) const;

private:
  struct Level {
    int base_point = -1;
    std::vector<int> orbit;          // discovery order, orbit[0] = base_point
    std::vector<int> where;          // point -> orbit position, -1 outside
    std::vector<Perm> transversal;   // point -> u with base_point^u = point
    std::vector<Perm> gens;          // generators fixing earlier base points
  };

  void rebuild_orbit(int level);
  /// Returns the level where sifting stopped (== levels size on success)
  /// and the residue.
  std::pair<Perm, size_t> sift(Perm g, size_t from_level) const;
  void schreier_sims();

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  BigUint order_ = 1;
};

/// Subgroup generated by K together with extra permutations.
Group join(const Group& k, const std::vector<Perm>& extra);

/// Image of G acting on the right cosets of H (coset of identity = 0),
/// plus a flag that is true iff the action is faithful.
std::pair<Group, bool> coset_action(const Group& g, const Group& h);

/// N_{Sym(degree)}(G).  Full element iteration below degree 9, an
/// orbital-partition backtrack up to `budget`, refusal above it.
Group normalizer_in_sym(const Group& g, int budget = 12);

/// A permutation c with G^c = H, if one exists within the search budget.
std::optional<Perm> is_perm_isomorphic(const Group& g, const Group& h, int budget = 12);

/// Every subgroup of G, deduplicated by element set.  Requires
/// order(G) <= budget.
std::vector<Group> all_subgroups(const Group& g, unsigned long long budget = 400);

/// Stabilizer in Sym(n) of a family of point sets (the family as a set).
/// Backtrack search; intended for small n.
Group set_system_stabilizer(int degree, const std::vector<std::vector<int>>& sets);

}  // namespace grouplat
