#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grouplat/group.hpp"
#include "grouplat/lattice.hpp"

namespace grouplat {

/// A subgroup of L x R encoded as a section isomorphism
/// alpha : C/A_ker -> D/B_ker, with alpha stored on A_ker-coset
/// representatives of C.
struct GoursatDatum {
  Group left;    // L, on its own points
  Group right;   // R
  Group c;       // C <= L
  Group a_ker;   // normal in C
  Group d;       // D <= R
  Group b_ker;   // normal in D
  // alpha maps the coset A_ker*rep to the coset of alpha_images[i]
  std::vector<Perm> c_reps;        // coset representatives of A_ker in C
  std::vector<Perm> alpha_images;  // representatives in D, aligned with c_reps

  /// Validates the invariants: kernels normal, alpha a bijection of
  /// cosets respecting products (full coset-table check when the section
  /// index is at most 120, generator pairs beyond).
  void validate() const;
};

/// The subgroup {(c,d) : alpha([c]) = [d]} of L x R, realized on the
/// disjoint union of the two point sets (left points first).
Group goursat_build(const GoursatDatum& datum);

/// Inverts goursat_build: H must respect the point split at
/// left_degree.
GoursatDatum goursat_decompose(const Group& h, const Group& left, const Group& right);

/// Diagonal datum for an isomorphism phi of L onto R given by a point
/// bijection (R = L^phi); the plain diagonal when phi is the identity.
GoursatDatum diagonal_datum(const Group& left, const Group& right, const Perm& phi);

/// Cartesian datum C x D.
GoursatDatum cartesian_datum(const Group& left, const Group& right, const Group& c,
                             const Group& d);

/// The direct product L x R on the disjoint union of points.
Group direct_product(const Group& left, const Group& right);

/// Embeds a subgroup of L into the product (acting on the left points).
Perm embed_left(const Perm& p, int left_degree, int right_degree);
Perm embed_right(const Perm& p, int left_degree, int right_degree);

/// All maximal subgroups of L x R: T x R for T maximal in L, L x T for
/// T maximal in R, and the Goursat subgroups over simple quotients.
std::vector<Group> product_maximals(const Group& left, const Group& right,
                                    unsigned long long oracle_budget = 1500);

/// Maximality of inner in outer by the four-clause criterion; returns
/// the clause tag 'a'..'d', or nullopt when not maximal.
std::optional<char> goursat_is_maximal(const Group& inner, const Group& outer,
                                       const Group& left, const Group& right);

enum class IntervalType { t2L, t2R, t3A, t3B, t4L, t4R, composed, trivial };
std::string to_string(IntervalType t);

struct SkeletonOrders {
  int l = 0;  // distinct left congruence markers
  int r = 0;  // distinct right congruence markers
};

/// Left and right skeleton orders of the inclusion inner <= outer.
SkeletonOrders skeleton_orders(const Group& inner, const Group& outer, const Group& left,
                               const Group& right);

/// Elementary interval type of [inner, outer] from the skeleton table;
/// `composed` when no elementary row matches, `trivial` when equal.
IntervalType interval_type(const Group& inner, const Group& outer, const Group& left,
                           const Group& right);

struct ShortcutReport {
  bool has_shortcut = false;
  std::vector<std::string> shortcut_tags;  // "3B-3A" style, deduplicated
  bool is_novelty = false;
  Shape shape;
  int node_count = 0;
};

/// Shortcut and novelty analysis of [inner, outer] inside L x R, by
/// brute force over the oracle interval.
ShortcutReport shortcut_novelty(const Group& inner, const Group& outer, const Group& left,
                                const Group& right, unsigned long long oracle_budget = 1500);

}  // namespace grouplat
