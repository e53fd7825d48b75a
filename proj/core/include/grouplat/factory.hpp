#pragma once

#include <optional>
#include <utility>

#include "grouplat/action.hpp"
#include "grouplat/gf.hpp"
#include "grouplat/paritylaws.hpp"

namespace grouplat {

struct Expected {
  std::optional<BigUint> order;
  std::optional<int> group_parity;               // 0 = even group, 1 = odd
  std::optional<std::pair<int, int>> profile;    // (deg-transitive, deg-primitive)
  std::optional<BigUint> normalizer_order;       // in the parent Sym, when known
};

/// A named permutation group together with the metadata used for
/// cross-validation.  The constructors below all check the computed
/// order against the expected one before returning.
struct Construction {
  Group group;
  std::string name;
  std::string point_labeling;
  Expected expected;
};

Construction wreath(const Group& a, const Group& b, paritylaws::WreathMode mode);

/// The image of a single base-coordinate element (coordinate i) or of a
/// single top element under the wreath action on m and l points.
Perm wreath_base_perm(int m, int l, int coordinate, const Perm& a,
                      paritylaws::WreathMode mode);
Perm wreath_top_perm(int m, int l, const Perm& beta, paritylaws::WreathMode mode);

/// Generators of AGL(n, q) on q^n vectors without building the chain
/// (used by the parity sweeps, where only generator parities matter).
/// Vectors are indexed with coordinate 0 least significant, each
/// coordinate a field element index.
std::vector<Perm> agl_generators(int n, long long q);
Construction agl(int n, long long q);

enum class ProjectiveFlavor { PSL, PGL, PSigmaL, PGammaL };

/// Projective points: vectors with last nonzero coordinate 1, sorted by
/// their base-q index.
std::vector<Perm> projective_generators(int d, long long q, ProjectiveFlavor flavor);
Construction projective(int d, long long q, ProjectiveFlavor flavor);
/// The permutation induced on PG_d(q) by the diagonal map e0 -> u*e0.
Perm projective_diag_u(int d, long long q);
/// The permutation induced on PG_d(q) by the k-th Frobenius power.
Perm projective_field_aut(int d, long long q, int k = 1);

enum class SuzukiAction { ovoid, pairs };
Construction suzuki(long long q, SuzukiAction action = SuzukiAction::ovoid);

/// All automorphisms of G as permutations of G's sorted element list,
/// found by generator-image backtracking.  First entry of `elements`
/// is the identity.
struct AutData {
  std::vector<Perm> elements;  // sorted element list of G
  std::vector<Perm> auts;      // automorphisms as perms of element indexes
};
AutData automorphism_group(const Group& g, unsigned long long budget = 60);

Construction holomorph(const Group& g, unsigned long long budget = 60);

/// GHol(T^l, Delta) on |T|^(l-1) cosets, with the quotient onto
/// S_l x Out T exposed through lifts.
struct DiagonalGhol {
  Construction construction;
  int l = 0;
  std::vector<Perm> t_elements;       // canonical order of T's elements
  std::vector<Perm> out_reps;         // automorphism reps, one per Out class
  std::vector<Perm> translation_gens; // generators of the socle T^l image

  Group lift_trivial() const;   // the socle image, order |T|^l
  Group lift_top() const;       // lift of S_l x 1, order |T|^l * l!
  Group lift_full() const;      // the whole GHol

  /// Quotient of w: (top permutation of l, Out class index).
  std::pair<Perm, int> down(const Perm& w) const;

  // (abstract alpha on l points, its coset permutation) for all of S_l
  std::vector<std::pair<Perm, Perm>> sl_table_;
  std::vector<Perm> out_class_perms_;  // coset perms of out_reps (identity first)
  Group socle_group_;                  // cached lift of {1}
};
DiagonalGhol diagonal_ghol(const Group& t, int l, long long point_budget = 10000);

/// Socle of a small primitive group: the smallest nontrivial normal
/// closure of an element, validated minimal normal and transitive.
Group socle_of_primitive(const Group& a);

/// An element of (A/M) wr S_l: top permutation of l plus one quotient
/// coset-representative index per coordinate.
struct QuotientWreathElement {
  Perm top;
  std::vector<int> coords;
};

/// Blow-up A^P: the preimage in A wr S_l (product action on m^l) of the
/// large subgroup P of (A/Soc A) wr S_l.  Throws std::invalid_argument
/// when P is not large.
Construction blow_up(const Group& a, int l, const std::vector<QuotientWreathElement>& p_gens);

/// Coset representatives of Soc A in A, identity first (canonical order).
std::vector<Perm> socle_quotient_reps(const Group& a, const Group& socle);

Construction atlas(const std::string& name);
std::vector<std::string> atlas_names();

struct AssocRewreath {
  Construction left;    // [[S_a wr S_b] wr S_c] on (a^b)^c points
  Construction right;   // [S_a wr [S_b wr S_c]] on a^(bc) points
  Perm psi;             // the digit-regrouping bijection of (5.8-style) shape
};
AssocRewreath assoc_rewreath(int a, int b, int c);

/// CLI naming grammar: sym:n, alt:n, cyc:n, agl:n,q, proj:d,q,flavor,
/// sz:q[,pairs], wr:inner/outer/mode, hol:spec, ghol:spec,l,
/// atlas:NAME/deg, young:n,p1+p2+..., eqpart:n,m, eqpart-even:n,m,
/// or an inline JSON group record.
Construction parse_spec(const std::string& spec);

}  // namespace grouplat
