#pragma once

#include <utility>
#include <vector>

#include "grouplat/group.hpp"

namespace grouplat {

/// A partition of {0..n-1} into cells of equal size, cells sorted by
/// least element.  Nontrivial iff 1 < cell size < n.
struct Equipartition {
  int degree = 0;
  std::vector<std::vector<int>> cells;

  static Equipartition from_cells(int degree, std::vector<std::vector<int>> cells);
  /// n/m consecutive cells of size m: {0..m-1}, {m..2m-1}, ...
  static Equipartition consecutive(int degree, int cell_size);

  int cell_size() const { return cells.empty() ? 0 : static_cast<int>(cells[0].size()); }
  int cell_count() const { return static_cast<int>(cells.size()); }
  bool nontrivial() const { return cell_size() > 1 && cell_count() > 1; }
  int cell_of(int point) const;

  bool operator==(const Equipartition& o) const = default;
  bool operator<(const Equipartition& o) const { return cells < o.cells; }
};

std::vector<std::vector<int>> orbits(const Group& g);
bool is_transitive(const Group& g);

/// Smallest block for transitive G containing {alpha, beta}; the whole
/// point set when no proper block contains the pair.
std::vector<int> minimal_block(const Group& g, int alpha, int beta);

/// All nontrivial G-invariant equipartitions.  Empty iff primitive.
std::vector<Equipartition> imprimitivity_systems(const Group& g);

bool is_primitive(const Group& g);

/// (degree of transitivity, degree of primitivity); 0 entries for
/// intransitive / imprimitive groups.
std::pair<int, int> transitivity_profile(const Group& g);

/// Full stabilizer of an equipartition in Sym(n); order (m!)^l * l!.
Group equipartition_stabilizer(int degree, const Equipartition& z);

/// Direct product of symmetric groups on consecutive ranges.
Group young_stabilizer(int degree, const std::vector<int>& parts);

/// G's action restricted to an invariant point subset, relabelled to
/// {0..k-1} in increasing point order.  Every generator must fix the
/// subset setwise.
Group restrict_to(const Group& g, const std::vector<int>& points);

/// The same group acting on a larger point set, new points fixed.
Group embed_degree(const Group& g, int new_degree);

/// Induced action on the family of all k-subsets, subsets ordered
/// lexicographically.
Group subsets_action(const Group& g, int k);

}  // namespace grouplat
