#include "grouplat/action.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace grouplat {

Equipartition Equipartition::from_cells(int degree, std::vector<std::vector<int>> cells) {
  std::vector<bool> seen(degree, false);
  size_t size = cells.empty() ? 0 : cells[0].size();
  for (auto& c : cells) {
    if (c.size() != size) throw std::invalid_argument("cells of unequal size");
    std::sort(c.begin(), c.end());
    for (int p : c) {
      if (p < 0 || p >= degree || seen[p])
        throw std::invalid_argument("cells do not partition the point set");
      seen[p] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("cells do not cover the point set");
  std::sort(cells.begin(), cells.end());
  Equipartition z;
  z.degree = degree;
  z.cells = std::move(cells);
  return z;
}

Equipartition Equipartition::consecutive(int degree, int cell_size) {
  if (cell_size <= 0 || degree % cell_size != 0)
    throw std::invalid_argument("cell size must divide the degree");
  std::vector<std::vector<int>> cells;
  for (int start = 0; start < degree; start += cell_size) {
    std::vector<int> c(cell_size);
    std::iota(c.begin(), c.end(), start);
    cells.push_back(std::move(c));
  }
  return from_cells(degree, std::move(cells));
}

int Equipartition::cell_of(int point) const {
  for (size_t i = 0; i < cells.size(); ++i)
    if (std::binary_search(cells[i].begin(), cells[i].end(), point))
      return static_cast<int>(i);
  throw std::invalid_argument("point not in partition");
}

std::vector<std::vector<int>> orbits(const Group& g) {
  int n = g.degree();
  std::vector<int> which(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (which[start] >= 0) continue;
    std::vector<int> orb{start};
    which[start] = static_cast<int>(out.size());
    for (size_t i = 0; i < orb.size(); ++i)
      for (const Perm& gen : g.generators()) {
        int q = gen[orb[i]];
        if (which[q] < 0) {
          which[q] = which[start];
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const Group& g) { return orbits(g).size() == 1; }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

/// Atkinson: the finest G-invariant partition glueing alpha with beta.
UnionFind block_partition(const Group& g, int alpha, int beta) {
  UnionFind uf(g.degree());
  std::vector<int> queue;
  auto merge = [&](int a, int b) {
    int ra = uf.find(a), rb = uf.find(b);
    if (ra == rb) return;
    if (ra > rb) std::swap(ra, rb);
    uf.parent[rb] = ra;
    queue.push_back(rb);
  };
  merge(alpha, beta);
  for (size_t i = 0; i < queue.size(); ++i) {
    int gamma = queue[i];
    for (const Perm& gen : g.generators()) merge(gen[gamma], gen[uf.find(gamma)]);
  }
  return uf;
}

Equipartition partition_of(const Group& g, UnionFind& uf) {
  std::map<int, std::vector<int>> cells;
  for (int x = 0; x < g.degree(); ++x) cells[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> cc;
  for (auto& [r, c] : cells) cc.push_back(c);
  return Equipartition::from_cells(g.degree(), std::move(cc));
}

}  // namespace

std::vector<int> minimal_block(const Group& g, int alpha, int beta) {
  if (!is_transitive(g)) throw std::invalid_argument("minimal_block requires a transitive group");
  if (alpha == beta) throw std::invalid_argument("block seed points must differ");
  UnionFind uf = block_partition(g, alpha, beta);
  std::vector<int> block;
  int root = uf.find(alpha);
  for (int x = 0; x < g.degree(); ++x)
    if (uf.find(x) == root) block.push_back(x);
  return block;
}

std::vector<Equipartition> imprimitivity_systems(const Group& g) {
  if (!is_transitive(g))
    throw std::invalid_argument("imprimitivity systems require a transitive group");
  int n = g.degree();
  std::set<Equipartition> found;
  for (int beta = 1; beta < n; ++beta) {
    UnionFind uf = block_partition(g, 0, beta);
    Equipartition z = partition_of(g, uf);
    if (z.nontrivial()) found.insert(z);
  }
  // close under joins; complete because every preserved equipartition is
  // the join of the minimal-block systems its alpha-cell contains
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Equipartition> current(found.begin(), found.end());
    for (size_t i = 0; i < current.size() && !grew; ++i)
      for (size_t j = i + 1; j < current.size() && !grew; ++j) {
        UnionFind uf(n);
        auto weld = [&](const Equipartition& z) {
          for (const auto& cell : z.cells)
            for (size_t k = 1; k < cell.size(); ++k) {
              int ra = uf.find(cell[0]), rb = uf.find(cell[k]);
              if (ra != rb) uf.parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        };
        weld(current[i]);
        weld(current[j]);
        Equipartition z = partition_of(g, uf);
        if (z.nontrivial() && !found.count(z)) {
          found.insert(z);
          grew = true;
        }
      }
  }
  return {found.begin(), found.end()};
}

bool is_primitive(const Group& g) {
  if (!is_transitive(g)) return false;
  int n = g.degree();
  for (int beta = 1; beta < n; ++beta)
    if (static_cast<int>(minimal_block(g, 0, beta).size()) < n) return false;
  return true;
}

std::pair<int, int> transitivity_profile(const Group& g) {
  auto step = [](const Group& cur) {
    Group stab = cur.point_stabilizer(0);
    std::vector<int> rest(cur.degree() - 1);
    std::iota(rest.begin(), rest.end(), 1);
    return restrict_to(stab, rest);
  };
  int t = 0;
  {
    Group cur = g;
    while (cur.degree() >= 1 && is_transitive(cur)) {
      ++t;
      if (cur.degree() == 1) break;
      cur = step(cur);
    }
  }
  int p = 0;
  {
    Group cur = g;
    while (cur.degree() >= 1 && is_transitive(cur) &&
           (cur.degree() <= 2 || is_primitive(cur))) {
      ++p;
      if (cur.degree() == 1) break;
      cur = step(cur);
    }
  }
  return {t, p};
}

Group equipartition_stabilizer(int degree, const Equipartition& z) {
  if (z.degree != degree) throw std::invalid_argument("partition degree mismatch");
  int m = z.cell_size();
  int l = z.cell_count();
  if (m * l != degree) throw std::invalid_argument("malformed partition");
  std::vector<Perm> gens;
  for (const auto& cell : z.cells)
    for (size_t i = 0; i + 1 < cell.size(); ++i) {
      std::vector<uint16_t> im(degree);
      std::iota(im.begin(), im.end(), 0);
      std::swap(im[cell[i]], im[cell[i + 1]]);
      gens.push_back(Perm(im));
    }
  for (int c = 0; c + 1 < l; ++c) {
    std::vector<uint16_t> im(degree);
    std::iota(im.begin(), im.end(), 0);
    for (int i = 0; i < m; ++i) {
      im[z.cells[c][i]] = static_cast<uint16_t>(z.cells[c + 1][i]);
      im[z.cells[c + 1][i]] = static_cast<uint16_t>(z.cells[c][i]);
    }
    gens.push_back(Perm(im));
  }
  Group s = Group::generate(degree, gens);
  BigUint expect = 1;
  for (int c = 0; c < l; ++c)
    for (int i = 2; i <= m; ++i) expect *= static_cast<BigUint>(i);
  for (int i = 2; i <= l; ++i) expect *= static_cast<BigUint>(i);
  if (s.order() != expect) throw std::runtime_error("equipartition stabilizer order check failed");
  return s;
}

Group young_stabilizer(int degree, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p <= 0) throw std::invalid_argument("parts must be positive");
    sum += p;
  }
  if (sum != degree) throw std::invalid_argument("parts must sum to the degree");
  std::vector<Perm> gens;
  int start = 0;
  for (int p : parts) {
    for (int i = 0; i + 1 < p; ++i) {
      std::vector<uint16_t> im(degree);
      std::iota(im.begin(), im.end(), 0);
      std::swap(im[start + i], im[start + i + 1]);
      gens.push_back(Perm(im));
    }
    start += p;
  }
  return Group::generate(degree, gens);
}

Group restrict_to(const Group& g, const std::vector<int>& points) {
  std::vector<int> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> newidx(g.degree(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) newidx[sorted[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (const Perm& gen : g.generators()) {
    std::vector<uint16_t> im(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) {
      int q = gen[sorted[i]];
      if (newidx[q] < 0) throw std::invalid_argument("point set is not invariant");
      im[i] = static_cast<uint16_t>(newidx[q]);
    }
    gens.push_back(Perm(im));
  }
  return Group::generate(static_cast<int>(sorted.size()), gens);
}

Group embed_degree(const Group& g, int new_degree) {
  if (new_degree < g.degree()) throw std::invalid_argument("cannot shrink the degree");
  std::vector<Perm> gens;
  for (const Perm& gen : g.generators()) {
    std::vector<uint16_t> im(new_degree);
    std::iota(im.begin(), im.end(), 0);
    for (int x = 0; x < g.degree(); ++x) im[x] = static_cast<uint16_t>(gen[x]);
    gens.push_back(Perm(im));
  }
  return Group::generate(new_degree, gens);
}

Group subsets_action(const Group& g, int k) {
  int n = g.degree();
  if (k <= 0 || k > n) throw std::invalid_argument("subset size out of range");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(int)> gen_subs = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      subsets.push_back(cur);
      return;
    }
    for (int x = from; x < n; ++x) {
      cur.push_back(x);
      gen_subs(x + 1);
      cur.pop_back();
    }
  };
  gen_subs(0);
  if (subsets.size() > 100000) throw budget_error("subset action too large");
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);
  std::vector<Perm> gens;
  for (const Perm& gen : g.generators()) {
    std::vector<uint16_t> im(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i) {
      std::vector<int> img;
      for (int x : subsets[i]) img.push_back(gen[x]);
      std::sort(img.begin(), img.end());
      im[i] = static_cast<uint16_t>(index.at(img));
    }
    gens.push_back(Perm(im));
  }
  return Group::generate(static_cast<int>(subsets.size()), gens);
}

}  // namespace grouplat
