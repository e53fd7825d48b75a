#include "grouplat/group.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace grouplat {

std::string big_to_string(BigUint v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

unsigned long long Group::order_u64() const {
  if (order_ > static_cast<BigUint>(ULLONG_MAX))
    throw std::overflow_error("group order exceeds 64 bits");
  return static_cast<unsigned long long>(order_);
}

Group Group::generate(int degree, std::vector<Perm> gens) {
  return generate_with_base(degree, std::move(gens), {});
}

Group Group::generate_with_base(int degree, std::vector<Perm> gens,
                                const std::vector<int>& base_prefix) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  Group grp;
  grp.degree_ = degree;
  grp.gens_ = std::move(gens);
  for (int b : base_prefix) {
    if (b < 0 || b >= degree) throw std::invalid_argument("base point out of range");
    grp.base_.push_back(b);
  }
  grp.schreier_sims();
  return grp;
}

Group Group::trivial(int degree) { return generate(degree, {}); }

Group Group::symmetric(int degree) {
  if (degree <= 1) return trivial(std::max(degree, 0));
  std::vector<Perm> gens;
  gens.push_back(Perm::parse("(0 1)", degree));
  if (degree > 2) {
    std::vector<uint16_t> im(degree);
    for (int i = 0; i < degree; ++i) im[i] = static_cast<uint16_t>((i + 1) % degree);
    gens.push_back(Perm(im));
  }
  return generate(degree, gens);
}

Group Group::alternating(int degree) {
  if (degree <= 2) return trivial(std::max(degree, 0));
  std::vector<Perm> gens;
  gens.push_back(Perm::parse("(0 1 2)", degree));
  if (degree > 3) {
    std::vector<uint16_t> im(degree);
    if (degree % 2 == 1) {
      for (int i = 0; i < degree; ++i) im[i] = static_cast<uint16_t>((i + 1) % degree);
    } else {
      im[0] = 0;
      for (int i = 1; i < degree; ++i) im[i] = static_cast<uint16_t>(i % (degree - 1) + 1);
    }
    gens.push_back(Perm(im));
  }
  return generate(degree, gens);
}

Group Group::cyclic(int degree) {
  if (degree <= 1) return trivial(std::max(degree, 0));
  std::vector<uint16_t> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = static_cast<uint16_t>((i + 1) % degree);
  return generate(degree, {Perm(im)});
}

void Group::rebuild_orbit(int level) {
  Level& lv = levels_[level];
  lv.orbit.clear();
  lv.where.assign(degree_, -1);
  lv.transversal.assign(degree_, Perm());
  lv.orbit.push_back(lv.base_point);
  lv.where[lv.base_point] = 0;
  lv.transversal[lv.base_point] = Perm::identity(degree_);
  for (size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    int p = lv.orbit[oi];
    for (const Perm& g : lv.gens) {
      int q = g[p];
      if (lv.where[q] < 0) {
        lv.where[q] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal[q] = lv.transversal[p] * g;
      }
    }
  }
}

std::pair<Perm, size_t> Group::sift(Perm g, size_t from_level) const {
  for (size_t i = from_level; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int p = g[lv.base_point];
    if (lv.where[p] < 0) return {std::move(g), i};
    g = g * lv.transversal[p].inverse();
  }
  return {std::move(g), levels_.size()};
}

void Group::schreier_sims() {
  std::vector<Perm> work;
  for (const auto& g : gens_) {
    if (g.is_identity()) continue;
    if (std::find(work.begin(), work.end(), g) == work.end()) work.push_back(g);
  }

  auto first_moved = [&](const Perm& g) {
    for (int x = 0; x < degree_; ++x)
      if (g[x] != x) return x;
    return -1;
  };
  auto ensure_base_for = [&](const Perm& g) {
    for (int b : base_)
      if (g[b] != b) return;
    base_.push_back(first_moved(g));
  };
  for (const auto& g : work) ensure_base_for(g);

  if (work.empty()) {
    levels_.clear();
    order_ = 1;
    return;
  }

  levels_.assign(base_.size(), Level());
  for (size_t i = 0; i < base_.size(); ++i) levels_[i].base_point = base_[i];
  for (const auto& g : work) {
    for (size_t i = 0; i < levels_.size(); ++i) {
      levels_[i].gens.push_back(g);
      if (g[base_[i]] != base_[i]) break;
    }
  }
  for (size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(static_cast<int>(i));

  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool complete = true;
    for (size_t oi = 0; complete && oi < levels_[i].orbit.size(); ++oi) {
      int p = levels_[i].orbit[oi];
      for (size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        Perm g = levels_[i].gens[gi];
        Perm schreier =
            levels_[i].transversal[p] * g * levels_[i].transversal[g[p]].inverse();
        if (schreier.is_identity()) continue;
        auto [residue, drop] = sift(std::move(schreier), i + 1);
        if (residue.is_identity()) continue;
        complete = false;
        if (drop == levels_.size()) {
          int np = first_moved(residue);
          base_.push_back(np);
          levels_.emplace_back();
          levels_.back().base_point = np;
        }
        for (size_t k = i + 1; k <= drop; ++k) {
          levels_[k].gens.push_back(residue);
          rebuild_orbit(static_cast<int>(k));
        }
        i = static_cast<int>(drop);
        break;
      }
    }
    if (complete) --i;
  }

  order_ = 1;
  for (const Level& lv : levels_) order_ *= static_cast<BigUint>(lv.orbit.size());
}

bool Group::contains(const Perm& s) const {
  if (s.degree() != degree_)
    throw std::invalid_argument("membership test across different degrees");
  if (s.is_identity()) return true;
  auto [residue, where] = sift(s, 0);
  return where == levels_.size() && residue.is_identity();
}

bool Group::is_subgroup_of(const Group& other) const {
  if (degree_ != other.degree_) return false;
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool Group::same_group(const Group& other) const {
  return degree_ == other.degree_ && order_ == other.order_ && is_subgroup_of(other);
}

bool Group::is_even() const {
  for (const auto& g : gens_)
    if (g.parity() != 0) return false;
  return true;
}

std::vector<Perm> Group::strong_generators() const {
  std::vector<Perm> out;
  for (const Level& lv : levels_)
    for (const Perm& g : lv.gens)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

void Group::for_each_element(const std::function<bool(const Perm&)>& visit) const {
  if (levels_.empty()) {
    visit(Perm::identity(degree_));
    return;
  }
  // element = t_(deepest) * ... * t_(level 0); level 0 varies fastest
  std::function<bool(int, const Perm&)> rec = [&](int level, const Perm& partial) {
    const Level& lv = levels_[level];
    for (int p : lv.orbit) {
      Perm next = partial * lv.transversal[p];
      if (level == 0) {
        if (!visit(next)) return false;
      } else {
        if (!rec(level - 1, next)) return false;
      }
    }
    return true;
  };
  rec(static_cast<int>(levels_.size()) - 1, Perm::identity(degree_));
}

std::vector<Perm> Group::elements(unsigned long long budget) const {
  if (order_ > static_cast<BigUint>(budget))
    throw budget_error("element list of order " + big_to_string(order_) +
                       " exceeds budget " + std::to_string(budget));
  std::vector<Perm> out;
  out.reserve(static_cast<size_t>(order_));
  for_each_element([&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Group Group::point_stabilizer(int point) const {
  if (point < 0 || point >= degree_)
    throw std::invalid_argument("stabilized point out of range");
  Group with_base = generate_with_base(degree_, gens_, {point});
  std::vector<Perm> stab_gens;
  for (const Perm& g : with_base.strong_generators())
    if (g[point] == point) stab_gens.push_back(g);
  return generate(degree_, stab_gens);
}

Group Group::pointwise_stabilizer(const std::vector<int>& points) const {
  Group with_base = generate_with_base(degree_, gens_, points);
  std::vector<Perm> stab_gens;
  for (const Perm& g : with_base.strong_generators()) {
    bool fixes = true;
    for (int p : points)
      if (g[p] != p) { fixes = false; break; }
    if (fixes) stab_gens.push_back(g);
  }
  return generate(degree_, stab_gens);
}

Group Group::even_part() const {
  if (is_even()) return *this;
  Perm t;
  for (const auto& g : gens_)
    if (g.parity() == 1) { t = g; break; }
  std::vector<Perm> egens;
  Perm tinv = t.inverse();
  for (const auto& g : gens_) {
    if (g.parity() == 0) {
      egens.push_back(g);
      egens.push_back(t * g * tinv);
    } else {
      egens.push_back(g * tinv);
      egens.push_back(t * g);
    }
  }
  Group e = generate(degree_, egens);
  if (e.order() * 2 != order_)
    throw std::runtime_error("even part construction failed order check");
  return e;
}

Group Group::conjugated_by(const Perm& s) const {
  Perm sinv = s.inverse();
  std::vector<Perm> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(sinv * g * s);
  return generate(degree_, gens);
}

Group join(const Group& k, const std::vector<Perm>& extra) {
  std::vector<Perm> gens = k.generators();
  for (const auto& p : extra) gens.push_back(p);
  return Group::generate(k.degree(), gens);
}

std::pair<Group, bool> coset_action(const Group& g, const Group& h) {
  if (h.degree() != g.degree() || !h.is_subgroup_of(g))
    throw std::invalid_argument("coset action requires H <= G");
  BigUint index_big = g.order() / h.order();
  if (index_big > 20000)
    throw budget_error("coset space of size " + big_to_string(index_big) + " exceeds budget");
  size_t index = static_cast<size_t>(index_big);

  std::vector<Perm> reps;
  reps.push_back(Perm::identity(g.degree()));
  std::vector<Perm> rep_invs{reps[0]};
  auto coset_of = [&](const Perm& t) -> int {
    for (size_t k = 0; k < reps.size(); ++k)
      if (h.contains(t * rep_invs[k])) return static_cast<int>(k);
    return -1;
  };
  for (size_t i = 0; i < reps.size(); ++i) {
    for (const Perm& gen : g.generators()) {
      Perm t = reps[i] * gen;
      if (coset_of(t) < 0) {
        reps.push_back(t);
        rep_invs.push_back(t.inverse());
      }
    }
  }
  if (reps.size() != index)
    throw std::runtime_error("coset enumeration mismatch");

  std::vector<Perm> image_gens;
  for (const Perm& gen : g.generators()) {
    std::vector<uint16_t> im(index);
    for (size_t i = 0; i < index; ++i)
      im[i] = static_cast<uint16_t>(coset_of(reps[i] * gen));
    image_gens.push_back(Perm(std::move(im)));
  }
  Group image = Group::generate(static_cast<int>(index), image_gens);
  bool faithful = image.order() == g.order();
  return {image, faithful};
}

namespace {

/// Orbit classes of G on ordered pairs (diagonal included).
std::vector<std::vector<int>> orbital_classes(const Group& g, int* n_classes) {
  int n = g.degree();
  std::vector<std::vector<int>> cls(n, std::vector<int>(n, -1));
  int next = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (cls[x][y] >= 0) continue;
      std::queue<std::pair<int, int>> q;
      cls[x][y] = next;
      q.push({x, y});
      while (!q.empty()) {
        auto [a, b] = q.front();
        q.pop();
        for (const Perm& gen : g.generators()) {
          int a2 = gen[a], b2 = gen[b];
          if (cls[a2][b2] < 0) {
            cls[a2][b2] = next;
            q.push({a2, b2});
          }
        }
      }
      ++next;
    }
  }
  *n_classes = next;
  return cls;
}

bool conjugates_into(const Group& g, const Group& h, const Perm& s) {
  Perm sinv = s.inverse();
  for (const Perm& gen : g.generators())
    if (!h.contains(sinv * gen * s)) return false;
  return true;
}

/// Backtrack over images of 0..n-1 with orbital-class pruning.  Calls
/// `found` on every s with G^s = H; stops when `found` returns false.
void conjugator_backtrack(const Group& g, const Group& h,
                          const std::function<bool(const Perm&)>& found) {
  int n = g.degree();
  int kg = 0, kh = 0;
  auto cg = orbital_classes(g, &kg);
  auto ch = orbital_classes(h, &kh);
  if (kg != kh) return;
  std::vector<long long> size_g(kg, 0), size_h(kh, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++size_g[cg[x][y]];
      ++size_h[ch[x][y]];
    }

  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::vector<int> sigma(kg, -1);
  std::vector<bool> sigma_used(kh, false);
  unsigned long long nodes = 0;
  const unsigned long long node_cap = 400000000ULL;

  std::function<bool(int)> rec = [&](int x) -> bool {
    if (++nodes > node_cap)
      throw budget_error("conjugator backtrack exceeded node budget");
    if (x == n) {
      std::vector<uint16_t> im(n);
      for (int i = 0; i < n; ++i) im[i] = static_cast<uint16_t>(img[i]);
      Perm s(im);
      if (conjugates_into(g, h, s)) return found(s);
      return true;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      std::vector<std::pair<int, int>> trail;
      auto compat = [&](int c1, int c2) {
        if (sigma[c1] == -1) {
          if (sigma_used[c2] || size_g[c1] != size_h[c2]) return false;
          sigma[c1] = c2;
          sigma_used[c2] = true;
          trail.push_back({c1, c2});
          return true;
        }
        return sigma[c1] == c2;
      };
      bool ok = compat(cg[x][x], ch[y][y]);
      for (int xp = 0; ok && xp < x; ++xp)
        ok = compat(cg[xp][x], ch[img[xp]][y]) && compat(cg[x][xp], ch[y][img[xp]]);
      if (ok) {
        img[x] = y;
        used[y] = true;
        bool keep_going = rec(x + 1);
        img[x] = -1;
        used[y] = false;
        if (!keep_going) {
          for (auto [c1, c2] : trail) {
            sigma[c1] = -1;
            sigma_used[c2] = false;
          }
          return false;
        }
      }
      for (auto [c1, c2] : trail) {
        sigma[c1] = -1;
        sigma_used[c2] = false;
      }
    }
    return true;
  };
  rec(0);
}

void for_all_of_sym(int n, const std::function<bool(const Perm&)>& visit) {
  std::vector<uint16_t> im(n);
  std::iota(im.begin(), im.end(), 0);
  do {
    if (!visit(Perm(im))) return;
  } while (std::next_permutation(im.begin(), im.end()));
}

}  // namespace

Group normalizer_in_sym(const Group& g, int budget) {
  int n = g.degree();
  if (n > budget)
    throw budget_error("normalizer_in_sym refused: degree " + std::to_string(n) +
                       " exceeds budget " + std::to_string(budget));
  Group norm = g;
  auto absorb = [&](const Perm& s) {
    if (!norm.contains(s)) norm = join(norm, {s});
    return true;
  };
  if (n <= 8) {
    for_all_of_sym(n, [&](const Perm& s) {
      if (conjugates_into(g, g, s)) absorb(s);
      return true;
    });
  } else {
    conjugator_backtrack(g, g, absorb);
  }
  return norm;
}

std::optional<Perm> is_perm_isomorphic(const Group& g, const Group& h, int budget) {
  if (g.degree() != h.degree()) throw std::invalid_argument("degrees differ");
  if (g.order() != h.order()) return std::nullopt;
  int n = g.degree();
  if (n > budget)
    throw budget_error("conjugacy search refused: degree exceeds budget");
  std::optional<Perm> result;
  auto take = [&](const Perm& s) {
    result = s;
    return false;
  };
  if (n <= 8) {
    for_all_of_sym(n, [&](const Perm& s) {
      if (conjugates_into(g, h, s)) return take(s);
      return true;
    });
  } else {
    conjugator_backtrack(g, h, take);
  }
  return result;
}

namespace {

struct ElementTable {
  std::vector<Perm> elems;             // sorted
  std::vector<std::vector<uint16_t>> mult;

  int id_of(const Perm& p) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    return static_cast<int>(it - elems.begin());
  }
};

ElementTable build_table(const Group& g, unsigned long long budget) {
  ElementTable t;
  t.elems = g.elements(budget);
  std::sort(t.elems.begin(), t.elems.end());
  size_t n = t.elems.size();
  t.mult.assign(n, std::vector<uint16_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      t.mult[i][j] = static_cast<uint16_t>(t.id_of(t.elems[i] * t.elems[j]));
  return t;
}

using Bits = std::vector<uint64_t>;

bool bit_get(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }
void bit_set(Bits& b, int i) { b[i >> 6] |= (1ULL << (i & 63)); }

}  // namespace

std::vector<Group> all_subgroups(const Group& g, unsigned long long budget) {
  if (g.order() > budget)
    throw budget_error("all_subgroups refused: order " + big_to_string(g.order()) +
                       " exceeds budget " + std::to_string(budget));
  ElementTable t = build_table(g, budget);
  int n = static_cast<int>(t.elems.size());
  int words = (n + 63) / 64;
  int id_id = t.id_of(Perm::identity(g.degree()));

  auto closure = [&](std::vector<int> seed) {
    Bits in(words, 0);
    std::vector<int> list;
    auto push = [&](int e) {
      if (!bit_get(in, e)) {
        bit_set(in, e);
        list.push_back(e);
      }
    };
    push(id_id);
    for (int e : seed) push(e);
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = 0; j < list.size(); ++j) {
        push(t.mult[list[i]][list[j]]);
        if (i != j) push(t.mult[list[j]][list[i]]);
      }
    std::sort(list.begin(), list.end());
    return std::make_pair(in, list);
  };

  std::set<Bits> seen;
  std::vector<std::pair<Bits, std::vector<int>>> subs;
  auto add = [&](std::pair<Bits, std::vector<int>> s) {
    if (seen.insert(s.first).second) subs.push_back(std::move(s));
  };
  add(closure({}));
  for (size_t i = 0; i < subs.size(); ++i) {
    auto snapshot = subs[i].second;
    const Bits inset = subs[i].first;
    for (int e = 0; e < n; ++e) {
      if (bit_get(inset, e)) continue;
      std::vector<int> seed = snapshot;
      seed.push_back(e);
      add(closure(seed));
    }
  }

  std::vector<Group> out;
  out.reserve(subs.size());
  for (auto& [bits, list] : subs) {
    // thin generating set
    Group grp = Group::trivial(g.degree());
    for (int e : list) {
      if (e == id_id) continue;
      if (!grp.contains(t.elems[e])) grp = join(grp, {t.elems[e]});
      if (grp.order() == static_cast<BigUint>(list.size())) break;
    }
    out.push_back(std::move(grp));
  }
  std::sort(out.begin(), out.end(),
            [](const Group& a, const Group& b) { return a.order() < b.order(); });
  return out;
}

Group set_system_stabilizer(int degree, const std::vector<std::vector<int>>& sets) {
  if (degree > 32) throw budget_error("set_system_stabilizer limited to degree <= 32");
  size_t m = sets.size();
  std::vector<uint32_t> masks(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (int p : sets[i]) masks[i] |= (1u << p);
  std::vector<std::vector<int>> sets_at(degree);
  for (size_t i = 0; i < m; ++i)
    for (int p : sets[i]) sets_at[p].push_back(static_cast<int>(i));

  Group result = Group::trivial(degree);
  std::vector<int> img(degree, -1);
  std::vector<bool> used(degree, false);
  // candidates[i] = bitmask over family indexes still possible as target of set i
  std::vector<uint32_t> cand(m, (m >= 32) ? 0xffffffffu : ((1u << m) - 1));
  std::vector<uint32_t> img_mask(m, 0);  // partial image of each set

  std::function<void(int)> rec = [&](int x) {
    if (x == degree) {
      std::vector<uint16_t> im(degree);
      for (int i = 0; i < degree; ++i) im[i] = static_cast<uint16_t>(img[i]);
      Perm s(im);
      std::set<uint32_t> image_family;
      for (size_t i = 0; i < m; ++i) {
        uint32_t out = 0;
        for (int p : sets[i]) out |= (1u << s[p]);
        image_family.insert(out);
      }
      std::set<uint32_t> family(masks.begin(), masks.end());
      if (image_family == family && !result.contains(s)) result = join(result, {s});
      return;
    }
    for (int y = 0; y < degree; ++y) {
      if (used[y]) continue;
      std::vector<size_t> touched;
      bool ok = true;
      for (int si : sets_at[x]) {
        uint32_t ncand = 0;
        uint32_t nimg = img_mask[si] | (1u << y);
        for (size_t j = 0; j < m && ncand == 0; ++j)
          if ((cand[si] >> j) & 1)
            if ((nimg & ~masks[j]) == 0 &&
                __builtin_popcount(masks[j]) == static_cast<int>(sets[si].size()))
              ncand = 1;
        if (!ncand) { ok = false; break; }
        touched.push_back(si);
        img_mask[si] = nimg;
      }
      if (ok) {
        img[x] = y;
        used[y] = true;
        rec(x + 1);
        img[x] = -1;
        used[y] = false;
      }
      for (int si : sets_at[x]) {
        bool was_touched = false;
        for (size_t ti : touched)
          if (static_cast<int>(ti) == si) was_touched = true;
        if (was_touched) img_mask[si] &= ~(1u << y);
      }
    }
  };
  rec(0);
  return result;
}

}  // namespace grouplat
