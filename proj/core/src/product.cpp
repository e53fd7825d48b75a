#include "grouplat/product.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace grouplat {

namespace {

Perm left_part(const Perm& p, int dl) {
  std::vector<uint16_t> im(dl);
  for (int i = 0; i < dl; ++i) im[i] = static_cast<uint16_t>(p[i]);
  return Perm(im);
}

Perm right_part(const Perm& p, int dl, int dr) {
  std::vector<uint16_t> im(dr);
  for (int i = 0; i < dr; ++i) im[i] = static_cast<uint16_t>(p[dl + i] - dl);
  return Perm(im);
}

Perm pair_perm(const Perm& a, const Perm& b) {
  std::vector<uint16_t> im(a.degree() + b.degree());
  for (int i = 0; i < a.degree(); ++i) im[i] = static_cast<uint16_t>(a[i]);
  for (int i = 0; i < b.degree(); ++i)
    im[a.degree() + i] = static_cast<uint16_t>(a.degree() + b[i]);
  return Perm(im);
}

bool respects_split(const Perm& p, int dl) {
  for (int i = 0; i < dl; ++i)
    if (p[i] >= dl) return false;
  return true;
}

bool is_normal_in(const Group& n, const Group& g) {
  for (const Perm& x : g.generators()) {
    Perm xi = x.inverse();
    for (const Perm& ng : n.generators())
      if (!n.contains(xi * ng * x)) return false;
  }
  return true;
}

}  // namespace

Perm embed_left(const Perm& p, int left_degree, int right_degree) {
  (void)left_degree;
  return pair_perm(p, Perm::identity(right_degree));
}

Perm embed_right(const Perm& p, int left_degree, int right_degree) {
  (void)right_degree;
  return pair_perm(Perm::identity(left_degree), p);
}

Group direct_product(const Group& left, const Group& right) {
  std::vector<Perm> gens;
  for (const Perm& g : left.generators())
    gens.push_back(embed_left(g, left.degree(), right.degree()));
  for (const Perm& g : right.generators())
    gens.push_back(embed_right(g, left.degree(), right.degree()));
  return Group::generate(left.degree() + right.degree(), gens);
}

void GoursatDatum::validate() const {
  if (!c.is_subgroup_of(left) || !d.is_subgroup_of(right))
    throw std::invalid_argument("Goursat datum: sections must sit in the factors");
  if (!a_ker.is_subgroup_of(c) || !is_normal_in(a_ker, c))
    throw std::invalid_argument("Goursat datum: left kernel must be normal in C");
  if (!b_ker.is_subgroup_of(d) || !is_normal_in(b_ker, d))
    throw std::invalid_argument("Goursat datum: right kernel must be normal in D");
  if (c_reps.size() != alpha_images.size())
    throw std::invalid_argument("Goursat datum: alpha table shape mismatch");
  BigUint index = c.order() / a_ker.order();
  if (d.order() / b_ker.order() != index || static_cast<BigUint>(c_reps.size()) != index)
    throw std::invalid_argument("Goursat datum: section indexes differ");

  auto c_coset = [&](const Perm& x) {
    for (size_t i = 0; i < c_reps.size(); ++i)
      if (a_ker.contains(x * c_reps[i].inverse())) return static_cast<int>(i);
    throw std::invalid_argument("Goursat datum: coset representatives do not cover C");
  };
  auto d_coset_of_image = [&](const Perm& y) {
    for (size_t i = 0; i < alpha_images.size(); ++i)
      if (b_ker.contains(y * alpha_images[i].inverse())) return static_cast<int>(i);
    throw std::invalid_argument("Goursat datum: alpha image outside D/B");
  };
  // bijectivity of the images
  std::set<int> hit;
  for (const Perm& y : alpha_images) {
    if (!d.contains(y)) throw std::invalid_argument("Goursat datum: alpha image not in D");
    hit.insert(d_coset_of_image(y));
  }
  if (hit.size() != alpha_images.size())
    throw std::invalid_argument("Goursat datum: alpha images collide modulo B");
  // multiplicativity; a full coset-table check at this scale
  if (index <= 120) {
    for (size_t i = 0; i < c_reps.size(); ++i)
      for (size_t j = 0; j < c_reps.size(); ++j) {
        int ij = c_coset(c_reps[i] * c_reps[j]);
        int img = d_coset_of_image(alpha_images[i] * alpha_images[j]);
        if (ij >= 0 && img != static_cast<int>(ij) &&
            !b_ker.contains(alpha_images[i] * alpha_images[j] * alpha_images[ij].inverse()))
          throw std::invalid_argument("Goursat datum: alpha is not multiplicative");
      }
  }
}

Group goursat_build(const GoursatDatum& datum) {
  datum.validate();
  int dl = datum.left.degree(), dr = datum.right.degree();
  std::vector<Perm> gens;
  for (const Perm& g : datum.a_ker.generators()) gens.push_back(embed_left(g, dl, dr));
  for (const Perm& g : datum.b_ker.generators()) gens.push_back(embed_right(g, dl, dr));
  for (size_t i = 0; i < datum.c_reps.size(); ++i)
    gens.push_back(pair_perm(datum.c_reps[i], datum.alpha_images[i]));
  Group h = Group::generate(dl + dr, gens);
  if (h.order() != datum.c.order() * datum.b_ker.order())
    throw std::runtime_error("Goursat build failed the |C|*|B| order check");
  return h;
}

GoursatDatum goursat_decompose(const Group& h, const Group& left, const Group& right) {
  int dl = left.degree(), dr = right.degree();
  if (h.degree() != dl + dr)
    throw std::invalid_argument("subgroup degree does not match the product");
  for (const Perm& g : h.generators())
    if (!respects_split(g, dl))
      throw std::invalid_argument("subgroup does not respect the point split");

  GoursatDatum out;
  out.left = left;
  out.right = right;
  std::vector<Perm> cg, dg;
  for (const Perm& g : h.generators()) {
    cg.push_back(left_part(g, dl));
    dg.push_back(right_part(g, dl, dr));
  }
  out.c = Group::generate(dl, cg);
  out.d = Group::generate(dr, dg);
  std::vector<int> right_points(dr), left_points(dl);
  std::iota(right_points.begin(), right_points.end(), dl);
  std::iota(left_points.begin(), left_points.end(), 0);
  {
    Group fix_right = h.pointwise_stabilizer(right_points);
    std::vector<Perm> ag;
    for (const Perm& g : fix_right.generators()) ag.push_back(left_part(g, dl));
    out.a_ker = Group::generate(dl, ag);
  }
  {
    Group fix_left = h.pointwise_stabilizer(left_points);
    std::vector<Perm> bg;
    for (const Perm& g : fix_left.generators()) bg.push_back(right_part(g, dl, dr));
    out.b_ker = Group::generate(dr, bg);
  }
  // coset representatives and alpha from one sweep over H
  auto h_elems = h.elements(200000);
  std::sort(h_elems.begin(), h_elems.end());
  for (const Perm& e : h_elems) {
    Perm cpart = left_part(e, dl);
    bool fresh = true;
    for (const Perm& r : out.c_reps)
      if (out.a_ker.contains(cpart * r.inverse())) {
        fresh = false;
        break;
      }
    if (fresh) {
      out.c_reps.push_back(cpart);
      out.alpha_images.push_back(right_part(e, dl, dr));
    }
  }
  return out;
}

GoursatDatum diagonal_datum(const Group& left, const Group& right, const Perm& phi) {
  GoursatDatum out;
  out.left = left;
  out.right = right;
  out.c = left;
  out.d = right;
  out.a_ker = Group::trivial(left.degree());
  out.b_ker = Group::trivial(right.degree());
  Perm phi_inv = phi.inverse();
  for (const Perm& e : left.elements(100000)) {
    Perm img = phi_inv * e * phi;
    if (!right.contains(img))
      throw std::invalid_argument("phi does not carry L onto R");
    out.c_reps.push_back(e);
    out.alpha_images.push_back(img);
  }
  return out;
}

GoursatDatum cartesian_datum(const Group& left, const Group& right, const Group& c,
                             const Group& d) {
  GoursatDatum out;
  out.left = left;
  out.right = right;
  out.c = c;
  out.d = d;
  out.a_ker = c;
  out.b_ker = d;
  out.c_reps = {Perm::identity(left.degree())};
  out.alpha_images = {Perm::identity(right.degree())};
  return out;
}

namespace {

std::vector<Group> maximal_subgroups_of(const Group& g, unsigned long long budget) {
  auto subs = all_subgroups(g, budget);
  std::vector<Group> out;
  for (const Group& t : subs) {
    if (t.order() == g.order()) continue;
    bool maximal = true;
    for (const Group& s : subs) {
      if (s.order() <= t.order() || s.order() == g.order()) continue;
      if (t.is_subgroup_of(s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(t);
  }
  return out;
}

std::vector<Group> normal_subgroups_of(const Group& g, unsigned long long budget) {
  std::vector<Group> out;
  for (const Group& t : all_subgroups(g, budget))
    if (is_normal_in(t, g)) out.push_back(t);
  return out;
}

/// All isomorphisms between two small quotient groups, each given by
/// kernel and full group; returned as aligned rep tables.
struct QuotientIso {
  std::vector<Perm> reps_1;
  std::vector<Perm> images_2;
};

std::vector<QuotientIso> quotient_isomorphisms(const Group& g1, const Group& n1,
                                               const Group& g2, const Group& n2) {
  std::vector<QuotientIso> out;
  if (g1.order() / n1.order() != g2.order() / n2.order()) return out;
  auto reps_of = [](const Group& g, const Group& n) {
    std::vector<Perm> reps;
    auto elems = g.elements(100000);
    std::sort(elems.begin(), elems.end());
    for (const Perm& e : elems) {
      bool fresh = true;
      for (const Perm& r : reps)
        if (n.contains(e * r.inverse())) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(e);
    }
    return reps;
  };
  std::vector<Perm> reps1 = reps_of(g1, n1);
  std::vector<Perm> reps2 = reps_of(g2, n2);
  size_t q = reps1.size();
  auto coset1 = [&](const Perm& x) {
    for (size_t i = 0; i < q; ++i)
      if (n1.contains(x * reps1[i].inverse())) return static_cast<int>(i);
    return -1;
  };
  auto coset2 = [&](const Perm& x) {
    for (size_t i = 0; i < q; ++i)
      if (n2.contains(x * reps2[i].inverse())) return static_cast<int>(i);
    return -1;
  };
  // multiplication tables of the two quotients
  std::vector<std::vector<int>> t1(q, std::vector<int>(q)), t2(q, std::vector<int>(q));
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j) {
      t1[i][j] = coset1(reps1[i] * reps1[j]);
      t2[i][j] = coset2(reps2[i] * reps2[j]);
    }
  auto order_of = [&](const std::vector<std::vector<int>>& t, int id_idx, int x) {
    int ord = 1, cur = x;
    while (cur != id_idx) {
      cur = t[cur][x];
      ++ord;
    }
    return ord;
  };
  int id1 = coset1(Perm::identity(g1.degree())), id2 = coset2(Perm::identity(g2.degree()));
  // thin generators of quotient 1
  std::vector<int> gens1;
  {
    std::set<int> span{id1};
    for (size_t x = 0; x < q && span.size() < q; ++x) {
      if (span.count(static_cast<int>(x))) continue;
      gens1.push_back(static_cast<int>(x));
      std::vector<int> work(span.begin(), span.end());
      span.insert(static_cast<int>(x));
      work.push_back(static_cast<int>(x));
      for (size_t w = 0; w < work.size(); ++w)
        for (int gg : gens1) {
          int y = t1[work[w]][gg];
          if (span.insert(y).second) work.push_back(y);
          int z = t1[gg][work[w]];
          if (span.insert(z).second) work.push_back(z);
        }
    }
  }
  // backtrack over generator images; propagate over the Cayley graph
  std::vector<int> imgs(gens1.size());
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == gens1.size()) {
      std::vector<int> phi(q, -1);
      phi[id1] = id2;
      std::vector<int> work{id1};
      for (size_t w = 0; w < work.size(); ++w)
        for (size_t gi = 0; gi < gens1.size(); ++gi) {
          int y = t1[work[w]][gens1[gi]];
          int fy = t2[phi[work[w]]][imgs[gi]];
          if (phi[y] == -1) {
            phi[y] = fy;
            work.push_back(y);
          } else if (phi[y] != fy) {
            return;
          }
        }
      if (work.size() != q) return;
      std::vector<bool> hit(q, false);
      for (int v : phi) {
        if (v < 0 || hit[v]) return;
        hit[v] = true;
      }
      QuotientIso iso;
      for (size_t i = 0; i < q; ++i) {
        iso.reps_1.push_back(reps1[i]);
        iso.images_2.push_back(reps2[phi[i]]);
      }
      out.push_back(std::move(iso));
      return;
    }
    for (size_t y = 0; y < q; ++y) {
      if (order_of(t1, id1, gens1[k]) != order_of(t2, id2, static_cast<int>(y))) continue;
      imgs[k] = static_cast<int>(y);
      rec(k + 1);
    }
  };
  if (q == 1) {
    QuotientIso iso;
    iso.reps_1 = reps1;
    iso.images_2 = reps2;
    out.push_back(std::move(iso));
  } else {
    rec(0);
  }
  return out;
}

}  // namespace

std::vector<Group> product_maximals(const Group& left, const Group& right,
                                    unsigned long long oracle_budget) {
  std::vector<Group> out;
  int dl = left.degree(), dr = right.degree();
  for (const Group& t : maximal_subgroups_of(left, oracle_budget))
    out.push_back(goursat_build(cartesian_datum(left, right, t, right)));
  for (const Group& t : maximal_subgroups_of(right, oracle_budget))
    out.push_back(goursat_build(cartesian_datum(left, right, left, t)));
  // Goursat subgroups over isomorphic simple quotients
  auto normals_l = normal_subgroups_of(left, oracle_budget);
  auto normals_r = normal_subgroups_of(right, oracle_budget);
  auto maximal_normal = [](const std::vector<Group>& normals, const Group& g,
                           const Group& n) {
    if (n.order() == g.order()) return false;
    for (const Group& m : normals)
      if (m.order() > n.order() && m.order() < g.order() && n.is_subgroup_of(m)) return false;
    return true;
  };
  for (const Group& a : normals_l) {
    if (!maximal_normal(normals_l, left, a)) continue;
    for (const Group& b : normals_r) {
      if (!maximal_normal(normals_r, right, b)) continue;
      for (const QuotientIso& iso : quotient_isomorphisms(left, a, right, b)) {
        GoursatDatum datum;
        datum.left = left;
        datum.right = right;
        datum.c = left;
        datum.a_ker = a;
        datum.d = right;
        datum.b_ker = b;
        datum.c_reps = iso.reps_1;
        datum.alpha_images = iso.images_2;
        Group h = goursat_build(datum);
        bool fresh = true;
        for (const Group& have : out)
          if (have.same_group(h)) fresh = false;
        if (fresh) out.push_back(std::move(h));
      }
    }
  }
  (void)dl;
  (void)dr;
  std::sort(out.begin(), out.end(),
            [](const Group& x, const Group& y) { return x.order() < y.order(); });
  return out;
}

namespace {

Group left_projection_group(const Group& h, int dl) {
  std::vector<Perm> gens;
  for (const Perm& g : h.generators()) gens.push_back(left_part(g, dl));
  return Group::generate(dl, gens);
}

Group right_projection_group(const Group& h, int dl, int dr) {
  std::vector<Perm> gens;
  for (const Perm& g : h.generators()) gens.push_back(right_part(g, dl, dr));
  return Group::generate(dr, gens);
}

/// Subgroup of `outer` whose left parts lie in `a` (a <= L).
Group left_restriction(const Group& outer, const Group& a, int dl, int dr) {
  std::vector<Perm> gens;
  for (const Perm& e : outer.elements(200000))
    if (a.contains(left_part(e, dl))) gens.push_back(e);
  return Group::generate(dl + dr, gens);
}

Group right_restriction(const Group& outer, const Group& b, int dl, int dr) {
  std::vector<Perm> gens;
  for (const Perm& e : outer.elements(200000))
    if (b.contains(right_part(e, dl, dr))) gens.push_back(e);
  return Group::generate(dl + dr, gens);
}

bool maximal_in(const Group& small, const Group& big, unsigned long long budget = 1500) {
  if (small.order() == big.order()) return false;
  for (const Group& s : all_subgroups(big, budget))
    if (s.order() > small.order() && s.order() < big.order() && small.is_subgroup_of(s))
      return false;
  return true;
}

/// Simplicity of the interval of A-invariant subgroups between bottom
/// and top (bottom normal in top, both normalized by A).
bool bottom_invariant_simple(const Group& bottom, const Group& top, const Group& a,
                             unsigned long long budget = 1500) {
  if (bottom.order() == top.order()) return false;
  for (const Group& s : all_subgroups(top, budget)) {
    if (s.order() <= bottom.order() || s.order() >= top.order()) continue;
    if (!bottom.is_subgroup_of(s)) continue;
    bool inv = true;
    for (const Perm& x : a.generators()) {
      Perm xi = x.inverse();
      for (const Perm& sg : s.generators())
        if (!s.contains(xi * sg * x)) {
          inv = false;
          break;
        }
      if (!inv) break;
    }
    if (inv) return false;
  }
  return true;
}

}  // namespace

std::optional<char> goursat_is_maximal(const Group& inner, const Group& outer,
                                       const Group& left, const Group& right) {
  if (!inner.is_subgroup_of(outer))
    throw std::invalid_argument("goursat_is_maximal requires inner <= outer");
  if (inner.order() == outer.order()) return std::nullopt;
  int dl = left.degree(), dr = right.degree();
  GoursatDatum fi = goursat_decompose(inner, left, right);
  GoursatDatum fo = goursat_decompose(outer, left, right);

  // (a)/(b): inner is the restriction of outer over a maximal A < C
  {
    Group e = left_restriction(outer, fi.c, dl, dr);
    if (e.order() == inner.order() && maximal_in(fi.c, fo.c))
      return fo.a_ker.is_subgroup_of(fi.c) ? 'a' : 'b';
  }
  // (c): the right-sided restriction with D-kernel not inside B
  {
    Group e = right_restriction(outer, fi.d, dl, dr);
    if (e.order() == inner.order() && maximal_in(fi.d, fo.d) &&
        !fo.b_ker.is_subgroup_of(fi.d))
      return 'c';
  }
  // (d): same projections, alpha pushed along a simple invariant step
  if (fi.c.same_group(fo.c) && fi.d.same_group(fo.d)) {
    std::vector<Perm> cgens;
    for (const Perm& g : fo.a_ker.generators()) cgens.push_back(embed_left(g, dl, dr));
    Group generated = join(inner, cgens);
    if (generated.same_group(outer) &&
        bottom_invariant_simple(fi.a_ker, fo.a_ker, fi.c))
      return 'd';
  }
  return std::nullopt;
}

std::string to_string(IntervalType t) {
  switch (t) {
    case IntervalType::t2L: return "2L";
    case IntervalType::t2R: return "2R";
    case IntervalType::t3A: return "3A";
    case IntervalType::t3B: return "3B";
    case IntervalType::t4L: return "4L";
    case IntervalType::t4R: return "4R";
    case IntervalType::composed: return "composed";
    default: return "trivial";
  }
}

SkeletonOrders skeleton_orders(const Group& inner, const Group& outer, const Group& left,
                               const Group& right) {
  GoursatDatum fi = goursat_decompose(inner, left, right);
  GoursatDatum fo = goursat_decompose(outer, left, right);
  auto count_side = [](const Group& a_ker, const Group& a, const Group& c_ker,
                       const Group& c) {
    // markers: (A_ker, A), (A, A), (C_ker, A*C_ker), (C, C) as sections
    Group ac = join(a, c_ker.generators());
    std::vector<std::pair<const Group*, const Group*>> markers = {
        {&a_ker, &a}, {&a, &a}, {&c_ker, &ac}, {&c, &c}};
    int distinct = 0;
    for (size_t i = 0; i < markers.size(); ++i) {
      bool dup = false;
      for (size_t j = 0; j < i; ++j)
        if (markers[i].first->same_group(*markers[j].first) &&
            markers[i].second->same_group(*markers[j].second))
          dup = true;
      if (!dup) ++distinct;
    }
    return distinct;
  };
  SkeletonOrders so;
  so.l = count_side(fi.a_ker, fi.c, fo.a_ker, fo.c);
  so.r = count_side(fi.b_ker, fi.d, fo.b_ker, fo.d);
  return so;
}

IntervalType interval_type(const Group& inner, const Group& outer, const Group& left,
                           const Group& right) {
  if (!inner.is_subgroup_of(outer))
    throw std::invalid_argument("interval_type requires inner <= outer");
  if (inner.order() == outer.order()) return IntervalType::trivial;
  SkeletonOrders so = skeleton_orders(inner, outer, left, right);
  if (so.l == 2 && so.r == 1) return IntervalType::t2L;
  if (so.l == 1 && so.r == 2) return IntervalType::t2R;
  if (so.l == 4 && so.r == 2) return IntervalType::t4L;
  if (so.l == 2 && so.r == 4) return IntervalType::t4R;
  if (so.l == so.r && (so.l == 2 || so.l == 3)) {
    GoursatDatum fi = goursat_decompose(inner, left, right);
    GoursatDatum fo = goursat_decompose(outer, left, right);
    bool a_eq_c = fi.c.same_group(fo.c);
    bool kernels_equal = fi.a_ker.same_group(fo.a_ker);
    bool kernel_grows =
        fi.a_ker.is_subgroup_of(fo.a_ker) && fi.a_ker.order() < fo.a_ker.order();
    if (a_eq_c && kernel_grows) return IntervalType::t3A;
    if (kernels_equal && fo.a_ker.is_subgroup_of(fi.c) &&
        fi.c.order() < fo.c.order())
      return IntervalType::t3B;
  }
  return IntervalType::composed;
}

ShortcutReport shortcut_novelty(const Group& inner, const Group& outer, const Group& left,
                                const Group& right, unsigned long long oracle_budget) {
  Interval iv = interval_by_oracle(inner, outer, oracle_budget);
  ShortcutReport rep;
  rep.node_count = static_cast<int>(iv.nodes.size());
  rep.shape = classify(iv);
  int bottom = 0, top = static_cast<int>(iv.nodes.size()) - 1;
  std::set<std::string> tags;
  for (auto [i, j] : iv.hasse) {
    (void)i;
    (void)j;
  }
  // middles that cover the bottom and are covered by the top
  auto has_edge = [&](int a, int b) {
    return std::find(iv.hasse.begin(), iv.hasse.end(), std::make_pair(a, b)) !=
           iv.hasse.end();
  };
  for (int m = 0; m < static_cast<int>(iv.nodes.size()); ++m) {
    if (m == bottom || m == top) continue;
    if (has_edge(bottom, m) && has_edge(m, top)) {
      rep.has_shortcut = true;
      tags.insert(to_string(interval_type(iv.nodes[bottom], iv.nodes[m], left, right)) +
                  "-" + to_string(interval_type(iv.nodes[m], iv.nodes[top], left, right)));
    }
  }
  rep.shortcut_tags.assign(tags.begin(), tags.end());
  // novelty: the four canonical images all have more than one element
  int dl = left.degree(), dr = right.degree();
  std::vector<int> left_points(dl), right_points(dr);
  std::iota(left_points.begin(), left_points.end(), 0);
  std::iota(right_points.begin(), right_points.end(), dl);
  auto distinct_count = [&](const std::function<Group(const Group&)>& image) {
    std::vector<Group> seen;
    for (const Group& node : iv.nodes) {
      Group img = image(node);
      bool dup = false;
      for (const Group& s : seen)
        if (s.same_group(img)) dup = true;
      if (!dup) seen.push_back(std::move(img));
    }
    return seen.size();
  };
  size_t lam = distinct_count([&](const Group& h) { return left_projection_group(h, dl); });
  size_t rho =
      distinct_count([&](const Group& h) { return right_projection_group(h, dl, dr); });
  size_t lker = distinct_count([&](const Group& h) {
    Group fix = h.pointwise_stabilizer(right_points);
    return left_projection_group(fix, dl);
  });
  size_t rker = distinct_count([&](const Group& h) {
    Group fix = h.pointwise_stabilizer(left_points);
    return right_projection_group(fix, dl, dr);
  });
  rep.is_novelty = lam > 1 && rho > 1 && lker > 1 && rker > 1;
  return rep;
}

}  // namespace grouplat
