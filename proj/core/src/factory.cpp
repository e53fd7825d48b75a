#include "grouplat/factory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "grouplat/json_io.hpp"

namespace grouplat {

namespace {

BigUint factorial_big(long long n) {
  BigUint f = 1;
  for (long long i = 2; i <= n; ++i) f *= static_cast<BigUint>(i);
  return f;
}

BigUint power_big(BigUint base, long long e) {
  BigUint acc = 1;
  for (long long i = 0; i < e; ++i) acc *= base;
  return acc;
}

void check_order(const Construction& c) {
  if (c.expected.order && c.group.order() != *c.expected.order)
    throw std::runtime_error(c.name + ": computed order " + big_to_string(c.group.order()) +
                             " does not match expected " + big_to_string(*c.expected.order));
}

/// A small generating subset, found by scanning elements in canonical order.
Group thin_generators(const Group& g, unsigned long long budget) {
  Group acc = Group::trivial(g.degree());
  if (g.order() == 1) return acc;
  auto elems = g.elements(budget);
  std::sort(elems.begin(), elems.end());
  for (const Perm& e : elems) {
    if (acc.order() == g.order()) break;
    if (!acc.contains(e)) acc = join(acc, {e});
  }
  return acc;
}

}  // namespace

Construction wreath(const Group& a, const Group& b, paritylaws::WreathMode mode) {
  int m = a.degree(), l = b.degree();
  if (m < 2 || l < 2) throw std::invalid_argument("wreath: inner and outer degrees must be >= 2");
  std::vector<Perm> gens;
  std::string name;
  int degree;
  if (mode == paritylaws::WreathMode::imprimitive) {
    degree = m * l;
    name = "wr-imp";
    // point (x, i) = x + i*m
    for (int i = 0; i < l; ++i)
      for (const Perm& ga : a.generators()) {
        std::vector<uint16_t> im(degree);
        std::iota(im.begin(), im.end(), 0);
        for (int x = 0; x < m; ++x) im[x + i * m] = static_cast<uint16_t>(ga[x] + i * m);
        gens.push_back(Perm(im));
      }
    for (const Perm& gb : b.generators()) {
      std::vector<uint16_t> im(degree);
      for (int i = 0; i < l; ++i)
        for (int x = 0; x < m; ++x) im[x + i * m] = static_cast<uint16_t>(x + gb[i] * m);
      gens.push_back(Perm(im));
    }
  } else {
    BigUint deg_big = power_big(m, l);
    if (deg_big > 65535) throw budget_error("product action degree too large");
    degree = static_cast<int>(deg_big);
    name = "wr-prod";
    // point = sum of x_i * m^i, coordinate 0 least significant
    std::vector<int> pw(l + 1, 1);
    for (int i = 1; i <= l; ++i) pw[i] = pw[i - 1] * m;
    auto digit = [&](int pt, int i) { return pt / pw[i] % m; };
    for (int i = 0; i < l; ++i)
      for (const Perm& ga : a.generators()) {
        std::vector<uint16_t> im(degree);
        for (int pt = 0; pt < degree; ++pt)
          im[pt] = static_cast<uint16_t>(pt + (ga[digit(pt, i)] - digit(pt, i)) * pw[i]);
        gens.push_back(Perm(im));
      }
    for (const Perm& gb : b.generators()) {
      Perm gbi = gb.inverse();
      std::vector<uint16_t> im(degree);
      for (int pt = 0; pt < degree; ++pt) {
        int out = 0;
        for (int i = 0; i < l; ++i) out += digit(pt, gbi[i]) * pw[i];
        im[pt] = static_cast<uint16_t>(out);
      }
      gens.push_back(Perm(im));
    }
  }
  Construction c;
  c.group = Group::generate(degree, gens);
  c.name = name;
  c.point_labeling = mode == paritylaws::WreathMode::imprimitive
                         ? "cells x copies: point (x,i) = x + i*m"
                         : "base-m tuples, coordinate 0 least significant";
  c.expected.order = power_big(a.order(), l) * b.order();
  check_order(c);
  return c;
}

Perm wreath_base_perm(int m, int l, int coordinate, const Perm& a,
                      paritylaws::WreathMode mode) {
  if (a.degree() != m || coordinate < 0 || coordinate >= l)
    throw std::invalid_argument("wreath base element shape mismatch");
  if (mode == paritylaws::WreathMode::imprimitive) {
    std::vector<uint16_t> im(static_cast<size_t>(m) * l);
    std::iota(im.begin(), im.end(), 0);
    for (int x = 0; x < m; ++x)
      im[x + coordinate * m] = static_cast<uint16_t>(a[x] + coordinate * m);
    return Perm(im);
  }
  BigUint deg_big = power_big(m, l);
  if (deg_big > 65535) throw budget_error("product action degree too large");
  int degree = static_cast<int>(deg_big);
  std::vector<int> pw(l + 1, 1);
  for (int i = 1; i <= l; ++i) pw[i] = pw[i - 1] * m;
  std::vector<uint16_t> im(degree);
  for (int pt = 0; pt < degree; ++pt) {
    int digit = pt / pw[coordinate] % m;
    im[pt] = static_cast<uint16_t>(pt + (a[digit] - digit) * pw[coordinate]);
  }
  return Perm(im);
}

Perm wreath_top_perm(int m, int l, const Perm& beta, paritylaws::WreathMode mode) {
  if (beta.degree() != l) throw std::invalid_argument("wreath top element shape mismatch");
  if (mode == paritylaws::WreathMode::imprimitive) {
    std::vector<uint16_t> im(static_cast<size_t>(m) * l);
    for (int i = 0; i < l; ++i)
      for (int x = 0; x < m; ++x) im[x + i * m] = static_cast<uint16_t>(x + beta[i] * m);
    return Perm(im);
  }
  BigUint deg_big = power_big(m, l);
  if (deg_big > 65535) throw budget_error("product action degree too large");
  int degree = static_cast<int>(deg_big);
  std::vector<int> pw(l + 1, 1);
  for (int i = 1; i <= l; ++i) pw[i] = pw[i - 1] * m;
  Perm binv = beta.inverse();
  std::vector<uint16_t> im(degree);
  for (int pt = 0; pt < degree; ++pt) {
    int out = 0;
    for (int i = 0; i < l; ++i) out += (pt / pw[binv[i]] % m) * pw[i];
    im[pt] = static_cast<uint16_t>(out);
  }
  return Perm(im);
}

std::vector<Perm> agl_generators(int n, long long q) {
  long long p;
  int f;
  if (!prime_power(q, &p, &f)) throw std::invalid_argument("q must be a prime power");
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  Field fld(p, f);
  BigUint deg_big = power_big(q, n);
  if (deg_big > 65535) throw budget_error("affine space too large");
  int degree = static_cast<int>(deg_big);
  std::vector<long long> pw(n + 1, 1);
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * q;
  auto coord = [&](long long pt, int i) { return pt / pw[i] % q; };
  std::vector<Perm> gens;
  // translations by basis vectors
  for (int i = 0; i < n; ++i) {
    std::vector<uint16_t> im(degree);
    for (long long pt = 0; pt < degree; ++pt)
      im[pt] = static_cast<uint16_t>(pt + (fld.add(coord(pt, i), 1) - coord(pt, i)) * pw[i]);
    gens.push_back(Perm(im));
  }
  // transvections T_ij(1): coordinate i += coordinate j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<uint16_t> im(degree);
      for (long long pt = 0; pt < degree; ++pt) {
        long long ci = fld.add(coord(pt, i), coord(pt, j));
        im[pt] = static_cast<uint16_t>(pt + (ci - coord(pt, i)) * pw[i]);
      }
      gens.push_back(Perm(im));
    }
  // diagonal map e0 -> u*e0
  if (q > 2) {
    long long u = fld.primitive();
    std::vector<uint16_t> im(degree);
    for (long long pt = 0; pt < degree; ++pt)
      im[pt] = static_cast<uint16_t>(pt + (fld.mul(coord(pt, 0), u) - coord(pt, 0)) * pw[0]);
    gens.push_back(Perm(im));
  }
  return gens;
}

Construction agl(int n, long long q) {
  Construction c;
  c.group = Group::generate(static_cast<int>(power_big(q, n)), agl_generators(n, q));
  c.name = "agl:" + std::to_string(n) + "," + std::to_string(q);
  c.point_labeling = "vectors of GF(q)^n, coordinate 0 least significant";
  BigUint qn = power_big(q, n);
  BigUint order = qn;
  for (int i = 0; i < n; ++i) order *= (qn - power_big(q, i));
  c.expected.order = order;
  c.expected.group_parity = paritylaws::affine_even(n, q) ? 0 : 1;
  check_order(c);
  return c;
}

namespace {

struct ProjectiveSpace {
  Field fld;
  int d;
  long long q;
  std::vector<long long> points;  // canonical vector indexes, sorted
  std::map<long long, int> point_id;
  std::vector<long long> pw;

  ProjectiveSpace(int d_, long long q_, long long p, int f) : fld(p, f), d(d_), q(q_) {
    pw.assign(d + 1, 1);
    for (int i = 1; i <= d; ++i) pw[i] = pw[i - 1] * q;
    if (pw[d] > 4000000) throw budget_error("projective space too large");
    for (long long v = 1; v < pw[d]; ++v)
      if (is_canonical(v)) {
        point_id[v] = static_cast<int>(points.size());
        points.push_back(v);
      }
  }

  long long coord(long long v, int i) const { return v / pw[i] % q; }

  bool is_canonical(long long v) const {
    for (int i = d - 1; i >= 0; --i) {
      long long c = coord(v, i);
      if (c != 0) return c == 1;
    }
    return false;
  }

  long long normalize(long long v) const {
    for (int i = d - 1; i >= 0; --i) {
      long long c = coord(v, i);
      if (c != 0) {
        long long cinv = fld.inv(c);
        long long out = 0;
        for (int j = 0; j <= i; ++j) out += fld.mul(coord(v, j), cinv) * pw[j];
        return out;
      }
    }
    throw std::runtime_error("cannot normalize the zero vector");
  }

  Perm induced(const std::function<long long(long long)>& vec_map) const {
    std::vector<uint16_t> im(points.size());
    for (size_t i = 0; i < points.size(); ++i)
      im[i] = static_cast<uint16_t>(point_id.at(normalize(vec_map(points[i]))));
    return Perm(std::move(im));
  }

  Perm transvection(int ti, int tj, long long scalar) const {
    return induced([&](long long v) {
      long long ci = fld.add(coord(v, ti), fld.mul(scalar, coord(v, tj)));
      return v + (ci - coord(v, ti)) * pw[ti];
    });
  }

  Perm diag_u() const {
    long long u = fld.primitive();
    return induced(
        [&](long long v) { return v + (fld.mul(coord(v, 0), u) - coord(v, 0)) * pw[0]; });
  }

  Perm field_aut(int k) const {
    return induced([&](long long v) {
      long long out = 0;
      for (int j = 0; j < d; ++j) {
        long long x = coord(v, j);
        for (int step = 0; step < k; ++step) x = fld.power(x, fld.p());
        out += x * pw[j];
      }
      return out;
    });
  }
};

ProjectiveSpace make_pg(int d, long long q) {
  long long p;
  int f;
  if (!prime_power(q, &p, &f)) throw std::invalid_argument("q must be a prime power");
  if (d < 2) throw std::invalid_argument("projective dimension must be >= 2");
  return ProjectiveSpace(d, q, p, f);
}

}  // namespace

std::vector<Perm> projective_generators(int d, long long q, ProjectiveFlavor flavor) {
  ProjectiveSpace pg = make_pg(d, q);
  std::vector<Perm> gens;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      long long scalar = 1;
      for (int k = 0; k < pg.fld.f(); ++k) {
        gens.push_back(pg.transvection(i, j, scalar));
        scalar = pg.fld.mul(scalar, pg.fld.primitive());
      }
    }
  if (flavor == ProjectiveFlavor::PGL || flavor == ProjectiveFlavor::PGammaL)
    if (q > 2) gens.push_back(pg.diag_u());
  if (flavor == ProjectiveFlavor::PSigmaL || flavor == ProjectiveFlavor::PGammaL)
    if (pg.fld.f() > 1) gens.push_back(pg.field_aut(1));
  return gens;
}

Perm projective_diag_u(int d, long long q) { return make_pg(d, q).diag_u(); }

Perm projective_field_aut(int d, long long q, int k) { return make_pg(d, q).field_aut(k); }

Construction projective(int d, long long q, ProjectiveFlavor flavor) {
  long long p;
  int f;
  prime_power(q, &p, &f);
  ProjectiveSpace pg = make_pg(d, q);
  Construction c;
  c.group =
      Group::generate(static_cast<int>(pg.points.size()), projective_generators(d, q, flavor));
  static const char* names[] = {"PSL", "PGL", "PSigmaL", "PGammaL"};
  c.name = std::string("proj:") + std::to_string(d) + "," + std::to_string(q) + "," +
           names[static_cast<int>(flavor)];
  c.point_labeling = "projective points, last nonzero coordinate 1, sorted by vector index";
  BigUint pgl = power_big(q, static_cast<long long>(d) * (d - 1) / 2);
  for (int i = 2; i <= d; ++i) pgl *= (power_big(q, i) - 1);
  BigUint psl = pgl / std::gcd(static_cast<long long>(d), q - 1);
  switch (flavor) {
    case ProjectiveFlavor::PSL: c.expected.order = psl; break;
    case ProjectiveFlavor::PGL: c.expected.order = pgl; break;
    case ProjectiveFlavor::PSigmaL: c.expected.order = psl * static_cast<BigUint>(f); break;
    case ProjectiveFlavor::PGammaL: c.expected.order = pgl * static_cast<BigUint>(f); break;
  }
  check_order(c);
  return c;
}

namespace {

struct SuzukiMachine {
  Field fld;
  long long q;
  int a;        // q = 2^(2a+1)
  long long r;  // 2^(a+1), with r^2 = 2q

  explicit SuzukiMachine(long long q_) : fld(2, exponent_of(q_)), q(q_) {
    int e = exponent_of(q_);
    a = (e - 1) / 2;
    r = 1LL << (a + 1);
  }

  static int exponent_of(long long q) {
    long long p;
    int f;
    if (!prime_power(q, &p, &f) || p != 2 || f % 2 == 0 || f < 3)
      throw std::invalid_argument("Suzuki parameter must be an odd power of 2, at least 8");
    return f;
  }

  long long theta(long long x) const { return fld.power(x, r); }

  long long theta_inv(long long x) const {
    long long rr = r % (q - 1);
    long long rp = 0;
    for (long long cand = 1; cand < q; ++cand)
      if (rr * cand % (q - 1) == 1) { rp = cand; break; }
    return fld.power(x, rp);
  }

  using Mat = std::array<std::array<long long, 4>, 4>;

  Mat q_matrix(long long x, long long y) const {
    Mat m{};
    long long x1t = fld.mul(x, theta(x));
    long long x2t = fld.mul(fld.mul(x, x), theta(x));
    m[0] = {1, 0, 0, 0};
    m[1] = {x, 1, 0, 0};
    m[2] = {fld.add(x1t, y), theta(x), 1, 0};
    m[3] = {fld.add(fld.add(x2t, fld.mul(x, y)), theta(y)), y, x, 1};
    return m;
  }

  Mat k_matrix(long long u) const {
    Mat m{};
    long long s2 = theta_inv(u);
    long long s1 = theta_inv(fld.mul(u, theta(u)));  // s1^theta = u^(1+theta)
    m[0][0] = s1;
    m[1][1] = s2;
    m[2][2] = fld.inv(s2);
    m[3][3] = fld.inv(s1);
    return m;
  }

  Mat tau_matrix() const {
    Mat m{};
    m[0][3] = m[1][2] = m[2][1] = m[3][0] = 1;
    return m;
  }

  std::array<long long, 4> apply(const Mat& m, const std::array<long long, 4>& v) const {
    std::array<long long, 4> out{};
    for (int i = 0; i < 4; ++i) {
      long long acc = 0;
      for (int j = 0; j < 4; ++j) acc = fld.add(acc, fld.mul(m[i][j], v[j]));
      out[i] = acc;
    }
    return out;
  }

  std::array<long long, 4> ovoid_point(long long x, long long y) const {
    long long x1t = fld.mul(x, theta(x));
    long long x2t = fld.mul(fld.mul(x, x), theta(x));
    return {1, x, fld.add(x1t, y), fld.add(fld.add(x2t, fld.mul(x, y)), theta(y))};
  }

  /// Point ids: (x,y) -> x*q + y, infinity -> q^2.
  int point_of(std::array<long long, 4> v) const {
    if (v[0] == 0) {
      if (v[1] != 0 || v[2] != 0 || v[3] == 0)
        throw std::runtime_error("image left the Suzuki ovoid");
      return static_cast<int>(q * q);
    }
    long long s = fld.inv(v[0]);
    for (auto& c : v) c = fld.mul(c, s);
    long long x = v[1];
    long long y = fld.sub(v[2], fld.mul(x, theta(x)));
    auto check = ovoid_point(x, y);
    if (check != v) throw std::runtime_error("image left the Suzuki ovoid");
    return static_cast<int>(x * q + y);
  }

  Perm perm_of(const Mat& m) const {
    int degree = static_cast<int>(q * q + 1);
    std::vector<uint16_t> im(degree);
    for (long long x = 0; x < q; ++x)
      for (long long y = 0; y < q; ++y)
        im[x * q + y] = static_cast<uint16_t>(point_of(apply(m, ovoid_point(x, y))));
    im[q * q] = static_cast<uint16_t>(point_of(apply(m, {0, 0, 0, 1})));
    return Perm(std::move(im));
  }
};

}  // namespace

Construction suzuki(long long q, SuzukiAction action) {
  SuzukiMachine mach(q);
  std::vector<Perm> gens;
  long long basis = 1;
  for (int k = 0; k < mach.fld.f(); ++k) {
    gens.push_back(mach.perm_of(mach.q_matrix(basis, 0)));
    gens.push_back(mach.perm_of(mach.q_matrix(0, basis)));
    basis = mach.fld.mul(basis, mach.fld.primitive());
  }
  gens.push_back(mach.perm_of(mach.k_matrix(mach.fld.primitive())));
  gens.push_back(mach.perm_of(mach.tau_matrix()));

  Construction c;
  c.group = Group::generate(static_cast<int>(q * q + 1), gens);
  c.name = "sz:" + std::to_string(q);
  c.point_labeling = "ovoid points (a,b) -> a*q + b, infinity last";
  c.expected.order = static_cast<BigUint>(q) * q * (q - 1) * (q * q + 1);
  c.expected.profile = std::make_pair(2, 1);
  check_order(c);
  if (action == SuzukiAction::pairs) {
    Construction pc;
    pc.group = subsets_action(c.group, 2);
    pc.name = "sz:" + std::to_string(q) + ",pairs";
    pc.point_labeling = "2-subsets of the ovoid, lexicographic";
    pc.expected.order = c.expected.order;
    check_order(pc);
    return pc;
  }
  return c;
}

AutData automorphism_group(const Group& g, unsigned long long budget) {
  if (g.order() > budget)
    throw budget_error("automorphism search refused: order " + big_to_string(g.order()) +
                       " exceeds budget " + std::to_string(budget));
  AutData out;
  out.elements = g.elements(budget);
  std::sort(out.elements.begin(), out.elements.end());
  size_t n = out.elements.size();
  auto id_of = [&](const Perm& p) {
    auto it = std::lower_bound(out.elements.begin(), out.elements.end(), p);
    return static_cast<int>(it - out.elements.begin());
  };
  Group thin = thin_generators(g, budget);
  std::vector<int> gen_ids;
  for (const Perm& p : thin.generators()) gen_ids.push_back(id_of(p));
  if (gen_ids.empty()) {
    out.auts.push_back(Perm::identity(static_cast<int>(n)));
    return out;
  }
  int identity_id = id_of(Perm::identity(g.degree()));

  // phi is propagated along Cayley edges, every edge checked
  auto try_images = [&](const std::vector<int>& imgs) -> std::optional<Perm> {
    std::vector<int> phi(n, -1);
    phi[identity_id] = identity_id;
    std::vector<int> work{identity_id};
    for (size_t w = 0; w < work.size(); ++w) {
      int x = work[w];
      for (size_t k = 0; k < gen_ids.size(); ++k) {
        int y = id_of(out.elements[x] * out.elements[gen_ids[k]]);
        int fy = id_of(out.elements[phi[x]] * out.elements[imgs[k]]);
        if (phi[y] == -1) {
          phi[y] = fy;
          work.push_back(y);
        } else if (phi[y] != fy) {
          return std::nullopt;
        }
      }
    }
    if (work.size() != n) return std::nullopt;
    std::vector<bool> hit(n, false);
    for (int v : phi) {
      if (v < 0 || hit[v]) return std::nullopt;
      hit[v] = true;
    }
    std::vector<uint16_t> im(n);
    for (size_t i = 0; i < n; ++i) im[i] = static_cast<uint16_t>(phi[i]);
    return Perm(im);
  };

  std::vector<std::vector<int>> candidates(gen_ids.size());
  for (size_t k = 0; k < gen_ids.size(); ++k) {
    long long ord = out.elements[gen_ids[k]].order();
    for (size_t e = 0; e < n; ++e)
      if (out.elements[e].order() == ord) candidates[k].push_back(static_cast<int>(e));
  }
  std::vector<int> imgs(gen_ids.size());
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == gen_ids.size()) {
      if (auto aut = try_images(imgs)) out.auts.push_back(*aut);
      return;
    }
    for (int cand : candidates[k]) {
      imgs[k] = cand;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

Construction holomorph(const Group& g, unsigned long long budget) {
  if (g.order() > budget) throw budget_error("holomorph refused: order exceeds budget");
  AutData aut = automorphism_group(g, budget);
  size_t n = aut.elements.size();
  auto id_of = [&](const Perm& p) {
    auto it = std::lower_bound(aut.elements.begin(), aut.elements.end(), p);
    return static_cast<int>(it - aut.elements.begin());
  };
  std::vector<Perm> gens;
  for (const Perm& gg : g.generators()) {
    std::vector<uint16_t> im(n);
    for (size_t x = 0; x < n; ++x) im[x] = static_cast<uint16_t>(id_of(aut.elements[x] * gg));
    gens.push_back(Perm(im));
  }
  Group hol_so_far = Group::generate(static_cast<int>(n), gens);
  for (const Perm& a : aut.auts)
    if (!hol_so_far.contains(a)) {
      gens.push_back(a);
      hol_so_far = Group::generate(static_cast<int>(n), gens);
    }
  Construction c;
  c.group = hol_so_far;
  c.name = "hol";
  c.point_labeling = "elements of G in canonical (sorted image) order";
  c.expected.order = g.order() * static_cast<BigUint>(aut.auts.size());
  check_order(c);
  return c;
}

namespace {

Group normal_closure(const Group& g, const std::vector<Perm>& seeds) {
  Group cl = Group::generate(g.degree(), seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> extra;
    for (const Perm& s : cl.generators())
      for (const Perm& x : g.generators()) {
        Perm conj = x.inverse() * s * x;
        if (!cl.contains(conj)) extra.push_back(conj);
      }
    if (!extra.empty()) {
      cl = join(cl, extra);
      grew = true;
    }
  }
  return cl;
}

}  // namespace

Group socle_of_primitive(const Group& a) {
  if (!is_primitive(a)) throw std::invalid_argument("socle search requires a primitive group");
  auto elems = a.elements(20000);
  std::sort(elems.begin(), elems.end(), [](const Perm& x, const Perm& y) {
    return std::make_pair(x.support_size(), x) < std::make_pair(y.support_size(), y);
  });
  std::optional<Group> best;
  for (const Perm& e : elems) {
    if (e.is_identity()) continue;
    Group cl = normal_closure(a, {e});
    if (!best || cl.order() < best->order()) best = cl;
  }
  if (!best) throw std::runtime_error("socle identification failed");
  if (!is_transitive(*best)) throw std::runtime_error("socle candidate is not transitive");
  for (const Perm& e : best->elements(20000)) {
    if (e.is_identity()) continue;
    if (!normal_closure(a, {e}).same_group(*best))
      throw std::runtime_error("socle candidate is not a minimal normal subgroup");
  }
  return *best;
}

std::vector<Perm> socle_quotient_reps(const Group& a, const Group& socle) {
  std::vector<Perm> reps{Perm::identity(a.degree())};
  auto elems = a.elements(20000);
  std::sort(elems.begin(), elems.end());
  for (const Perm& e : elems) {
    bool fresh = true;
    for (const Perm& r : reps)
      if (socle.contains(e * r.inverse())) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(e);
  }
  return reps;
}

DiagonalGhol diagonal_ghol(const Group& t, int l, long long point_budget) {
  if (l < 2) throw std::invalid_argument("diagonal type needs l >= 2");
  auto telems = t.elements(2000);
  std::sort(telems.begin(), telems.end());
  bool abelian = true;
  for (const Perm& x : t.generators())
    for (const Perm& y : t.generators())
      if (x * y != y * x) abelian = false;
  if (abelian) throw std::invalid_argument("T must be non-abelian simple");
  for (const Perm& e : telems) {
    if (e.is_identity()) continue;
    if (!normal_closure(t, {e}).same_group(t))
      throw std::invalid_argument("T must be simple (normal-subgroup probe failed)");
  }
  BigUint points_big = power_big(t.order(), l - 1);
  if (points_big > static_cast<BigUint>(point_budget))
    throw budget_error("diagonal coset space exceeds the point budget");
  size_t tsize = telems.size();
  int degree = static_cast<int>(points_big);

  auto tid = [&](const Perm& p) {
    auto it = std::lower_bound(telems.begin(), telems.end(), p);
    return static_cast<int>(it - telems.begin());
  };
  auto point_of = [&](const std::vector<Perm>& tup) {
    Perm lead_inv = tup[0].inverse();
    long long out = 0, mult = 1;
    for (int i = 1; i < l; ++i) {
      out += tid(lead_inv * tup[i]) * mult;
      mult *= tsize;
    }
    return static_cast<int>(out);
  };
  auto tuple_of = [&](int pt) {
    std::vector<Perm> tup(l, Perm::identity(t.degree()));
    long long v = pt;
    for (int i = 1; i < l; ++i) {
      tup[i] = telems[v % tsize];
      v /= tsize;
    }
    return tup;
  };
  auto tuple_perm = [&](const std::function<std::vector<Perm>(std::vector<Perm>)>& fn) {
    std::vector<uint16_t> im(degree);
    for (int pt = 0; pt < degree; ++pt)
      im[pt] = static_cast<uint16_t>(point_of(fn(tuple_of(pt))));
    return Perm(std::move(im));
  };

  DiagonalGhol d;
  d.l = l;
  d.t_elements = telems;

  for (int i = 0; i < l; ++i)
    for (const Perm& g : t.generators())
      d.translation_gens.push_back(tuple_perm([&](std::vector<Perm> tup) {
        tup[i] = tup[i] * g;
        return tup;
      }));

  for (const Perm& alpha : Group::symmetric(l).elements(5040)) {
    Perm ainv = alpha.inverse();
    Perm coset = tuple_perm([&](std::vector<Perm> tup) {
      std::vector<Perm> outt(l, Perm::identity(t.degree()));
      for (int i = 0; i < l; ++i) outt[i] = tup[ainv[i]];
      return outt;
    });
    d.sl_table_.push_back({alpha, coset});
  }

  AutData aut = automorphism_group(t, t.order_u64());
  std::set<Perm> inner;
  for (const Perm& x : telems) {
    std::vector<uint16_t> im(tsize);
    Perm xinv = x.inverse();
    for (size_t e = 0; e < tsize; ++e)
      im[e] = static_cast<uint16_t>(tid(xinv * telems[e] * x));
    inner.insert(Perm(im));
  }
  for (const Perm& a : aut.auts) {
    bool fresh = true;
    for (const Perm& r : d.out_reps)
      if (inner.count(a * r.inverse())) {
        fresh = false;
        break;
      }
    if (fresh) d.out_reps.push_back(a);
  }
  // identity class first
  std::stable_sort(d.out_reps.begin(), d.out_reps.end(),
                   [&](const Perm& x, const Perm& y) {
                     return inner.count(x) > inner.count(y);
                   });
  for (const Perm& a : d.out_reps) {
    d.out_class_perms_.push_back(tuple_perm([&](std::vector<Perm> tup) {
      for (int i = 0; i < l; ++i) tup[i] = telems[a[tid(tup[i])]];
      return tup;
    }));
  }

  d.socle_group_ = Group::generate(degree, d.translation_gens);

  std::vector<Perm> all_gens = d.translation_gens;
  for (const auto& [alpha, coset] : d.sl_table_) all_gens.push_back(coset);
  for (const Perm& p : d.out_class_perms_) all_gens.push_back(p);
  d.construction.group = Group::generate(degree, all_gens);
  d.construction.name = "ghol";
  d.construction.point_labeling = "cosets of the diagonal, tuples normalized to lead 1";
  d.construction.expected.order =
      power_big(t.order(), l) * factorial_big(l) * static_cast<BigUint>(d.out_reps.size());
  check_order(d.construction);
  return d;
}

Group DiagonalGhol::lift_trivial() const { return socle_group_; }

Group DiagonalGhol::lift_top() const {
  std::vector<Perm> gens = translation_gens;
  for (const auto& [alpha, coset] : sl_table_) gens.push_back(coset);
  return Group::generate(socle_group_.degree(), gens);
}

Group DiagonalGhol::lift_full() const { return construction.group; }

std::pair<Perm, int> DiagonalGhol::down(const Perm& w) const {
  for (const auto& [alpha, aperm] : sl_table_)
    for (size_t oc = 0; oc < out_class_perms_.size(); ++oc) {
      Perm q = aperm * out_class_perms_[oc];
      if (socle_group_.contains(w * q.inverse()))
        return {alpha, static_cast<int>(oc)};
    }
  throw std::invalid_argument("element is not in the generalized holomorph");
}

Construction blow_up(const Group& a, int l, const std::vector<QuotientWreathElement>& p_gens) {
  if (l < 2) throw std::invalid_argument("blow-up needs l >= 2");
  Group socle = socle_of_primitive(a);
  std::vector<Perm> reps = socle_quotient_reps(a, socle);
  size_t qn = reps.size();

  auto rep_index = [&](const Perm& x) {
    for (size_t i = 0; i < qn; ++i)
      if (socle.contains(x * reps[i].inverse())) return static_cast<int>(i);
    throw std::runtime_error("coset representative lookup failed");
  };

  // the quotient wreath as permutations of qn*l points, (x, i) = x + i*qn
  auto encode = [&](const QuotientWreathElement& w) {
    if (w.top.degree() != l || static_cast<int>(w.coords.size()) != l)
      throw std::invalid_argument("quotient wreath element has wrong shape");
    std::vector<uint16_t> im(qn * l);
    for (int i = 0; i < l; ++i)
      for (size_t x = 0; x < qn; ++x) {
        int j = w.top[i];
        int xi = rep_index(reps[x] * reps[w.coords[j]]);
        im[x + i * qn] = static_cast<uint16_t>(xi + j * qn);
      }
    return Perm(im);
  };
  std::vector<Perm> p_perms;
  for (const auto& w : p_gens) p_perms.push_back(encode(w));
  Group p_group = Group::generate(static_cast<int>(qn * l), p_perms);

  {
    std::vector<Perm> tops;
    for (const auto& w : p_gens) tops.push_back(w.top);
    Group top = Group::generate(l, tops);
    if (!is_transitive(top))
      throw std::invalid_argument("P is not large: top projection intransitive");
    auto pelems = p_group.elements(100000);
    for (int i = 0; i < l; ++i) {
      std::set<int> proj;
      for (const Perm& w : pelems) {
        if (w[i * static_cast<int>(qn)] / static_cast<int>(qn) != i) continue;
        proj.insert(w[i * static_cast<int>(qn)] % static_cast<int>(qn));
      }
      if (proj.size() != qn)
        throw std::invalid_argument("P is not large: coordinate projection is proper");
    }
  }

  int m = a.degree();
  BigUint deg_big = power_big(m, l);
  if (deg_big > 65535) throw budget_error("blow-up degree too large");
  int degree = static_cast<int>(deg_big);
  std::vector<int> pw(l + 1, 1);
  for (int i = 1; i <= l; ++i) pw[i] = pw[i - 1] * m;
  auto digit = [&](int pt, int i) { return pt / pw[i] % m; };

  std::vector<Perm> gens;
  for (int i = 0; i < l; ++i)
    for (const Perm& sg : socle.generators()) {
      std::vector<uint16_t> im(degree);
      for (int pt = 0; pt < degree; ++pt)
        im[pt] = static_cast<uint16_t>(pt + (sg[digit(pt, i)] - digit(pt, i)) * pw[i]);
      gens.push_back(Perm(im));
    }
  for (const auto& w : p_gens) {
    Perm binv = w.top.inverse();
    std::vector<uint16_t> im(degree);
    for (int pt = 0; pt < degree; ++pt) {
      int out = 0;
      for (int i = 0; i < l; ++i) out += reps[w.coords[i]][digit(pt, binv[i])] * pw[i];
      im[pt] = static_cast<uint16_t>(out);
    }
    gens.push_back(Perm(im));
  }

  Construction c;
  c.group = Group::generate(degree, gens);
  c.name = "blowup";
  c.point_labeling = "base-m tuples, coordinate 0 least significant";
  c.expected.order = power_big(socle.order(), l) * p_group.order();
  check_order(c);
  return c;
}

namespace {

struct AtlasEntry {
  int degree;
  std::vector<std::string> gens;
  unsigned long long order;
  unsigned long long normalizer_order;
  std::string labeling;
};

const std::map<std::string, AtlasEntry>& atlas_table() {
  static const std::map<std::string, AtlasEntry> table = {
      {"M11/11",
       {11,
        {"(0 1 2 3 4 5 6 7 8 9 10)", "(2 6 10 7)(3 9 4 5)"},
        7920,
        7920,
        "natural 11-point action"}},
      {"M12/12",
       {12,
        {"(0 1 2 3 4 5 6 7 8 9 10)", "(2 6 10 7)(3 9 4 5)",
         "(0 11)(1 10)(2 5)(3 7)(4 8)(6 9)"},
        95040,
        95040,
        "natural 12-point action"}},
  };
  return table;
}

Construction atlas_from_entry(const std::string& name, const AtlasEntry& e) {
  std::vector<Perm> gens;
  for (const auto& s : e.gens) gens.push_back(Perm::parse(s, e.degree));
  Construction c;
  c.group = Group::generate(e.degree, gens);
  c.name = "atlas:" + name;
  c.point_labeling = e.labeling;
  c.expected.order = e.order;
  c.expected.normalizer_order = e.normalizer_order;
  check_order(c);
  return c;
}

Construction m24_construction() {
  // points 0..22 = GF(23), 23 = infinity; PSL(2,23) plus the cube twist
  const int P = 23;
  const int INF = 23;
  auto fe = [&](long long x) { return static_cast<int>(((x % P) + P) % P); };
  std::vector<bool> is_square(P, false);
  for (int x = 1; x < P; ++x) is_square[x * x % P] = true;
  auto inv_mod = [&](int x) {
    for (int y = 1; y < P; ++y)
      if (x * y % P == 1) return y;
    throw std::runtime_error("no inverse");
  };
  std::vector<uint16_t> add1(24), mul2(24), inv(24), twist(24);
  for (int x = 0; x < P; ++x) {
    add1[x] = static_cast<uint16_t>(fe(x + 1));
    mul2[x] = static_cast<uint16_t>(fe(2 * x));
    inv[x] = x == 0 ? INF : static_cast<uint16_t>(fe(-inv_mod(x)));
    if (x == 0)
      twist[x] = 0;
    else {
      int x3 = x * x % P * x % P;
      twist[x] = is_square[x] ? static_cast<uint16_t>(x3 * inv_mod(9) % P)
                              : static_cast<uint16_t>(9 * x3 % P);
    }
  }
  add1[INF] = INF;
  mul2[INF] = INF;
  inv[INF] = 0;
  twist[INF] = INF;
  Construction c;
  c.group = Group::generate(24, {Perm(add1), Perm(mul2), Perm(inv), Perm(twist)});
  c.name = "atlas:M24/24";
  c.point_labeling = "projective line over GF(23), infinity last";
  c.expected.order = 244823040ULL;
  c.expected.normalizer_order = 244823040ULL;
  check_order(c);
  return c;
}

Construction m23_construction() {
  Construction m24 = m24_construction();
  Group stab = m24.group.point_stabilizer(23);
  std::vector<int> rest(23);
  std::iota(rest.begin(), rest.end(), 0);
  Construction c;
  c.group = restrict_to(stab, rest);
  c.name = "atlas:M23/23";
  c.point_labeling = "GF(23) line points, infinity removed";
  c.expected.order = 10200960ULL;
  c.expected.normalizer_order = 10200960ULL;
  check_order(c);
  return c;
}

Construction m11_degree12() {
  Construction m11 = atlas_from_entry("M11/11", atlas_table().at("M11/11"));
  Perm c11;
  m11.group.for_each_element([&](const Perm& p) {
    if (p.order() == 11) {
      c11 = p;
      return false;
    }
    return true;
  });
  Group standard_agl = agl(1, 11).group;
  std::vector<uint16_t> wim(11);
  int pt = 0;
  for (int i = 0; i < 11; ++i) {
    wim[i] = static_cast<uint16_t>(pt);
    pt = c11[pt];
  }
  Perm w(wim);
  Group nsym = standard_agl.conjugated_by(w);
  std::vector<Perm> in_m11;
  for (const Perm& x : nsym.elements())
    if (m11.group.contains(x)) in_m11.push_back(x);
  Group n55 = Group::generate(11, in_m11);
  if (n55.order_u64() != 55) throw std::runtime_error("M11 Sylow-11 normalizer misfit");
  Group psl;
  bool found = false;
  m11.group.for_each_element([&](const Perm& p) {
    Group j = join(n55, {p});
    if (j.order_u64() == 660) {
      psl = j;
      found = true;
      return false;
    }
    return true;
  });
  if (!found) throw std::runtime_error("PSL(2,11) not found inside M11");
  auto [image, faithful] = coset_action(m11.group, psl);
  if (!faithful) throw std::runtime_error("M11 degree-12 action not faithful");
  Construction c;
  c.group = image;
  c.name = "atlas:M11/12";
  c.point_labeling = "cosets of a PSL(2,11) subgroup";
  c.expected.order = 7920ULL;
  check_order(c);
  return c;
}

}  // namespace

Construction atlas(const std::string& name) {
  auto it = atlas_table().find(name);
  if (it != atlas_table().end()) return atlas_from_entry(name, it->second);
  if (name == "M24/24") return m24_construction();
  if (name == "M23/23") return m23_construction();
  if (name == "M11/12") return m11_degree12();
  throw std::invalid_argument("unknown atlas name: " + name);
}

std::vector<std::string> atlas_names() {
  return {"M11/11", "M11/12", "M12/12", "M23/23", "M24/24"};
}

AssocRewreath assoc_rewreath(int a, int b, int c) {
  if (a < 2 || b < 2 || c < 2) throw std::invalid_argument("parameters must be > 1");
  BigUint total = power_big(a, static_cast<long long>(b) * c);
  if (total > 65535) throw budget_error("rewreath degree too large");
  int degree = static_cast<int>(total);

  Construction inner =
      wreath(Group::symmetric(a), Group::symmetric(b), paritylaws::WreathMode::product);
  Construction left =
      wreath(inner.group, Group::symmetric(c), paritylaws::WreathMode::product);
  left.name = "rewreath-left";

  // zeta : b x c -> bc, (i,j) -> j + i*c; relabel the imprimitive top group
  Construction top_imp = wreath(Group::symmetric(b), Group::symmetric(c),
                                paritylaws::WreathMode::imprimitive);
  std::vector<uint16_t> sigma(static_cast<size_t>(b) * c);
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < c; ++j) sigma[i + j * b] = static_cast<uint16_t>(j + i * c);
  Group top_relabelled = top_imp.group.conjugated_by(Perm(sigma));
  Construction right =
      wreath(Group::symmetric(a), top_relabelled, paritylaws::WreathMode::product);
  right.name = "rewreath-right";

  long long ab = 1;
  for (int i = 0; i < b; ++i) ab *= a;
  std::vector<uint16_t> psi_im(degree);
  for (int f = 0; f < degree; ++f) {
    std::vector<int> digits(static_cast<size_t>(b) * c);
    int v = f;
    for (int k = 0; k < b * c; ++k) {
      digits[k] = v % a;
      v /= a;
    }
    long long out = 0, mult = 1;
    for (int j = 0; j < c; ++j) {
      long long gj = 0, am = 1;
      for (int i = 0; i < b; ++i) {
        gj += digits[j + i * c] * am;
        am *= a;
      }
      out += gj * mult;
      mult *= ab;
    }
    psi_im[f] = static_cast<uint16_t>(out);
  }
  AssocRewreath out{std::move(left), std::move(right), Perm(psi_im)};
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

Construction named(Group g, const std::string& name, const std::string& labeling) {
  Construction c;
  c.group = std::move(g);
  c.name = name;
  c.point_labeling = labeling;
  return c;
}

}  // namespace

Construction parse_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '{')
    return named(group_from_json_text(spec), "json", "as supplied");
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad group spec: " + spec);
  std::string head = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  auto to_int = [](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty numeric field");
    return std::stoll(s);
  };
  if (head == "sym")
    return named(Group::symmetric(static_cast<int>(to_int(rest))), spec, "natural");
  if (head == "alt")
    return named(Group::alternating(static_cast<int>(to_int(rest))), spec, "natural");
  if (head == "cyc")
    return named(Group::cyclic(static_cast<int>(to_int(rest))), spec, "natural");
  if (head == "agl") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw std::invalid_argument("agl:n,q");
    Construction c = agl(static_cast<int>(to_int(parts[0])), to_int(parts[1]));
    c.name = spec;
    return c;
  }
  if (head == "proj") {
    auto parts = split(rest, ',');
    if (parts.size() != 3) throw std::invalid_argument("proj:d,q,flavor");
    ProjectiveFlavor fl;
    if (parts[2] == "PSL") fl = ProjectiveFlavor::PSL;
    else if (parts[2] == "PGL") fl = ProjectiveFlavor::PGL;
    else if (parts[2] == "PSigmaL") fl = ProjectiveFlavor::PSigmaL;
    else if (parts[2] == "PGammaL") fl = ProjectiveFlavor::PGammaL;
    else throw std::invalid_argument("unknown projective flavor: " + parts[2]);
    Construction c = projective(static_cast<int>(to_int(parts[0])), to_int(parts[1]), fl);
    c.name = spec;
    return c;
  }
  if (head == "sz") {
    auto parts = split(rest, ',');
    SuzukiAction act = SuzukiAction::ovoid;
    if (parts.size() == 2) {
      if (parts[1] != "pairs") throw std::invalid_argument("sz:q[,pairs]");
      act = SuzukiAction::pairs;
    } else if (parts.size() != 1) {
      throw std::invalid_argument("sz:q[,pairs]");
    }
    Construction c = suzuki(to_int(parts[0]), act);
    c.name = spec;
    return c;
  }
  if (head == "wr") {
    auto parts = split(rest, '/');
    if (parts.size() != 3) throw std::invalid_argument("wr:inner/outer/mode");
    Construction inner = parse_spec(parts[0]);
    Construction outer = parse_spec(parts[1]);
    paritylaws::WreathMode mode;
    if (parts[2] == "imp") mode = paritylaws::WreathMode::imprimitive;
    else if (parts[2] == "prod") mode = paritylaws::WreathMode::product;
    else throw std::invalid_argument("wreath mode must be imp or prod");
    Construction c = wreath(inner.group, outer.group, mode);
    c.name = spec;
    return c;
  }
  if (head == "hol") {
    Construction g = parse_spec(rest);
    Construction c = holomorph(g.group);
    c.name = spec;
    return c;
  }
  if (head == "ghol") {
    auto comma = rest.rfind(',');
    if (comma == std::string::npos) throw std::invalid_argument("ghol:spec,l");
    Construction t = parse_spec(rest.substr(0, comma));
    int l = static_cast<int>(to_int(rest.substr(comma + 1)));
    DiagonalGhol d = diagonal_ghol(t.group, l);
    d.construction.name = spec;
    return d.construction;
  }
  if (head == "atlas") return atlas(rest);
  if (head == "young") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw std::invalid_argument("young:n,p1+p2+...");
    std::vector<int> ps;
    for (const auto& s : split(parts[1], '+')) ps.push_back(static_cast<int>(to_int(s)));
    return named(young_stabilizer(static_cast<int>(to_int(parts[0])), ps), spec,
                 "consecutive ranges");
  }
  if (head == "eqpart" || head == "eqpart-even") {
    auto parts = split(rest, ',');
    if (parts.size() != 2) throw std::invalid_argument(head + ":n,m");
    int n = static_cast<int>(to_int(parts[0]));
    int m = static_cast<int>(to_int(parts[1]));
    Group s = equipartition_stabilizer(n, Equipartition::consecutive(n, m));
    if (head == "eqpart-even") s = s.even_part();
    return named(std::move(s), spec, "consecutive cells of size m");
  }
  throw std::invalid_argument("unknown group spec: " + spec);
}

}  // namespace grouplat
