#include "grouplat/lattice.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace grouplat {

namespace {

// ---------------------------------------------------------------------
// Packed permutations of degree <= 16 with a full prescribed base
// (0, 1, ..., n-1); the minimal-overgroup machinery lives on these.
// ---------------------------------------------------------------------

constexpr int kMaxDeg = 16;

struct SPerm {
  std::array<uint8_t, kMaxDeg> im;
};

SPerm s_identity(int n) {
  SPerm p{};
  for (int i = 0; i < n; ++i) p.im[i] = static_cast<uint8_t>(i);
  return p;
}

SPerm s_mul(const SPerm& a, const SPerm& b, int n) {
  SPerm out{};
  for (int i = 0; i < n; ++i) out.im[i] = b.im[a.im[i]];
  return out;
}

SPerm s_inv(const SPerm& a, int n) {
  SPerm out{};
  for (int i = 0; i < n; ++i) out.im[a.im[i]] = static_cast<uint8_t>(i);
  return out;
}

bool s_is_id(const SPerm& a, int n) {
  for (int i = 0; i < n; ++i)
    if (a.im[i] != i) return false;
  return true;
}

bool s_eq(const SPerm& a, const SPerm& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a.im[i] != b.im[i]) return false;
  return true;
}

uint64_t s_pack(const SPerm& a, int n) {
  uint64_t v = 0;
  for (int i = n - 1; i >= 0; --i) v = (v << 4) | a.im[i];
  return v;
}

SPerm from_perm(const Perm& p) {
  SPerm out{};
  for (int i = 0; i < p.degree(); ++i) out.im[i] = static_cast<uint8_t>(p[i]);
  return out;
}

Perm to_perm(const SPerm& p, int n) {
  std::vector<uint16_t> im(n);
  for (int i = 0; i < n; ++i) im[i] = p.im[i];
  return Perm(im);
}

/// Stabilizer chain with base (0, 1, ..., n-1).  Fixed-capacity storage
/// so join computations do not allocate.
struct SChain {
  int n = 0;
  std::array<uint16_t, kMaxDeg> orbit_mask{};
  std::array<std::array<SPerm, kMaxDeg>, kMaxDeg> trans;
  std::array<std::array<SPerm, kMaxDeg>, kMaxDeg> trans_inv;
  std::array<std::vector<SPerm>, kMaxDeg> gens;

  unsigned long long order() const {
    unsigned long long o = 1;
    for (int i = 0; i < n; ++i) o *= static_cast<unsigned>(__builtin_popcount(orbit_mask[i]));
    return o;
  }

  void rebuild_orbit(int lev) {
    orbit_mask[lev] = static_cast<uint16_t>(1u << lev);
    trans[lev][lev] = s_identity(n);
    trans_inv[lev][lev] = trans[lev][lev];
    std::array<uint8_t, kMaxDeg> queue;
    int qh = 0, qt = 0;
    queue[qt++] = static_cast<uint8_t>(lev);
    while (qh < qt) {
      int p = queue[qh++];
      for (const SPerm& gen : gens[lev]) {
        int q = gen.im[p];
        if (!(orbit_mask[lev] >> q & 1)) {
          orbit_mask[lev] |= static_cast<uint16_t>(1u << q);
          trans[lev][q] = s_mul(trans[lev][p], gen, n);
          trans_inv[lev][q] = s_inv(trans[lev][q], n);
          queue[qt++] = static_cast<uint8_t>(q);
        }
      }
    }
  }

  /// Residue of sifting g from `from`; `drop` = level where it stopped.
  SPerm sift(SPerm g, int from, int* drop) const {
    for (int i = from; i < n; ++i) {
      int p = g.im[i];
      if (!(orbit_mask[i] >> p & 1)) {
        *drop = i;
        return g;
      }
      g = s_mul(g, trans_inv[i][p], n);
    }
    *drop = n;
    return g;
  }

  bool contains(const SPerm& g) const {
    int drop;
    SPerm r = sift(g, 0, &drop);
    return drop == n && s_is_id(r, n);
  }

  void add_gen(int lev, const SPerm& g) {
    for (const SPerm& have : gens[lev])
      if (s_eq(have, g, n)) return;
    gens[lev].push_back(g);
  }

  void build(int degree, const SPerm* glist, int gcount) {
    n = degree;
    for (auto& v : gens) v.clear();
    for (int gi = 0; gi < gcount; ++gi) {
      const SPerm& g = glist[gi];
      if (s_is_id(g, n)) continue;
      for (int lev = 0; lev < n; ++lev) {
        add_gen(lev, g);
        if (g.im[lev] != lev) break;
      }
    }
    for (int lev = 0; lev < n; ++lev) rebuild_orbit(lev);
    int i = n - 1;
    while (i >= 0) {
      bool complete = true;
      uint16_t mask = orbit_mask[i];
      for (int p = 0; p < n && complete; ++p) {
        if (!(mask >> p & 1)) continue;
        for (size_t gi = 0; gi < gens[i].size(); ++gi) {
          const SPerm& g = gens[i][gi];
          SPerm schreier = s_mul(s_mul(trans[i][p], g, n), trans_inv[i][g.im[p]], n);
          if (s_is_id(schreier, n)) continue;
          int drop;
          SPerm residue = sift(schreier, i + 1, &drop);
          if (drop == n && s_is_id(residue, n)) continue;
          complete = false;
          if (drop == n) {
            // cannot happen with a full base
            throw std::runtime_error("full-base sift fell off the chain");
          }
          for (int k = i + 1; k <= drop; ++k) {
            add_gen(k, residue);
            rebuild_orbit(k);
          }
          i = drop;
          break;
        }
      }
      if (complete) --i;
    }
  }

  /// Lexicographically least element of the right coset (this)*g.
  SPerm min_coset_rep(SPerm g) const {
    for (int i = 0; i < n; ++i) {
      uint16_t mask = orbit_mask[i];
      int best = -1, bestimg = 999;
      for (int o = 0; o < n; ++o)
        if (mask >> o & 1)
          if (g.im[o] < bestimg) {
            bestimg = g.im[o];
            best = o;
          }
      if (best != i) g = s_mul(trans[i][best], g, n);
    }
    return g;
  }

  /// Least non-identity element; identity itself for the trivial chain.
  SPerm lexmin_nonidentity() const {
    int lev = -1;
    for (int i = 0; i < n; ++i)
      if (__builtin_popcount(orbit_mask[i]) > 1) {
        lev = i;
        break;
      }
    if (lev < 0) return s_identity(n);
    int target = -1;
    for (int o = 0; o < n; ++o)
      if ((orbit_mask[lev] >> o & 1) && o != lev) {
        target = o;
        break;
      }
    SPerm g = trans[lev][target];
    for (int i = lev + 1; i < n; ++i) {
      uint16_t mask = orbit_mask[i];
      int best = -1, bestimg = 999;
      for (int o = 0; o < n; ++o)
        if (mask >> o & 1)
          if (g.im[o] < bestimg) {
            bestimg = g.im[o];
            best = o;
          }
      if (best != i) g = s_mul(trans[i][best], g, n);
    }
    return g;
  }

  void all_elements(std::vector<SPerm>* out) const {
    out->clear();
    std::function<void(int, SPerm)> rec = [&](int lev, SPerm acc) {
      if (lev < 0) {
        out->push_back(acc);
        return;
      }
      for (int o = 0; o < n; ++o)
        if (orbit_mask[lev] >> o & 1) rec(lev - 1, s_mul(acc, trans[lev][o], n));
    };
    rec(n - 1, s_identity(n));
  }

  std::vector<SPerm> strong_gens() const {
    std::vector<SPerm> out;
    for (int lev = 0; lev < n; ++lev)
      for (const SPerm& g : gens[lev]) {
        bool dup = false;
        for (const SPerm& e : out)
          if (s_eq(e, g, n)) dup = true;
        if (!dup) out.push_back(g);
      }
    return out;
  }
};

struct SGroup {
  SChain chain;
  std::vector<SPerm> gens;
  unsigned long long order = 1;

  void build(int n, std::vector<SPerm> gs) {
    gens = std::move(gs);
    chain.build(n, gens.data(), static_cast<int>(gens.size()));
    order = chain.order();
  }
};

SGroup sgroup_of(const Group& g) {
  if (g.degree() > kMaxDeg)
    throw budget_error("interval machinery requires degree <= 16, got " +
                       std::to_string(g.degree()));
  SGroup s;
  std::vector<SPerm> gens;
  for (const Perm& p : g.generators()) gens.push_back(from_perm(p));
  s.build(g.degree(), std::move(gens));
  return s;
}

Group group_of(const SGroup& s, int n) {
  std::vector<Perm> gens;
  for (const SPerm& p : s.chain.strong_gens()) gens.push_back(to_perm(p, n));
  return Group::generate(n, gens);
}

bool s_subgroup(const SGroup& a, const SGroup& b, int n) {
  for (const SPerm& g : a.chain.strong_gens())
    if (!b.chain.contains(g)) return false;
  return true;
}

/// join of K with extra elements, as an SGroup
SGroup s_join(const SGroup& k, const std::vector<SPerm>& extra, int n) {
  SGroup out;
  std::vector<SPerm> gens = k.chain.strong_gens();
  for (const SPerm& e : extra) gens.push_back(e);
  out.build(n, std::move(gens));
  return out;
}

bool is_prime_ll(unsigned long long v) {
  if (v < 2) return false;
  for (unsigned long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Simple open-addressing set for packed coset keys.
struct U64Set {
  std::vector<uint64_t> slots;
  size_t used = 0;
  static constexpr uint64_t kEmpty = ~0ULL;

  explicit U64Set(size_t expect) {
    size_t cap = 64;
    while (cap < expect * 2) cap <<= 1;
    slots.assign(cap, kEmpty);
  }
  bool insert(uint64_t v) {
    if (used * 2 >= slots.size()) grow();
    size_t mask = slots.size() - 1;
    size_t i = (v * 0x9e3779b97f4a7c15ULL) & mask;
    while (slots[i] != kEmpty) {
      if (slots[i] == v) return false;
      i = (i + 1) & mask;
    }
    slots[i] = v;
    ++used;
    return true;
  }
  void grow() {
    std::vector<uint64_t> old = std::move(slots);
    slots.assign(old.size() * 2, kEmpty);
    used = 0;
    for (uint64_t v : old)
      if (v != kEmpty) insert(v);
  }
};

/// Minimal overgroups by sweeping right-coset representatives of K in G;
/// exhaustive because any cover M of K equals <K, r> for every coset
/// representative r of a coset inside M.
std::vector<SGroup> sweep_cosets(const SGroup& k, const SGroup& g, int n,
                                 const std::vector<Perm>& ggens) {
  std::vector<SPerm> sgens;
  for (const Perm& p : ggens) sgens.push_back(from_perm(p));

  std::vector<SGroup> found;
  auto note_join = [&](const SPerm& r) {
    for (const SGroup& j : found)
      if (j.chain.contains(r)) {
        if (is_prime_ll(j.order / k.order)) return;  // join provably equals j
      }
    SGroup j = s_join(k, {r}, n);
    for (const SGroup& have : found)
      if (have.order == j.order && s_subgroup(j, have, n)) return;
    found.push_back(std::move(j));
  };

  U64Set seen(1024);
  std::deque<SPerm> work;
  SPerm start = k.chain.min_coset_rep(s_identity(n));
  seen.insert(s_pack(start, n));
  work.push_back(start);
  while (!work.empty()) {
    SPerm r = work.front();
    work.pop_front();
    if (!k.chain.contains(r)) note_join(r);
    for (const SPerm& gen : sgens) {
      SPerm next = k.chain.min_coset_rep(s_mul(r, gen, n));
      if (seen.insert(s_pack(next, n))) work.push_back(next);
    }
  }
  return found;
}

/// Elements of the normalizer of <cycle> in the symmetric group on n
/// points, where the cycle moves all n points: the affine maps
/// x -> a*x + b over Z_n read along the cycle.
std::vector<SPerm> full_cycle_normalizer_elements(const SPerm& cycle, int n) {
  std::array<int, kMaxDeg> along{};
  int pt = 0;
  for (int i = 0; i < n; ++i) {
    along[i] = pt;
    pt = cycle.im[pt];
  }
  std::vector<SPerm> out;
  for (int a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    for (int b = 0; b < n; ++b) {
      SPerm s{};
      for (int i = 0; i < n; ++i) s.im[along[i]] = static_cast<uint8_t>(along[(a * i + b) % n]);
      out.push_back(s);
    }
  }
  return out;
}

/// Minimal overgroups of K in a large ambient G via the two-case split:
/// covers normalizing K live inside N_G(K); the rest are <K, K^r> with r
/// ranging over N_G(K)-double-coset representatives, closed under
/// N_G(K)-conjugation.  Double cosets are enumerated as N-orbits of
/// right N-cosets so that no coset is expanded twice.
std::vector<SGroup> sweep_conjugates(const SGroup& k, const SGroup& g, int n,
                                     const std::vector<Perm>& ggens) {
  unsigned long long korder = k.order;
  if (!is_prime_ll(static_cast<unsigned long long>(n)) || korder % n != 0 ||
      korder % (static_cast<unsigned long long>(n) * n) == 0)
    throw budget_error(
        "minimal overgroups in a large ambient need a degree-length prime cycle in K");
  SPerm cyc{};
  bool found_cyc = false;
  {
    std::vector<SPerm> kelems;
    if (k.order > 20000) throw budget_error("K too large to scan for a prime cycle");
    k.chain.all_elements(&kelems);
    for (const SPerm& e : kelems) {
      bool fixed_free = true;
      for (int i = 0; i < n; ++i)
        if (e.im[i] == i) fixed_free = false;
      if (!fixed_free) continue;
      SPerm acc = e;
      int ord = 1;
      while (!s_is_id(acc, n)) {
        acc = s_mul(acc, e, n);
        ++ord;
      }
      if (ord == n) {
        cyc = e;
        found_cyc = true;
        break;
      }
    }
  }
  if (!found_cyc) throw budget_error("no full prime cycle found in K");

  std::vector<SPerm> nsym = full_cycle_normalizer_elements(cyc, n);
  std::vector<SPerm> ngp;
  for (const SPerm& x : nsym)
    if (g.chain.contains(x)) ngp.push_back(x);
  // Frattini: N_G(K) = K * N_{N_G(P)}(K)
  std::vector<SPerm> normalizing;
  std::vector<SPerm> kgens = k.chain.strong_gens();
  for (const SPerm& x : ngp) {
    SPerm xi = s_inv(x, n);
    bool norm = true;
    for (const SPerm& kg : kgens)
      if (!k.chain.contains(s_mul(s_mul(xi, kg, n), x, n))) {
        norm = false;
        break;
      }
    if (norm) normalizing.push_back(x);
  }

  std::vector<SGroup> found;
  auto consider = [&](SGroup j) {
    if (j.order == k.order) return;
    for (const SGroup& have : found)
      if (have.order == j.order && s_subgroup(j, have, n)) return;
    found.push_back(std::move(j));
  };

  // case A: covers normalizing K arise as <K, x>, x in N_{N_G(P)}(K)
  for (const SPerm& x : normalizing)
    if (!k.chain.contains(x)) consider(s_join(k, {x}, n));

  SGroup ngk;
  {
    std::vector<SPerm> ngens = kgens;
    for (const SPerm& x : normalizing) ngens.push_back(x);
    ngk.build(n, std::move(ngens));
  }
  // thin generating set of N_G(K) for the orbit walks
  std::vector<SPerm> nthin;
  {
    SGroup acc;
    acc.build(n, {});
    std::vector<SPerm> pool = kgens;
    for (const SPerm& x : normalizing) pool.push_back(x);
    for (const SPerm& x : pool) {
      if (acc.order == ngk.order) break;
      if (!acc.chain.contains(x)) {
        nthin.push_back(x);
        acc = s_join(acc, {x}, n);
      }
    }
  }

  std::vector<SPerm> sgens;
  for (const Perm& pgen : ggens) sgens.push_back(from_perm(pgen));

  // enumerate double cosets as N-orbits of right N-cosets; `queued`
  // dedups queue entries, `walked` marks cosets already covered by a
  // completed orbit walk so no double coset is processed twice
  U64Set queued(1 << 16);
  U64Set walked(1 << 16);
  std::deque<SPerm> dc_reps;
  std::vector<SGroup> case_b;
  auto intake = [&](const SPerm& r0) {
    SPerm cr = ngk.chain.min_coset_rep(r0);
    if (!queued.insert(s_pack(cr, n))) return;
    dc_reps.push_back(cr);
  };
  intake(s_identity(n));
  while (!dc_reps.empty()) {
    SPerm rep = dc_reps.front();
    dc_reps.pop_front();
    if (!walked.insert(s_pack(rep, n))) continue;  // coset already covered
    // candidate <K, K^rep> unless rep normalizes K
    {
      SPerm ri = s_inv(rep, n);
      std::vector<SPerm> conj;
      bool normalizes = true;
      for (const SPerm& kg : kgens) {
        SPerm c = s_mul(s_mul(ri, kg, n), rep, n);
        if (!k.chain.contains(c)) normalizes = false;
        conj.push_back(c);
      }
      if (!normalizes) {
        SGroup j = s_join(k, conj, n);
        bool fresh = true;
        for (const SGroup& have : case_b)
          if (have.order == j.order && s_subgroup(j, have, n)) {
            fresh = false;
            break;
          }
        if (fresh) case_b.push_back(std::move(j));
      }
    }
    // walk the whole N-orbit of right cosets inside this double coset,
    // expanding across G-generators from every member
    std::deque<SPerm> orbit{rep};
    while (!orbit.empty()) {
      SPerm x = orbit.front();
      orbit.pop_front();
      for (const SPerm& ng : nthin) {
        SPerm y = ngk.chain.min_coset_rep(s_mul(x, ng, n));
        if (walked.insert(s_pack(y, n))) orbit.push_back(y);
      }
      for (const SPerm& gg : sgens) intake(s_mul(x, gg, n));
    }
  }

  // close case-B candidates under N_G(K)-conjugation
  for (size_t i = 0; i < case_b.size(); ++i) {
    for (const SPerm& x : nthin) {
      SPerm xi = s_inv(x, n);
      std::vector<SPerm> cg;
      for (const SPerm& jg : case_b[i].chain.strong_gens())
        cg.push_back(s_mul(s_mul(xi, jg, n), x, n));
      SGroup conj;
      conj.build(n, std::move(cg));
      bool fresh = true;
      for (const SGroup& have : case_b)
        if (have.order == conj.order && s_subgroup(conj, have, n)) {
          fresh = false;
          break;
        }
      if (fresh) case_b.push_back(std::move(conj));
    }
  }
  for (SGroup& j : case_b) consider(std::move(j));
  return found;
}

std::vector<SGroup> minimal_filter(std::vector<SGroup> cands, int n) {
  std::vector<bool> keep(cands.size(), true);
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t j = 0; j < cands.size() && keep[i]; ++j) {
      if (i == j) continue;
      if (cands[j].order < cands[i].order && s_subgroup(cands[j], cands[i], n)) keep[i] = false;
    }
  std::vector<SGroup> out;
  for (size_t i = 0; i < cands.size(); ++i)
    if (keep[i]) out.push_back(std::move(cands[i]));
  return out;
}

}  // namespace

std::vector<Group> minimal_overgroups(const Group& k, const Group& g,
                                      const OvergroupOptions& opt) {
  if (k.degree() != g.degree() || !k.is_subgroup_of(g))
    throw std::invalid_argument("minimal_overgroups requires K <= G");
  if (g.order() > static_cast<BigUint>(opt.element_budget) && opt.candidate_gens.empty())
    throw budget_error("overgroup search refused: |G| = " + big_to_string(g.order()) +
                       " exceeds the element budget and no candidate generators given");
  int n = g.degree();
  if (g.order() == k.order()) return {};
  BigUint index = g.order() / k.order();
  if (index <= 3) return {g};

  if (!opt.candidate_gens.empty()) {
    // hint mode: joins with supplied candidates only
    std::vector<Group> cands;
    for (const Perm& h : opt.candidate_gens) {
      if (k.contains(h)) continue;
      Group j = join(k, {h});
      bool fresh = true;
      for (const Group& have : cands)
        if (have.same_group(j)) fresh = false;
      if (fresh) cands.push_back(std::move(j));
    }
    std::vector<Group> out;
    for (size_t i = 0; i < cands.size(); ++i) {
      bool minimal = true;
      for (size_t j = 0; j < cands.size(); ++j)
        if (i != j && cands[j].order() < cands[i].order() &&
            cands[j].is_subgroup_of(cands[i]))
          minimal = false;
      if (minimal) out.push_back(cands[i]);
    }
    return out;
  }

  SGroup sk = sgroup_of(k);
  SGroup sg = sgroup_of(g);
  std::vector<SGroup> cands;
  if (g.order() <= 1000000)
    cands = sweep_cosets(sk, sg, n, g.generators());
  else
    cands = sweep_conjugates(sk, sg, n, g.generators());
  cands = minimal_filter(std::move(cands), n);
  std::vector<Group> out;
  for (const SGroup& c : cands) out.push_back(group_of(c, n));
  std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
    return a.order() < b.order();
  });
  return out;
}

namespace {

struct NodeKey {
  unsigned long long order;
  std::vector<int> orbit_sig;
  uint64_t lexmin;

  bool operator<(const NodeKey& o) const {
    return std::tie(order, orbit_sig, lexmin) < std::tie(o.order, o.orbit_sig, o.lexmin);
  }
};

NodeKey node_key(const Group& g) {
  NodeKey k;
  k.order = g.order_u64();
  std::vector<int> sig;
  {
    // orbit sizes, sorted
    int n = g.degree();
    std::vector<int> which(n, -1);
    for (int s = 0; s < n; ++s) {
      if (which[s] >= 0) continue;
      std::vector<int> orb{s};
      which[s] = s;
      for (size_t i = 0; i < orb.size(); ++i)
        for (const Perm& gen : g.generators()) {
          int q = gen[orb[i]];
          if (which[q] < 0) {
            which[q] = s;
            orb.push_back(q);
          }
        }
      sig.push_back(static_cast<int>(orb.size()));
    }
    std::sort(sig.begin(), sig.end());
  }
  k.orbit_sig = sig;
  if (g.degree() <= kMaxDeg) {
    SGroup s = sgroup_of(g);
    k.lexmin = s_pack(s.chain.lexmin_nonidentity(), g.degree());
  } else {
    k.lexmin = 0;
  }
  return k;
}

}  // namespace

std::vector<Group> overgroups(const Group& h, const Group& g, const OvergroupOptions& opt) {
  Interval iv = interval(h, g, opt);
  return iv.nodes;
}

Interval interval(const Group& h, const Group& g, const OvergroupOptions& opt) {
  if (h.degree() != g.degree() || !h.is_subgroup_of(g))
    throw std::invalid_argument("interval requires H <= G");
  std::vector<Group> nodes{h};
  std::vector<std::vector<int>> covers(1);
  for (size_t i = 0; i < nodes.size(); ++i) {
    Group current = nodes[i];
    std::vector<Group> ups = minimal_overgroups(current, g, opt);
    for (Group& up : ups) {
      int idx = -1;
      for (size_t j = 0; j < nodes.size(); ++j)
        if (nodes[j].same_group(up)) {
          idx = static_cast<int>(j);
          break;
        }
      if (idx < 0) {
        idx = static_cast<int>(nodes.size());
        nodes.push_back(up);
        covers.emplace_back();
      }
      covers[i].push_back(idx);
    }
  }
  // canonical order: (order, orbit signature, least non-identity element)
  std::vector<int> perm_idx(nodes.size());
  std::iota(perm_idx.begin(), perm_idx.end(), 0);
  std::vector<NodeKey> keys;
  keys.reserve(nodes.size());
  for (const Group& nd : nodes) keys.push_back(node_key(nd));
  std::stable_sort(perm_idx.begin(), perm_idx.end(),
                   [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> where(nodes.size());
  for (size_t i = 0; i < perm_idx.size(); ++i) where[perm_idx[i]] = static_cast<int>(i);
  Interval iv;
  iv.nodes.reserve(nodes.size());
  for (int old : perm_idx) iv.nodes.push_back(std::move(nodes[old]));
  for (size_t i = 0; i < covers.size(); ++i)
    for (int j : covers[i]) iv.hasse.push_back({where[i], where[j]});
  std::sort(iv.hasse.begin(), iv.hasse.end());
  iv.hasse.erase(std::unique(iv.hasse.begin(), iv.hasse.end()), iv.hasse.end());
  return iv;
}

Interval interval_by_oracle(const Group& h, const Group& g, unsigned long long order_budget) {
  if (h.degree() != g.degree() || !h.is_subgroup_of(g))
    throw std::invalid_argument("interval requires H <= G");
  std::vector<Group> between;
  for (Group& s : all_subgroups(g, order_budget))
    if (h.is_subgroup_of(s)) between.push_back(std::move(s));
  std::vector<NodeKey> keys;
  for (const Group& nd : between) keys.push_back(node_key(nd));
  std::vector<int> idx(between.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  Interval iv;
  for (int i : idx) iv.nodes.push_back(std::move(between[i]));
  // covering edges from the inclusion order
  size_t m = iv.nodes.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      leq[i][j] = iv.nodes[i].is_subgroup_of(iv.nodes[j]);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covering = true;
      for (size_t t = 0; t < m && covering; ++t)
        if (t != i && t != j && leq[i][t] && leq[t][j]) covering = false;
      if (covering) iv.hasse.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  std::sort(iv.hasse.begin(), iv.hasse.end());
  return iv;
}

std::vector<std::vector<bool>> Interval::leq_matrix() const {
  size_t m = nodes.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) leq[i][j] = nodes[i].is_subgroup_of(nodes[j]);
  return leq;
}

std::string Shape::to_string() const {
  switch (tag) {
    case Tag::chain: return "chain(" + std::to_string(parameter) + ")";
    case Tag::mr: return "Mr(" + std::to_string(parameter) + ")";
    default: return "general";
  }
}

Shape classify(const Interval& iv) {
  size_t m = iv.nodes.size();
  auto leq = iv.leq_matrix();
  bool total = true;
  for (size_t i = 0; i < m && total; ++i)
    for (size_t j = 0; j < m && total; ++j)
      if (!leq[i][j] && !leq[j][i]) total = false;
  if (total) return Shape::chain(static_cast<int>(m) - 1);
  // Mr: bottom, top, middles pairwise incomparable
  bool mr = true;
  for (size_t i = 1; i + 1 < m && mr; ++i)
    for (size_t j = 1; j + 1 < m && mr; ++j)
      if (i != j && (leq[i][j] || leq[j][i])) mr = false;
  for (size_t i = 1; i + 1 < m && mr; ++i)
    if (!leq[0][i] || !leq[i][m - 1]) mr = false;
  if (mr) return Shape::mr(static_cast<int>(m) - 2);
  return Shape::general();
}

SecondMaximalReport is_second_maximal(const Group& h, const Group& u,
                                      const OvergroupOptions& opt) {
  SecondMaximalReport rep;
  if (h.same_group(u)) {
    rep.second_maximal = false;
    rep.reason = "equal to the ambient group";
    return rep;
  }
  Interval iv = interval(h, u, opt);
  Shape s = classify(iv);
  if (s == Shape::chain(1)) {
    rep.second_maximal = false;
    rep.reason = "maximal";
    return rep;
  }
  bool ok = (s.tag == Shape::Tag::mr) || s == Shape::chain(2);
  rep.second_maximal = ok;
  rep.reason = ok ? "interval is Mr(" + std::to_string(static_cast<int>(iv.nodes.size()) - 2) + ")"
                  : "interval shape " + s.to_string();
  if (ok)
    for (size_t i = 1; i + 1 < iv.nodes.size(); ++i) rep.witnesses.push_back(iv.nodes[i]);
  return rep;
}

namespace {

std::vector<Perm> sorted_elements(const Group& g, unsigned long long budget) {
  auto e = g.elements(budget);
  std::sort(e.begin(), e.end());
  return e;
}

/// BFS over ambient-conjugates of K; calls visit once per conjugate.
long long conjugate_orbit(const Group& k, const Group& ambient, long long budget,
                          const std::function<void(const Group&)>& visit) {
  std::set<std::vector<Perm>> seen;
  std::deque<Group> work;
  seen.insert(sorted_elements(k, 100000));
  work.push_back(k);
  long long count = 0;
  while (!work.empty()) {
    Group cur = std::move(work.front());
    work.pop_front();
    ++count;
    if (count > budget) throw budget_error("conjugate enumeration exceeded the budget");
    if (visit) visit(cur);
    for (const Perm& g : ambient.generators()) {
      Group conj = cur.conjugated_by(g);
      auto key = sorted_elements(conj, 100000);
      if (seen.insert(std::move(key)).second) work.push_back(std::move(conj));
    }
  }
  return count;
}

}  // namespace

long long conjugate_count(const Group& k, const Group& ambient, long long conjugate_budget) {
  return conjugate_orbit(k, ambient, conjugate_budget, nullptr);
}

long long hm(const Group& k, const Group& l, const Group& ambient, long long conjugate_budget) {
  if (k.degree() != ambient.degree() || l.degree() != ambient.degree())
    throw std::invalid_argument("hm requires subgroups of the ambient degree");
  long long count = 0;
  conjugate_orbit(k, ambient, conjugate_budget, [&](const Group& m) {
    if (m.is_subgroup_of(l) || l.is_subgroup_of(m)) ++count;
  });
  return count;
}

bool palffy_check(const Group& k, const Group& l, const Group& ambient) {
  long long idx_nk = conjugate_count(k, ambient);  // |G : N(K)|
  long long idx_nl = conjugate_count(l, ambient);
  long long hm_kl = hm(k, l, ambient);
  long long hm_lk = hm(l, k, ambient);
  return static_cast<long long>(idx_nl) * hm_kl == static_cast<long long>(idx_nk) * hm_lk;
}

long long palffy_count_overgroups(BigUint g_order, BigUint h_order, long long n_h_index,
                                  long long n_g_index, long long hm_h_g) {
  if (h_order == 0 || g_order % h_order != 0)
    throw std::invalid_argument("H order must divide G order");
  BigUint index = g_order / h_order;
  BigUint num = static_cast<BigUint>(n_h_index) * static_cast<BigUint>(hm_h_g);
  BigUint den = static_cast<BigUint>(n_g_index) * index;
  if (den == 0 || num % den != 0)
    throw std::runtime_error("Palffy count is not integral: inconsistent ingredients");
  return static_cast<long long>(num / den);
}

long long p_part_factorial(long long p, long long n) {
  if (p < 2 || !is_prime_ll(static_cast<unsigned long long>(p)))
    throw std::invalid_argument("p must be prime");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  long long total = 0;
  long long pi = 1;  // p^i
  long long geom = 0;  // (p^i - 1)/(p - 1)
  while (pi <= n) {
    geom = geom * p + 1;  // now (p^(i+1)-1)/(p-1) for the digit at p^(i+1)... shifted below
    pi *= p;
    long long digit = (n / pi) % p;
    total += digit * geom;
  }
  // the loop above accumulates digits of p^1, p^2, ...: digit a_i times (p^i-1)/(p-1)
  return total;
}

bool poset_isomorphic(const std::vector<std::vector<bool>>& leq1,
                      const std::vector<std::vector<bool>>& leq2) {
  size_t n = leq1.size();
  if (leq2.size() != n) return false;
  if (n > 64) throw budget_error("poset isomorphism limited to 64 nodes");
  // invariant: (number below, number above) per node
  auto profile = [](const std::vector<std::vector<bool>>& leq) {
    size_t n2 = leq.size();
    std::vector<std::pair<int, int>> prof(n2, {0, 0});
    for (size_t i = 0; i < n2; ++i)
      for (size_t j = 0; j < n2; ++j) {
        if (leq[j][i]) ++prof[i].first;
        if (leq[i][j]) ++prof[i].second;
      }
    return prof;
  };
  auto p1 = profile(leq1);
  auto p2 = profile(leq2);
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> rec = [&](size_t x) -> bool {
    if (x == n) return true;
    for (size_t y = 0; y < n; ++y) {
      if (used[y] || p1[x] != p2[y]) continue;
      bool ok = true;
      for (size_t xp = 0; xp < x && ok; ++xp)
        if (leq1[xp][x] != leq2[img[xp]][y] || leq1[x][xp] != leq2[y][img[xp]]) ok = false;
      if (!ok) continue;
      img[x] = static_cast<int>(y);
      used[y] = true;
      if (rec(x + 1)) return true;
      used[y] = false;
      img[x] = -1;
    }
    return false;
  };
  return rec(0);
}

bool lattice_isomorphic(const Interval& a, const Interval& b) {
  return poset_isomorphic(a.leq_matrix(), b.leq_matrix());
}

std::vector<std::vector<bool>> chain_poset(int covering_steps) {
  int n = covering_steps + 1;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return leq;
}

std::vector<std::vector<bool>> mr_poset(int r) {
  int n = r + 2;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (int i = 0; i < n; ++i) {
    leq[0][i] = true;
    leq[i][n - 1] = true;
  }
  return leq;
}

std::vector<std::vector<bool>> vertical_sum(const std::vector<std::vector<bool>>& a,
                                            const std::vector<std::vector<bool>>& b) {
  // glue max(a) to min(b): nodes of a, then nodes of b except its bottom
  size_t na = a.size(), nb = b.size();
  size_t n = na + nb - 1;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j) leq[i][j] = a[i][j];
  for (size_t i = 1; i < nb; ++i)
    for (size_t j = 1; j < nb; ++j) leq[na - 1 + i][na - 1 + j] = b[i][j];
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 1; j < nb; ++j) leq[i][na - 1 + j] = true;
  return leq;
}

std::string interval_to_dot(const Interval& iv) {
  std::ostringstream os;
  os << "digraph {\n";
  for (size_t i = 0; i < iv.nodes.size(); ++i)
    os << "  n" << i << " [label=\"order=" << big_to_string(iv.nodes[i].order()) << "\"];\n";
  for (auto [i, j] : iv.hasse) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string interval_to_json(const Interval& iv) {
  Shape s = classify(iv);
  std::ostringstream os;
  os << "{\"bottom\":0,\"top\":" << iv.nodes.size() - 1 << ",\"nodes\":[";
  for (size_t i = 0; i < iv.nodes.size(); ++i) {
    if (i) os << ",";
    os << "{\"order\":" << big_to_string(iv.nodes[i].order()) << ",\"index\":" << i << "}";
  }
  os << "],\"hasse\":[";
  for (size_t e = 0; e < iv.hasse.size(); ++e) {
    if (e) os << ",";
    os << "[" << iv.hasse[e].first << "," << iv.hasse[e].second << "]";
  }
  os << "],\"shape\":{\"tag\":\"";
  switch (s.tag) {
    case Shape::Tag::chain: os << "chain"; break;
    case Shape::Tag::mr: os << "Mr"; break;
    default: os << "general";
  }
  os << "\",\"r\":" << s.parameter << "}}";
  return os.str();
}

}  // namespace grouplat
