#include "grouplat/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "grouplat/factory.hpp"
#include "grouplat/lattice.hpp"
#include "grouplat/product.hpp"

namespace grouplat {

bool VerificationReport::ok() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP")
       << "] " << c.id << ": " << c.description << " (" << c.anchor << ")";
    if (!c.measured.empty()) os << " -- " << c.measured;
    if (c.status != "pass" && c.status != "fail") os << " [" << c.status << "]";
    os << "\n";
  }
  os << (ok() ? "all checks passed" : "FAILURES PRESENT") << "\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  auto esc = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out;
  };
  std::ostringstream os;
  os << "{\"suite\":\"" << esc(suite) << "\",\"checks\":[";
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i) os << ",";
    os << "{\"id\":\"" << esc(c.id) << "\",\"description\":\"" << esc(c.description)
       << "\",\"anchor\":\"" << esc(c.anchor) << "\",\"status\":\"" << esc(c.status)
       << "\",\"measured\":\"" << esc(c.measured) << "\"}";
  }
  os << "],\"exit\":" << exit_code() << "}";
  return os.str();
}

namespace {

struct Suite {
  VerificationReport report;

  void check(const std::string& id, const std::string& description,
             const std::string& anchor, bool pass, const std::string& measured = "") {
    report.checks.push_back({id, description, anchor, pass ? "pass" : "fail", measured});
  }
  void skip(const std::string& id, const std::string& description,
            const std::string& anchor, const std::string& reason,
            const std::string& measured = "") {
    report.checks.push_back({id, description, anchor, "skipped(" + reason + ")", measured});
  }
  void run(const std::string& id, const std::string& description,
           const std::string& anchor, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
      auto [ok, measured] = fn();
      check(id, description, anchor, ok, measured);
    } catch (const std::exception& e) {
      check(id, description, anchor, false, std::string("exception: ") + e.what());
    }
  }
};

std::string u64s(unsigned long long v) { return std::to_string(v); }

Perm diagonal_image(const Perm& s, int l) {
  int n = s.degree();
  long long total = 1;
  for (int i = 0; i < l; ++i) total *= n;
  if (total > 65535) throw budget_error("diagonal action too large");
  std::vector<uint16_t> im(total);
  for (long long pt = 0; pt < total; ++pt) {
    long long v = pt, out = 0, mult = 1;
    for (int i = 0; i < l; ++i) {
      out += static_cast<long long>(s[v % n]) * mult;
      v /= n;
      mult *= n;
    }
    im[pt] = static_cast<uint16_t>(out);
  }
  return Perm(im);
}

Perm subsets_image(const Perm& s, int k) {
  Group g = Group::generate(s.degree(), {s});
  Group image = subsets_action(g, k);
  return image.generators().at(0);
}

// ---------------------------------------------------------------- parity

VerificationReport suite_parity() {
  Suite s;
  s.report.suite = "parity";
  using paritylaws::WreathElement;
  using paritylaws::WreathMode;

  s.run("diagonal-law", "diagonal image parity over n <= 5, l <= 3", "Prop 3.5.1", [&] {
    int tested = 0;
    for (int n = 2; n <= 5; ++n)
      for (int l = 2; l <= 3; ++l) {
        std::vector<Perm> samples{Perm::parse("(0 1)", n)};
        if (n >= 3) samples.push_back(Perm::parse("(0 1 2)", n));
        if (n >= 4) samples.push_back(Perm::parse("(0 1 2 3)", n));
        for (const Perm& p : samples) {
          int law = paritylaws::diagonal_parity_law(n, l, parity(p));
          if (parity(diagonal_image(p, l)) != law)
            return std::make_pair(false, "mismatch at n=" + u64s(n) + " l=" + u64s(l));
          ++tested;
        }
      }
    return std::make_pair(true, u64s(tested) + " witnesses");
  });

  s.run("powerset-law", "subset-action parity for n <= 7", "Prop 3.6.1", [&] {
    int tested = 0;
    for (int n = 2; n <= 7; ++n)
      for (int l = 1; l < n; ++l) {
        std::vector<Perm> samples{Perm::parse("(0 1)", n)};
        if (n >= 3) samples.push_back(Perm::parse("(0 1 2)", n));
        if (n >= 5) samples.push_back(Perm::parse("(0 1 2 3 4)", n));
        for (const Perm& p : samples) {
          int law = paritylaws::powerset_parity_law(n, l, parity(p));
          if (parity(subsets_image(p, l)) != law)
            return std::make_pair(false, "mismatch at n=" + u64s(n) + " l=" + u64s(l));
          ++tested;
        }
      }
    return std::make_pair(true, u64s(tested) + " witnesses");
  });

  s.run("frobenius-law", "Frobenius parity for all prime powers up to 2048", "Thm 3.7.2", [&] {
    int tested = 0;
    for (long long q = 4; q <= 2048; ++q) {
      long long p;
      int f;
      if (!prime_power(q, &p, &f) || f < 2) continue;
      Field fld(p, f);
      int par = parity(frobenius_perm(fld));
      if ((par == 0) != paritylaws::frobenius_even(p, f))
        return std::make_pair(false, "mismatch at q=" + u64s(q));
      ++tested;
    }
    return std::make_pair(true, u64s(tested) + " fields");
  });

  s.run("frobenius-fixpoints", "Fix(frobenius^d) = p^gcd(d,f)", "field automorphisms", [&] {
    for (auto [p, f] : std::vector<std::pair<long long, int>>{{2, 6}, {3, 4}, {5, 3}, {7, 2}}) {
      Field fld(p, f);
      Perm fr = frobenius_perm(fld);
      Perm pw = fr;
      for (int d = 1; d <= 2 * f; ++d) {
        long long expect = 1;
        for (int i = 0; i < std::gcd(static_cast<long long>(d), static_cast<long long>(f)); ++i)
          expect *= p;
        if (pw.fixed_points() != expect)
          return std::make_pair(false, "mismatch at p=" + u64s(p) + " d=" + u64s(d));
        pw = pw * fr;
      }
    }
    return std::make_pair(true, std::string("4 fields, d up to 2f"));
  });

  s.run("affine-law", "AGL(n,q) generator parities for q^n <= 512", "Prop 3.8.1", [&] {
    int tested = 0;
    for (long long q = 2; q <= 512; ++q) {
      long long p;
      int f;
      if (!prime_power(q, &p, &f)) continue;
      for (int n = 1;; ++n) {
        long long deg = 1;
        bool над = false;
        for (int i = 0; i < n; ++i) {
          deg *= q;
          if (deg > 512) { над = true; break; }
        }
        if (над) break;
        bool all_even = true;
        for (const Perm& g : agl_generators(n, q))
          if (parity(g) == 1) all_even = false;
        if (all_even != paritylaws::affine_even(n, q))
          return std::make_pair(false, "mismatch at n=" + u64s(n) + " q=" + u64s(q));
        ++tested;
      }
    }
    return std::make_pair(true, u64s(tested) + " affine groups");
  });

  s.run("projective-pgl-law", "PGL parity for degrees <= 400", "Prop 3.9.3", [&] {
    int tested = 0;
    for (long long q = 2; q <= 399; ++q) {
      long long p;
      int f;
      if (!prime_power(q, &p, &f)) continue;
      for (int d = 2;; ++d) {
        long long deg = 0, qq = 1;
        for (int i = 0; i < d; ++i) {
          deg += qq;
          qq *= q;
        }
        if (deg > 400) break;
        bool all_even = true;
        for (const Perm& g : projective_generators(d, q, ProjectiveFlavor::PGL))
          if (parity(g) == 1) all_even = false;
        if (all_even != (paritylaws::projective_parity_pgl(d, q) == 0))
          return std::make_pair(false, "mismatch at d=" + u64s(d) + " q=" + u64s(q));
        ++tested;
      }
    }
    return std::make_pair(true, u64s(tested) + " projective groups");
  });

  s.run("projective-fieldaut-law", "field automorphism parity on PG_d(q)", "Prop 3.9.4", [&] {
    int tested = 0;
    for (long long q : {4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 128}) {
      long long p;
      int f;
      prime_power(q, &p, &f);
      for (int d = 2;; ++d) {
        long long deg = 0, qq = 1;
        for (int i = 0; i < d; ++i) {
          deg += qq;
          qq *= q;
        }
        if (deg > 400) break;
        Field fld(p, f);
        for (int k = 1; k < f; ++k) {
          int par_alpha = parity(field_automorphism_perm(fld, k));
          int law = paritylaws::projective_parity_fieldaut(d, q, par_alpha);
          if (parity(projective_field_aut(d, q, k)) != law)
            return std::make_pair(false, "mismatch at d=" + u64s(d) + " q=" + u64s(q) +
                                             " k=" + u64s(k));
          ++tested;
        }
      }
    }
    return std::make_pair(true, u64s(tested) + " induced automorphisms");
  });

  s.run("wreath-laws", "wreath image parities for m^l <= 256, ml <= 24",
        "Eqs. (5.5.G)-(5.5.K)", [&] {
          int tested = 0;
          for (int m = 2; m <= 12; ++m)
            for (int l = 2; l <= 12; ++l) {
              if (m * l > 24) continue;
              long long pw = 1;
              bool prod_ok = true;
              for (int i = 0; i < l; ++i) {
                pw *= m;
                if (pw > 256) { prod_ok = false; break; }
              }
              std::vector<Perm> tops{Perm::parse("(0 1)", l)};
              if (l >= 3) tops.push_back(Perm::parse("(0 1 2)", l));
              std::vector<Perm> bases{Perm::parse("(0 1)", m)};
              if (m >= 3) bases.push_back(Perm::parse("(0 1 2)", m));
              for (const Perm& beta : tops) {
                int law = paritylaws::wreath_parity_law(
                    m, l, paritylaws::WreathElement::top,
                    paritylaws::WreathMode::imprimitive, parity(beta));
                if (parity(wreath_top_perm(m, l, beta,
                                           paritylaws::WreathMode::imprimitive)) != law)
                  return std::make_pair(false, "imp top mismatch m=" + u64s(m));
                ++tested;
                if (prod_ok) {
                  law = paritylaws::wreath_parity_law(m, l, paritylaws::WreathElement::top,
                                                      paritylaws::WreathMode::product,
                                                      parity(beta));
                  if (parity(wreath_top_perm(m, l, beta,
                                             paritylaws::WreathMode::product)) != law)
                    return std::make_pair(false, "prod top mismatch m=" + u64s(m));
                  ++tested;
                }
              }
              for (const Perm& a : bases) {
                int law = paritylaws::wreath_parity_law(
                    m, l, paritylaws::WreathElement::base_coordinate,
                    paritylaws::WreathMode::imprimitive, parity(a));
                if (parity(wreath_base_perm(m, l, 0, a,
                                            paritylaws::WreathMode::imprimitive)) != law)
                  return std::make_pair(false, "imp base mismatch m=" + u64s(m));
                ++tested;
                if (prod_ok) {
                  law = paritylaws::wreath_parity_law(
                      m, l, paritylaws::WreathElement::base_coordinate,
                      paritylaws::WreathMode::product, parity(a));
                  if (parity(wreath_base_perm(m, l, 0, a,
                                              paritylaws::WreathMode::product)) != law)
                    return std::make_pair(false, "prod base mismatch m=" + u64s(m));
                  ++tested;
                }
              }
            }
          return std::make_pair(true, u64s(tested) + " wreath images");
        });

  s.run("table-3C", "even part of PGammaL matches the sampled table rows", "Table 3.C", [&] {
    struct Row {
      int d;
      long long q;
      std::string expect;  // PGL | PSigmaL | PGammaL | M10-style
    };
    std::vector<Row> rows{{2, 4, "PGL"},      {3, 4, "PGL"},  {2, 8, "PGammaL"},
                          {2, 16, "PGammaL"}, {2, 25, "PSigmaL"}, {3, 5, "PGL"},
                          {2, 3, "PSigmaL"},  {3, 3, "PGL"},  {2, 27, "PSigmaL"},
                          {2, 9, "special"},  {3, 9, "PGL"}};
    for (const Row& row : rows) {
      Group e = projective(row.d, row.q, ProjectiveFlavor::PGammaL).group.even_part();
      Group expect;
      if (row.expect == "PGL") {
        expect = projective(row.d, row.q, ProjectiveFlavor::PGL).group;
      } else if (row.expect == "PSigmaL") {
        expect = projective(row.d, row.q, ProjectiveFlavor::PSigmaL).group;
      } else if (row.expect == "PGammaL") {
        expect = projective(row.d, row.q, ProjectiveFlavor::PGammaL).group;
      } else {
        // <PSL, PG(pi^2), G1(u) PG(pi)>: at f = 2 the square is trivial
        std::vector<Perm> gens = projective_generators(row.d, row.q, ProjectiveFlavor::PSL);
        gens.push_back(projective_field_aut(row.d, row.q, 2 % 2 == 0 ? 2 : 1));
        gens.push_back(projective_diag_u(row.d, row.q) * projective_field_aut(row.d, row.q, 1));
        expect = Group::generate(e.degree(), gens);
      }
      if (!e.same_group(expect))
        return std::make_pair(false, "row d=" + u64s(row.d) + " q=" + u64s(row.q));
    }
    return std::make_pair(true, u64s(rows.size()) + " rows (p=2 rows computed directly)");
  });

  s.run("lemma-371", "(4k+-1)^(2^b) = 1 mod 2^(b+2) for k <= 50, b <= 6", "Lemma 3.7.1", [&] {
    for (long long k = 1; k <= 50; ++k)
      for (int b = 1; b <= 6; ++b) {
        unsigned long long mod = 1ULL << (b + 2);
        for (long long base : {4 * k + 1, 4 * k - 1}) {
          unsigned long long acc = 1, bb = static_cast<unsigned long long>(base) % mod;
          for (int e = 0; e < (1 << b); ++e) acc = acc * bb % mod;
          if (acc != 1) return std::make_pair(false, "k=" + u64s(k) + " b=" + u64s(b));
        }
      }
    return std::make_pair(true, std::string("600 congruences"));
  });

  s.run("table-6C-arithmetic", "symplectic parity identity ((q^m-1)/(q-1))^2 = m mod 2",
        "Table 6.C arithmetic row", [&] {
          // the group-level PGSp claim is out of constructive scope; the
          // counting identity is asserted for (m,q) = (2,3)
          long long m = 2, q = 3;
          long long count = (q * q - 1) / (q - 1);
          long long val = count * count;
          return std::make_pair((val % 2) == (m % 2), "count^2=" + u64s(val));
        });

  return s.report;
}

// ----------------------------------------------------------- feit-palffy

VerificationReport suite_feit_palffy() {
  Suite s;
  s.report.suite = "feit-palffy";
  struct Case {
    int d;
    long long q;
    int p;  // point count, a prime
    unsigned long long order;
    unsigned long long normalizer_order;   // |N_G(P)| = p:(...)
    unsigned long long expected_sylow;     // hm(H, G)
    long long expected_nh_index;           // |N_Ap(H):H|
    long long expected_per_class;          // hm(G, H) per class
    int expected_r;
  };
  std::vector<Case> cases{
      {3, 3, 13, 5616, 39, 144, 2, 2, 5},
      {5, 2, 31, 9999360, 155, 64512, 3, 3, 7},
      {3, 5, 31, 372000, 93, 4000, 5, 5, 11},
  };
  for (const Case& c : cases) {
    std::string tag = "psl" + u64s(c.d) + "-" + u64s(c.q);
    try {
      Construction g = projective(c.d, c.q, ProjectiveFlavor::PSL);
      s.check(tag + "-order", "PSL order and prime degree", "Prop 5.2.1 table",
              g.group.order() == c.order && g.group.degree() == c.p,
              big_to_string(g.group.order()));

      // Sylow census by counting elements of order p
      unsigned long long count = 0;
      Perm cycle;
      g.group.for_each_element([&](const Perm& e) {
        if (e.order() == c.p) {
          if (count == 0) cycle = e;
          ++count;
        }
        return true;
      });
      unsigned long long sylows = count / (c.p - 1);
      s.check(tag + "-sylow-census", "Sylow count from the element census",
              "Prop 5.2.1 ingredients", sylows == c.expected_sylow,
              u64s(sylows) + " vs " + u64s(c.expected_sylow));

      // normalizer of the cycle inside the symmetric group: conjugated AGL(1,p)
      Group agl_std = agl(1, c.p).group;
      std::vector<uint16_t> wim(c.p);
      int pt = 0;
      for (int i = 0; i < c.p; ++i) {
        wim[i] = static_cast<uint16_t>(pt);
        pt = cycle[pt];
      }
      Group nsym = agl_std.conjugated_by(Perm(wim));
      Group nsym_even = nsym.even_part();

      std::vector<Perm> in_g;
      for (const Perm& x : nsym.elements())
        if (g.group.contains(x)) in_g.push_back(x);
      Group ngp = Group::generate(c.p, in_g);
      s.check(tag + "-ngp", "normalizer of the Sylow inside G", "Prop 5.2.1 ingredients",
              ngp.order_u64() == c.normalizer_order, big_to_string(ngp.order()));

      // |N_Ap(H) : H| computed inside AGL(1,p) and its even part
      std::vector<Perm> normalizing;
      for (const Perm& x : nsym_even.elements()) {
        Perm xi = x.inverse();
        bool norm = true;
        for (const Perm& hg : ngp.generators())
          if (!ngp.contains(xi * hg * x)) {
            norm = false;
            break;
          }
        if (norm) normalizing.push_back(x);
      }
      Group nah = Group::generate(c.p, normalizing);
      long long nh_index = static_cast<long long>(nah.order_u64() / ngp.order_u64());
      s.check(tag + "-nh-index", "|N(H):H| inside the even cycle normalizer",
              "Lemma 2.8.1 ingredients", nh_index == c.expected_nh_index, u64s(nh_index));

      // |N_Ap(G):G| by the Frattini reduction through N(P)
      std::vector<Perm> g_normalizing;
      for (const Perm& x : nsym_even.elements()) {
        Perm xi = x.inverse();
        bool norm = true;
        for (const Perm& gg : g.group.generators())
          if (!g.group.contains(xi * gg * x)) {
            norm = false;
            break;
          }
        if (norm) g_normalizing.push_back(x);
      }
      Group nng = Group::generate(c.p, g_normalizing);
      long long ng_index =
          static_cast<long long>(nng.order_u64() / (ngp.even_part().order_u64() == ngp.order_u64()
                                                        ? ngp.order_u64()
                                                        : ngp.even_part().order_u64()));
      s.check(tag + "-ng-index", "|N(G):G| via the Frattini reduction",
              "Lemma 2.8.1 ingredients", ng_index == 1, u64s(ng_index));

      long long per_class = palffy_count_overgroups(g.group.order(), ngp.order(), nh_index,
                                                    ng_index, static_cast<long long>(sylows));
      s.check(tag + "-per-class", "conjugates of G over H per ambient class",
              "Lemma 2.8.1 corollary", per_class == c.expected_per_class, u64s(per_class));

      int r = static_cast<int>(2 * per_class) + 1;
      s.check(tag + "-r", "r with the two-class split and the affine normalizer",
              "Prop 5.2.1 table", r == c.expected_r, u64s(r));
    } catch (const std::exception& e) {
      s.check(tag, "case setup", "Prop 5.2.1", false, std::string("exception: ") + e.what());
    }
  }
  return s.report;
}

// ------------------------------------------------------------ appendix-a

VerificationReport suite_appendix_a() {
  Suite s;
  s.report.suite = "appendix-a";
  Group s3 = Group::symmetric(3);
  Group prod = direct_product(s3, s3);

  s.run("maximals-count", "maximal subgroups of S3 x S3", "Thm A.4.2 / Cor. 2.9.4", [&] {
    auto maxes = product_maximals(s3, s3);
    return std::make_pair(maxes.size() == 9, u64s(maxes.size()) + " maximals");
  });

  s.run("covering-agreement", "four-clause maximality equals oracle covering on S3 x S3",
        "Thm A.4.1", [&] {
          auto subs = all_subgroups(prod, 1500);
          int coverings = 0;
          for (size_t i = 0; i < subs.size(); ++i)
            for (size_t j = 0; j < subs.size(); ++j) {
              if (i == j || subs[i].order() >= subs[j].order() ||
                  !subs[i].is_subgroup_of(subs[j]))
                continue;
              bool covering = true;
              for (size_t t = 0; t < subs.size() && covering; ++t) {
                if (t == i || t == j) continue;
                if (subs[t].order() > subs[i].order() && subs[t].order() < subs[j].order() &&
                    subs[i].is_subgroup_of(subs[t]) && subs[t].is_subgroup_of(subs[j]))
                  covering = false;
              }
              auto tag = goursat_is_maximal(subs[i], subs[j], s3, s3);
              if (tag.has_value() != covering)
                return std::make_pair(false, "disagreement at orders " +
                                                 big_to_string(subs[i].order()) + " < " +
                                                 big_to_string(subs[j].order()));
              if (covering) ++coverings;
            }
          return std::make_pair(true, u64s(coverings) + " covering pairs agree");
        });

  s.run("coverings-elementary", "every covering pair classifies as an elementary type",
        "A.3.9", [&] {
          auto subs = all_subgroups(prod, 1500);
          int checked = 0;
          for (size_t i = 0; i < subs.size(); ++i)
            for (size_t j = 0; j < subs.size(); ++j) {
              if (i == j || subs[i].order() >= subs[j].order() ||
                  !subs[i].is_subgroup_of(subs[j]))
                continue;
              if (!goursat_is_maximal(subs[i], subs[j], s3, s3)) continue;
              IntervalType t = interval_type(subs[i], subs[j], s3, s3);
              if (t == IntervalType::composed || t == IntervalType::trivial)
                return std::make_pair(false, "covering classified " + to_string(t));
              ++checked;
            }
          return std::make_pair(true, u64s(checked) + " coverings elementary");
        });

  s.run("roundtrip", "build(decompose(H)) = H over every subgroup of S3 x S3",
        "Thm 2.9.1 / Fleischer", [&] {
          int n = 0;
          for (const Group& h : all_subgroups(prod, 1500)) {
            GoursatDatum d = goursat_decompose(h, s3, s3);
            if (!goursat_build(d).same_group(h))
              return std::make_pair(false, "round trip failed at order " +
                                               big_to_string(h.order()));
            ++n;
          }
          return std::make_pair(true, u64s(n) + " subgroups round-trip");
        });

  s.run("example-A45-q3", "[diag(C2), (C3 x 1)diag(S3)] has shape M4 and is a novelty",
        "Example A.4.5", [&] {
          Group bottom = Group::generate(6, {Perm::parse("(0 1)(3 4)", 6)});
          Group top = Group::generate(
              6, {Perm::parse("(0 1 2)", 6), Perm::parse("(0 1)(3 4)", 6),
                  Perm::parse("(0 1 2)(3 4 5)", 6)});
          auto rep = shortcut_novelty(bottom, top, s3, s3);
          bool ok = rep.shape == Shape::mr(4) && rep.is_novelty && rep.has_shortcut;
          return std::make_pair(ok, rep.shape.to_string());
        });

  s.run("example-A45-q4", "[diag(C3), (V4 x 1)diag(A4)] has shape M5 inside A4 x A4",
        "Example A.4.5", [&] {
          Group a4 = Group::alternating(4);
          Group bottom = Group::generate(8, {Perm::parse("(0 1 2)(4 5 6)", 8)});
          Group top = Group::generate(
              8, {Perm::parse("(0 1)(2 3)", 8), Perm::parse("(0 2)(1 3)", 8),
                  Perm::parse("(0 1 2)(4 5 6)", 8), Perm::parse("(0 1)(2 3)(4 5)(6 7)", 8)});
          if (top.order_u64() != 48) return std::make_pair(false, std::string("top order misfit"));
          auto rep = shortcut_novelty(bottom, top, a4, a4, 1500);
          bool ok = rep.shape == Shape::mr(5) && rep.is_novelty;
          return std::make_pair(ok, rep.shape.to_string());
        });

  s.run("prop-A24", "[diag(S4), S4 x S4] is the lattice of normal subgroups of S4",
        "Prop A.2.4", [&] {
          Group s4 = Group::symmetric(4);
          Group p44 = direct_product(s4, s4);
          GoursatDatum diag = diagonal_datum(s4, s4, Perm::identity(4));
          Group bottom = goursat_build(diag);
          Interval iv = interval(bottom, p44);
          // Con(S4) = {1, V4, A4, S4}
          return std::make_pair(iv.nodes.size() == 4, u64s(iv.nodes.size()) + " nodes");
        });

  s.run("theorem-A-decomposition",
        "every interval of S3 x S3 splits as 3A . xL . xR . 3B witnesses", "Theorem A", [&] {
          auto subs = all_subgroups(prod, 1500);
          int tested = 0;
          for (size_t i = 0; i < subs.size(); ++i)
            for (size_t j = 0; j < subs.size(); ++j) {
              if (!subs[i].is_subgroup_of(subs[j])) continue;
              if (subs[i].order() == subs[j].order()) continue;
              GoursatDatum fi = goursat_decompose(subs[i], s3, s3);
              GoursatDatum fo = goursat_decompose(subs[j], s3, s3);
              int dl = 3, dr = 3;
              // M1 = <X, (Cker ∩ A) x 1>, M2 = <X, Cker x 1>, M3 = <M2, 1 x Dker>
              std::vector<Perm> m1g, m2g, m3g;
              for (const Perm& g : subs[i].generators()) {
                m1g.push_back(g);
                m2g.push_back(g);
              }
              for (const Perm& e : fo.a_ker.elements())
                if (fi.c.contains(e) ? true : false)
                  ;  // placeholder to keep e used
              for (const Perm& e : fo.a_ker.elements()) {
                if (fi.c.contains(e)) m1g.push_back(embed_left(e, dl, dr));
                m2g.push_back(embed_left(e, dl, dr));
              }
              Group m1 = Group::generate(6, m1g);
              Group m2 = Group::generate(6, m2g);
              m3g = m2.generators();
              for (const Perm& e : fo.b_ker.generators()) m3g.push_back(embed_right(e, dl, dr));
              Group m3 = Group::generate(6, m3g);
              auto step_ok = [&](const Group& lo, const Group& hi, IntervalType want) {
                if (lo.order() == hi.order()) return true;
                IntervalType t = interval_type(lo, hi, s3, s3);
                if (want == IntervalType::t4L)
                  return t == IntervalType::t4L || t == IntervalType::t2L;
                if (want == IntervalType::t4R)
                  return t == IntervalType::t4R || t == IntervalType::t2R;
                return t == want;
              };
              bool ok = subs[i].is_subgroup_of(m1) && m1.is_subgroup_of(m2) &&
                        m2.is_subgroup_of(m3) && m3.is_subgroup_of(subs[j]) &&
                        step_ok(subs[i], m1, IntervalType::t3A) &&
                        step_ok(m1, m2, IntervalType::t4L) &&
                        step_ok(m2, m3, IntervalType::t4R) &&
                        step_ok(m3, subs[j], IntervalType::t3B);
              if (!ok)
                return std::make_pair(false,
                                      "no witness at orders " + big_to_string(subs[i].order()) +
                                          " <= " + big_to_string(subs[j].order()));
              ++tested;
            }
          return std::make_pair(true, u64s(tested) + " inclusions decomposed");
        });

  s.run("maximals-s4-s3", "maximal count of S4 x S3 matches the oracle", "Cor. 2.9.4", [&] {
    Group s4 = Group::symmetric(4);
    Group p = direct_product(s4, s3);
    auto maxes = product_maximals(s4, s3);
    auto subs = all_subgroups(p, 1500);
    int oracle = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
      if (subs[i].order() == p.order()) continue;
      bool maximal = true;
      for (size_t t = 0; t < subs.size(); ++t) {
        if (t == i || subs[t].order() == p.order()) continue;
        if (subs[t].order() > subs[i].order() && subs[i].is_subgroup_of(subs[t]))
          maximal = false;
      }
      if (maximal) ++oracle;
    }
    return std::make_pair(static_cast<int>(maxes.size()) == oracle,
                          u64s(maxes.size()) + " vs oracle " + u64s(oracle));
  });

  s.run("cartesian-only", "C5 x C7 has only cartesian maximals", "Cor. A.2.3", [&] {
    Group c5 = Group::cyclic(5);
    Group c7 = Group::cyclic(7);
    auto maxes = product_maximals(c5, c7);
    // maximal normals: 1 in each factor; no isomorphic simple sections
    return std::make_pair(maxes.size() == 2, u64s(maxes.size()) + " maximals");
  });

  return s.report;
}

// ------------------------------------------------------------ thesis-core

void core_intervals(Suite& s) {
  s.run("a7-m3", "interval of the even 2x3 stabilizer with a fixed point in A7",
        "Lemma 2.6.1", [&] {
          Construction w = wreath(Group::symmetric(2), Group::symmetric(3),
                                  paritylaws::WreathMode::imprimitive);
          Group h = embed_degree(w.group.even_part(), 7);
          Interval iv = interval(h, Group::alternating(7));
          if (classify(iv) != Shape::mr(3)) return std::make_pair(false, classify(iv).to_string());
          std::vector<Group> atoms168;
          for (const Group& nd : iv.nodes)
            if (nd.order_u64() == 168) atoms168.push_back(nd);
          if (atoms168.size() != 2) return std::make_pair(false, std::string("atom orders misfit"));
          // conjugate in S7, not in A7
          bool found_odd = false, found_even = false;
          for (const Perm& c : Group::symmetric(7).elements()) {
            Perm ci = c.inverse();
            bool conj = true;
            for (const Perm& g : atoms168[0].generators())
              if (!atoms168[1].contains(ci * g * c)) {
                conj = false;
                break;
              }
            if (conj) (parity(c) ? found_odd : found_even) = true;
          }
          bool ok = found_odd && !found_even;
          return std::make_pair(ok, std::string("M3 with two PSL(3,2) atoms, S7-conjugate only"));
        });

  s.run("a8-m2", "interval of the even 2x4 stabilizer in A8", "Prop 2.3.2", [&] {
    Construction w = wreath(Group::symmetric(2), Group::symmetric(4),
                            paritylaws::WreathMode::imprimitive);
    Group h = w.group.even_part();
    Interval iv = interval(h, Group::alternating(8));
    if (classify(iv) != Shape::mr(2)) return std::make_pair(false, classify(iv).to_string());
    for (size_t i = 1; i + 1 < iv.nodes.size(); ++i)
      if (iv.nodes[i].order_u64() != 1344) return std::make_pair(false, std::string("atom order misfit"));
    return std::make_pair(true, std::string("Mr(2) with AGL(3,2) atoms"));
  });

  s.run("s11-poset", "overgroups of an 11-cycle in S11", "Figure 5.C", [&] {
    Interval iv = interval(Group::cyclic(11), Group::symmetric(11));
    std::set<unsigned long long> orders;
    for (const Group& nd : iv.nodes) orders.insert(nd.order_u64());
    std::set<unsigned long long> expect{11,   22,      55,       110,
                                        660,  7920,    19958400, 39916800};
    std::string got;
    for (auto o : orders) got += u64s(o) + " ";
    return std::make_pair(orders == expect && iv.nodes.size() == 10, got);
  });

  s.run("fig5c-p23", "containment chain above a 23-cycle", "Figure 5.C at p = 23", [&] {
    // PSL(2,23) has no degree-23 action, so the verified chain is
    // C23 < 23:11 < M23 < A23
    Construction m23 = atlas("M23/23");
    Perm c23;
    m23.group.for_each_element([&](const Perm& e) {
      if (e.order() == 23) {
        c23 = e;
        return false;
      }
      return true;
    });
    Group cyc = Group::generate(23, {c23});
    Group agl_std = agl(1, 23).group;
    std::vector<uint16_t> wim(23);
    int pt = 0;
    for (int i = 0; i < 23; ++i) {
      wim[i] = static_cast<uint16_t>(pt);
      pt = c23[pt];
    }
    Group nsym = agl_std.conjugated_by(Perm(wim));
    std::vector<Perm> in_m23;
    for (const Perm& x : nsym.elements())
      if (m23.group.contains(x)) in_m23.push_back(x);
    Group n2311 = Group::generate(23, in_m23);
    bool ok = n2311.order_u64() == 253 && cyc.is_subgroup_of(n2311) &&
              n2311.is_subgroup_of(m23.group) && m23.group.is_even();
    return std::make_pair(ok, "23:11 order " + big_to_string(n2311.order()));
  });

  s.run("pgl27-coset", "PGL(2,7) on its Sylow-2 cosets: degree 21 odd primitive",
        "Prop 3.4.1", [&] {
          Construction pgl = projective(2, 7, ProjectiveFlavor::PGL);
          // grow a Sylow-2 subgroup through normalizers
          Group syl = Group::trivial(8);
          while (syl.order_u64() < 16) {
            Perm next;
            bool found = false;
            pgl.group.for_each_element([&](const Perm& e) {
              long long o = e.order();
              if ((o == 2 || o == 4 || o == 8) && !syl.contains(e)) {
                Group j = join(syl, {e});
                if ((j.order_u64() & (j.order_u64() - 1)) == 0) {
                  next = e;
                  found = true;
                  return false;
                }
              }
              return true;
            });
            if (!found) return std::make_pair(false, std::string("no Sylow-2 found"));
            syl = join(syl, {next});
          }
          auto [image, faithful] = coset_action(pgl.group, syl);
          bool primitive = is_primitive(image);
          bool odd = !image.is_even();
          Group even = image.even_part();
          bool even_imprimitive = !imprimitivity_systems(even).empty();
          bool ok = image.degree() == 21 && faithful && primitive && odd && even_imprimitive;
          return std::make_pair(ok, "degree " + u64s(image.degree()) + ", even part has " +
                                        u64s(imprimitivity_systems(even).size()) +
                                        " block systems");
        });

  s.run("wreath-chain", "point stabilizer interval of S3 wr S2 is the vertical sum chain",
        "Thm 2.4.3", [&] {
          Construction w = wreath(Group::symmetric(3), Group::symmetric(2),
                                  paritylaws::WreathMode::imprimitive);
          Group stab = w.group.point_stabilizer(0);
          Interval iv = interval(stab, w.group);
          auto vs = vertical_sum(chain_poset(1), chain_poset(1));
          bool ok = classify(iv) == Shape::chain(2) && poset_isomorphic(iv.leq_matrix(), vs);
          return std::make_pair(ok, classify(iv).to_string());
        });

  s.run("remark-245", "the even 2x2 wreath over an intransitive even part gives M3",
        "Remark 2.4.5", [&] {
          // H = S2: the exception [1, V4] = M3
          Construction w = wreath(Group::symmetric(2), Group::symmetric(2),
                                  paritylaws::WreathMode::imprimitive);
          Group v4 = w.group.even_part();
          Interval iv = interval(Group::trivial(4), v4);
          return std::make_pair(classify(iv) == Shape::mr(3), classify(iv).to_string());
        });

  s.run("remark-244", "vertical sum persists for the even wreath when |Y| > 2",
        "Remark 2.4.4", [&] {
          Construction w = wreath(Group::symmetric(2), Group::symmetric(3),
                                  paritylaws::WreathMode::imprimitive);
          Group e = w.group.even_part();
          Group stab = e.point_stabilizer(0);
          Interval iv = interval(stab, e);
          return std::make_pair(classify(iv) == Shape::chain(2), classify(iv).to_string());
        });

  s.run("cor-247", "the Klein group on 4 points has three imprimitivity systems",
        "Cor. 2.4.7", [&] {
          Construction w = wreath(Group::symmetric(2), Group::symmetric(2),
                                  paritylaws::WreathMode::imprimitive);
          auto systems = imprimitivity_systems(w.group.even_part());
          return std::make_pair(systems.size() == 3, u64s(systems.size()) + " systems");
        });

  s.run("cor-246", "the even 2x3 stabilizer has exactly one system", "Cor. 2.4.6", [&] {
    Construction w = wreath(Group::symmetric(2), Group::symmetric(3),
                            paritylaws::WreathMode::imprimitive);
    auto systems = imprimitivity_systems(w.group.even_part());
    return std::make_pair(systems.size() == 1, u64s(systems.size()) + " systems");
  });

  s.run("prop-421", "three-orbit stabilizer of sizes (1,2,4) in S7 gives M3", "Prop 4.2.1", [&] {
    Group h = young_stabilizer(7, {1, 2, 4});
    Interval iv = interval(h, Group::symmetric(7));
    if (classify(iv) != Shape::mr(3)) return std::make_pair(false, classify(iv).to_string());
    std::multiset<unsigned long long> atom_orders;
    for (size_t i = 1; i + 1 < iv.nodes.size(); ++i)
      atom_orders.insert(iv.nodes[i].order_u64());
    // unions of orbit pairs: [3,4], [2,5], [1,6]
    std::multiset<unsigned long long> expect{144, 240, 720};
    return std::make_pair(atom_orders == expect, std::string("atoms are the pair unions"));
  });

  s.run("prop-242", "systems biject with point-stabilizer overgroups at degree <= 12",
        "Prop 2.4.2", [&] {
          std::vector<Group> corpus;
          corpus.push_back(Group::symmetric(5));
          corpus.push_back(Group::cyclic(6));
          corpus.push_back(Group::cyclic(12));
          corpus.push_back(wreath(Group::symmetric(2), Group::symmetric(3),
                                  paritylaws::WreathMode::imprimitive).group);
          corpus.push_back(wreath(Group::symmetric(3), Group::symmetric(2),
                                  paritylaws::WreathMode::imprimitive).group);
          corpus.push_back(wreath(Group::symmetric(2), Group::symmetric(2),
                                  paritylaws::WreathMode::product).group);
          corpus.push_back(agl(1, 8).group);
          corpus.push_back(Group::alternating(6));
          for (const Group& g : corpus) {
            auto systems = imprimitivity_systems(g);
            Interval iv = interval(g.point_stabilizer(0), g);
            if (systems.size() + 2 != iv.nodes.size())
              return std::make_pair(false, "bijection failed at degree " + u64s(g.degree()));
          }
          return std::make_pair(true, u64s(corpus.size()) + " transitive groups");
        });

  s.run("prop-251", "primitive iff the point stabilizer is maximal, on samples",
        "Prop 2.5.1", [&] {
          std::vector<Group> corpus{Group::alternating(5), Group::symmetric(6),
                                    Group::cyclic(6), agl(1, 8).group,
                                    wreath(Group::symmetric(2), Group::symmetric(3),
                                           paritylaws::WreathMode::imprimitive)
                                        .group};
          for (const Group& g : corpus) {
            bool prim = is_primitive(g);
            Interval iv = interval(g.point_stabilizer(0), g);
            bool stab_maximal = iv.nodes.size() == 2;
            if (prim != stab_maximal) return std::make_pair(false, std::string("mismatch"));
          }
          return std::make_pair(true, u64s(5) + " groups");
        });
}

void core_constructions(Suite& s) {
  s.run("suzuki-order", "Sz(8) order and 2-transitivity on 65 ovoid points",
        "Prop 3.10.1", [&] {
          Construction sz = suzuki(8);
          auto profile = transitivity_profile(sz.group);
          bool ok = sz.group.order_u64() == 29120 && sz.group.degree() == 65 &&
                    profile == std::make_pair(2, 1);
          return std::make_pair(ok, "order " + big_to_string(sz.group.order()) + ", profile (" +
                                        u64s(profile.first) + "," + u64s(profile.second) + ")");
        });

  s.run("suzuki-stabilizer", "point stabilizer of infinity has order q^2(q-1)",
        "Prop 3.10.1", [&] {
          Construction sz = suzuki(8);
          Group stab = sz.group.point_stabilizer(64);
          bool blocks = !imprimitivity_systems(restrict_to(stab, [] {
                           std::vector<int> v(64);
                           std::iota(v.begin(), v.end(), 0);
                           return v;
                         }())).empty();
          return std::make_pair(stab.order_u64() == 448 && blocks,
                                "order " + big_to_string(stab.order()));
        });

  s.run("suzuki-pairs", "induced action on 2-subsets of the ovoid is transitive",
        "after Prop 3.10.1", [&] {
          Construction szp = suzuki(8, SuzukiAction::pairs);
          bool ok = szp.group.degree() == 2080 && is_transitive(szp.group) &&
                    szp.group.order_u64() == 29120;
          return std::make_pair(ok, "degree " + u64s(szp.group.degree()));
        });

  s.run("assoc-rewreath", "conjugation by the regrouping bijection aligns the two towers",
        "Prop 5.8.1", [&] {
          for (auto [a, b, c] : std::vector<std::array<int, 3>>{{2, 2, 2}, {3, 2, 2}, {2, 3, 2}}) {
            AssocRewreath ar = assoc_rewreath(a, b, c);
            if (ar.left.group.order() != ar.right.group.order())
              return std::make_pair(false, std::string("orders differ"));
            Perm psi_inv = ar.psi.inverse();
            for (const Perm& g : ar.left.group.generators())
              if (!ar.right.group.contains(ar.psi * g * psi_inv))
                return std::make_pair(false, std::string("conjugation left the right-hand tower"));
          }
          return std::make_pair(true, std::string("3 parameter triples"));
        });

  s.run("agl32-order", "AGL(3,2) has order 1344 and profile (3,2)", "Table 3.B", [&] {
    Construction a = agl(3, 2);
    auto profile = transitivity_profile(a.group);
    bool ok = a.group.order_u64() == 1344 && profile == std::make_pair(3, 2);
    return std::make_pair(ok, "profile (" + u64s(profile.first) + "," + u64s(profile.second) +
                                  "), row-6 exact primitivity degree recorded as 2");
  });

  s.run("agl22-s4", "AGL(2,2) is permutation-isomorphic to S4", "after Table 3.B", [&] {
    Construction a = agl(2, 2);
    auto c = is_perm_isomorphic(a.group, Group::symmetric(4));
    return std::make_pair(c.has_value(), big_to_string(a.group.order()));
  });

  s.run("table-3B", "affine transitivity profiles match the table rows", "Table 3.B", [&] {
    struct Row {
      int n;
      long long q;
      std::pair<int, int> profile;
    };
    std::vector<Row> rows{{1, 2, {2, 2}}, {1, 3, {3, 3}}, {1, 8, {2, 2}}, {1, 5, {2, 1}},
                          {2, 2, {4, 4}}, {2, 3, {2, 1}}, {3, 2, {3, 2}}};
    for (const Row& r : rows) {
      auto p = transitivity_profile(agl(r.n, r.q).group);
      if (p != r.profile)
        return std::make_pair(false, "row n=" + u64s(r.n) + " q=" + u64s(r.q) + " got (" +
                                         u64s(p.first) + "," + u64s(p.second) + ")");
    }
    return std::make_pair(true, u64s(rows.size()) + " rows");
  });

  s.run("hol-c5", "Hol(C5) has order 20", "section 5.10", [&] {
    Construction h = holomorph(Group::cyclic(5));
    return std::make_pair(h.group.order_u64() == 20, big_to_string(h.group.order()));
  });

  s.run("hol-v4", "Hol(V4) has order 24", "section 5.10", [&] {
    Group v4 = Group::generate(4, {Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)});
    Construction h = holomorph(v4);
    return std::make_pair(h.group.order_u64() == 24, big_to_string(h.group.order()));
  });

  s.run("hol-s3", "Hol(S3) on the regular 6 points has order 36", "section 5.10", [&] {
    Construction h = holomorph(Group::symmetric(3));
    bool ok = h.group.order_u64() == 36 && h.group.degree() == 6;
    return std::make_pair(ok, big_to_string(h.group.order()));
  });

  s.run("ghol-a5", "GHol(A5^2, diag) on 60 cosets with its lifts", "section 5.12", [&] {
    DiagonalGhol d = diagonal_ghol(Group::alternating(5), 2);
    Group up_top = d.lift_top();
    Group up_triv = d.lift_trivial();
    bool ok = d.construction.group.order_u64() == 14400 &&
              d.construction.group.degree() == 60 && up_top.order_u64() == 7200 &&
              is_primitive(up_top) && up_triv.order_u64() == 3600;
    return std::make_pair(ok, std::string("orders 14400 / 7200 / 3600, top lift primitive"));
  });

  s.run("ghol-down", "the quotient map splits lifted elements correctly", "section 5.12", [&] {
    DiagonalGhol d = diagonal_ghol(Group::alternating(5), 2);
    Group top = d.lift_top();
    int checked = 0;
    for (const Perm& g : top.generators()) {
      auto [alpha, oc] = d.down(g);
      if (oc != 0) return std::make_pair(false, std::string("top lift hit an outer class"));
      ++checked;
    }
    for (const Perm& g : d.lift_trivial().generators()) {
      auto [alpha, oc] = d.down(g);
      if (!alpha.is_identity() || oc != 0)
        return std::make_pair(false, std::string("socle element not in the kernel"));
      ++checked;
    }
    return std::make_pair(true, u64s(checked) + " elements split");
  });

  s.run("blowup-full", "blow-up of S5 by the whole C2 wr S2 is the full product wreath",
        "section 5.9", [&] {
          std::vector<QuotientWreathElement> pg;
          pg.push_back({Perm::parse("(0 1)", 2), {0, 0}});
          pg.push_back({Perm::identity(2), {1, 0}});
          Construction b = blow_up(Group::symmetric(5), 2, pg);
          Construction w = wreath(Group::symmetric(5), Group::symmetric(2),
                                  paritylaws::WreathMode::product);
          return std::make_pair(b.group.same_group(w.group), big_to_string(b.group.order()));
        });

  s.run("blowup-a5", "blow-up of A5 by the top S2 has order 7200", "section 5.9", [&] {
    std::vector<QuotientWreathElement> pg;
    pg.push_back({Perm::parse("(0 1)", 2), {0, 0}});
    Construction b = blow_up(Group::alternating(5), 2, pg);
    return std::make_pair(b.group.order_u64() == 7200, big_to_string(b.group.order()));
  });

  s.run("blowup-not-large", "an intransitive top is refused", "section 5.5", [&] {
    std::vector<QuotientWreathElement> pg;
    pg.push_back({Perm::identity(2), {1, 0}});
    try {
      blow_up(Group::symmetric(5), 2, pg);
      return std::make_pair(false, std::string("no refusal"));
    } catch (const std::invalid_argument&) {
      return std::make_pair(true, std::string("refused"));
    }
  });

  s.run("table-5A", "maximal subgroup data of PSp4(3): index set {27,36,40,40,45}",
        "Table 5.A", [&] {
          // data assertion only: the symplectic group itself is out of
          // constructive scope for this artifact
          unsigned long long order = 25920;
          std::vector<unsigned long long> sub_orders{960, 720, 648, 648, 576};
          std::multiset<unsigned long long> idx;
          for (auto o : sub_orders) {
            if (order % o) return std::make_pair(false, std::string("non-integral index"));
            idx.insert(order / o);
          }
          std::multiset<unsigned long long> expect{27, 36, 40, 40, 45};
          return std::make_pair(idx == expect, std::string("indices from the recorded orders"));
        });
  s.skip("psp43-construction", "PSp4(3) as a permutation group", "Table 5.A",
         "out of constructive scope; the table row is asserted as data only");
}

void core_catalog(Suite& s) {
  s.run("atlas-m11", "M11 on 11 points", "catalog", [&] {
    Construction m = atlas("M11/11");
    return std::make_pair(m.group.order_u64() == 7920, big_to_string(m.group.order()));
  });
  s.run("atlas-m12", "M12 on 12 points is 5-transitive", "Table 3.A", [&] {
    Construction m = atlas("M12/12");
    auto p = transitivity_profile(m.group);
    return std::make_pair(m.group.order_u64() == 95040 && p.first == 5,
                          "profile (" + u64s(p.first) + "," + u64s(p.second) + ")");
  });
  s.run("atlas-m24", "M24 on 24 points", "catalog", [&] {
    Construction m = atlas("M24/24");
    return std::make_pair(m.group.order_u64() == 244823040ULL, big_to_string(m.group.order()));
  });
  s.run("atlas-m11-12", "the transitive degree-12 action of M11", "Table 3.A", [&] {
    Construction m = atlas("M11/12");
    auto p = transitivity_profile(m.group);
    return std::make_pair(m.group.order_u64() == 7920 && is_transitive(m.group) && p.first == 3,
                          "profile first entry " + u64s(p.first));
  });
  s.run("atlas-m24-coset", "coset action of M24 on a point stabilizer is faithful of degree 24",
        "section 6.1", [&] {
          Construction m = atlas("M24/24");
          Group stab = m.group.point_stabilizer(0);
          auto [image, faithful] = coset_action(m.group, stab);
          return std::make_pair(image.degree() == 24 && faithful, u64s(image.degree()));
        });

  s.run("jordan-scan", "no small-support elements in proper primitive groups of degree >= 9",
        "Prop 2.5.3", [&] {
          std::vector<Group> corpus{atlas("M11/11").group, atlas("M11/12").group,
                                    atlas("M12/12").group,
                                    projective(3, 3, ProjectiveFlavor::PSL).group,
                                    projective(2, 9, ProjectiveFlavor::PGammaL).group,
                                    suzuki(8).group};
          for (const Group& g : corpus) {
            bool bad = false;
            g.for_each_element([&](const Perm& e) {
              int sup = e.support_size();
              auto census = cycle_census(e).entries;
              bool transposition = sup == 2;
              bool threecycle = sup == 3 && census.count(3);
              bool double_transposition = sup == 4 && census.count(2) && census[2] == 4;
              if (transposition || threecycle || double_transposition) {
                bad = true;
                return false;
              }
              return true;
            });
            if (bad) return std::make_pair(false, "violation at degree " + u64s(g.degree()));
          }
          return std::make_pair(true, u64s(6) + " primitive groups scanned");
        });

  s.run("table-6AB-factorizations", "spot factorizations A8 = A7 AGL(3,2), A7 = A6 PSL(3,2)",
        "Tables 6.A/6.B", [&] {
          {
            Group a8 = Group::alternating(8);
            Group agl32 = agl(3, 2).group;
            Group a7 = a8.point_stabilizer(0);
            unsigned long long meet = 0;
            for (const Perm& e : agl32.elements())
              if (a7.contains(e)) ++meet;
            if (a7.order_u64() * agl32.order_u64() / meet != a8.order_u64())
              return std::make_pair(false, std::string("A8 factorization failed"));
          }
          {
            Group a7 = Group::alternating(7);
            Group psl = embed_degree(projective(3, 2, ProjectiveFlavor::PSL).group, 7);
            Group a6 = a7.point_stabilizer(0);
            // PSL(3,2) on its 7 points, A6 the stabilizer of point 0
            unsigned long long meet = 0;
            for (const Perm& e : psl.elements())
              if (a6.contains(e)) ++meet;
            if (a6.order_u64() * psl.order_u64() / meet != a7.order_u64())
              return std::make_pair(false, std::string("A7 factorization failed"));
          }
          return std::make_pair(true, std::string("both Frattini factorizations hold"));
        });

  s.run("lemma-5143", "orders of AGL(a,p) wr S_b determine (a,b)", "Lemma 5.14.3", [&] {
    auto agl_order = [](long long a, long long p) {
      unsigned long long pa = 1;
      for (int i = 0; i < a; ++i) pa *= p;
      unsigned long long o = pa, pi = 1;
      for (int i = 0; i < a; ++i) {
        o *= (pa - pi);
        pi *= p;
      }
      return o;
    };
    auto fact = [](int b) {
      unsigned long long f = 1;
      for (int i = 2; i <= b; ++i) f *= i;
      return f;
    };
    for (long long p : {2, 3, 5}) {
      std::map<std::pair<int, int>, unsigned long long> orders;
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          if (a * b > 6) continue;
          unsigned long long o = 1;
          for (int i = 0; i < b; ++i) o *= agl_order(a, p);
          o *= fact(b);
          orders[{a, b}] = o;
        }
      for (auto& [k1, v1] : orders)
        for (auto& [k2, v2] : orders)
          if (k1 != k2 && k1.first * k1.second == k2.first * k2.second && v1 == v2)
            return std::make_pair(false, "collision at p=" + u64s(p));
    }
    return std::make_pair(true, std::string("no collisions over the sampled grid"));
  });

  s.run("prop-391", "1 + q + ... + q^(n-1) is a power of 2 only for n <= 2",
        "Prop 3.9.1 numeric check", [&] {
          for (long long q = 2; q <= 100; ++q)
            for (int n = 3; n <= 10; ++n) {
              unsigned long long v = 0, qq = 1;
              for (int i = 0; i < n; ++i) {
                v += qq;
                qq *= q;
                if (v > (1ULL << 62)) break;
              }
              if (v && (v & (v - 1)) == 0)
                return std::make_pair(false, "power of 2 at q=" + u64s(q) + " n=" + u64s(n));
            }
          return std::make_pair(true, std::string("q <= 100, n <= 10"));
        });

  s.run("shoe-wreath", "the shoe of S3 wr S2 is the full base product", "section 5.3", [&] {
    Construction w = wreath(Group::symmetric(3), Group::symmetric(2),
                            paritylaws::WreathMode::imprimitive);
    // socle factors: the two even coordinate copies
    Group f0 = Group::generate(6, {Perm::parse("(0 1 2)", 6)});
    Group f1 = Group::generate(6, {Perm::parse("(3 4 5)", 6)});
    std::vector<Perm> shoe_elems;
    for (const Perm& e : w.group.elements()) {
      Perm ei = e.inverse();
      auto normalizes = [&](const Group& f) {
        for (const Perm& g : f.generators())
          if (!f.contains(ei * g * e)) return false;
        return true;
      };
      if (normalizes(f0) && normalizes(f1)) shoe_elems.push_back(e);
    }
    Group shoe = Group::generate(6, shoe_elems);
    return std::make_pair(shoe.order_u64() == 36, big_to_string(shoe.order()));
  });
}

void core_stabilizer_theorems(Suite& s) {
  s.run("thm-563", "imprimitive wreaths are the full stabilizers of their cell partitions",
        "Thm 5.6.3", [&] {
          for (auto [m, l] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {2, 3}}) {
            Construction w = wreath(Group::symmetric(m), Group::symmetric(l),
                                    paritylaws::WreathMode::imprimitive);
            Group st = equipartition_stabilizer(m * l, Equipartition::consecutive(m * l, m));
            if (!w.group.same_group(st)) return std::make_pair(false, "mismatch at m=" + u64s(m));
          }
          return std::make_pair(true, std::string("3 parameter pairs"));
        });

  s.run("thm-566", "product wreaths are the full stabilizers of their hyperplane families",
        "Thm 5.6.6", [&] {
          for (auto [m, l] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {2, 3}}) {
            Construction w = wreath(Group::symmetric(m), Group::symmetric(l),
                                    paritylaws::WreathMode::product);
            int degree = 1;
            for (int i = 0; i < l; ++i) degree *= m;
            std::vector<std::vector<int>> hyperplanes;
            std::vector<int> pw(l + 1, 1);
            for (int i = 1; i <= l; ++i) pw[i] = pw[i - 1] * m;
            for (int i = 0; i < l; ++i)
              for (int x = 0; x < m; ++x) {
                std::vector<int> hp;
                for (int pt = 0; pt < degree; ++pt)
                  if (pt / pw[i] % m == x) hp.push_back(pt);
                hyperplanes.push_back(hp);
              }
            Group st = set_system_stabilizer(degree, hyperplanes);
            if (!w.group.same_group(st)) return std::make_pair(false, "mismatch at m=" + u64s(m));
          }
          return std::make_pair(true, std::string("3 parameter pairs"));
        });

  s.run("thm-571", "even base subgroups have exactly l systems of order m, dihedral excepted",
        "Thm 5.7.1", [&] {
          struct Case {
            int m, l;
            size_t expect;
          };
          // (S3, 2) is the dihedral exception at m = 3: m + 1 systems
          std::vector<Case> cases{{4, 2, 2}, {3, 3, 3}, {3, 2, 4}};
          for (const Case& c : cases) {
            std::vector<Perm> gens;
            for (const Perm& g : Group::symmetric(c.m).generators())
              for (int i = 0; i < c.l; ++i)
                gens.push_back(wreath_base_perm(c.m, c.l, i, g, paritylaws::WreathMode::product));
            Group base = Group::generate([&] { int d = 1; for (int i = 0; i < c.l; ++i) d *= c.m; return d; }(), gens);
            Group even = base.even_part();
            size_t count = 0;
            for (const Equipartition& z : imprimitivity_systems(even))
              if (z.cell_count() == c.m) ++count;
            if (count != c.expect)
              return std::make_pair(false, "m=" + u64s(c.m) + " l=" + u64s(c.l) + " got " +
                                               u64s(count));
          }
          return std::make_pair(true, std::string("2 generic cases plus the dihedral exception"));
        });
}

VerificationReport suite_thesis_core() {
  Suite s;
  s.report.suite = "thesis-core";
  core_intervals(s);
  core_constructions(s);
  core_catalog(s);
  core_stabilizer_theorems(s);
  return s.report;
}

}  // namespace

VerificationReport verify_suite(const std::string& name) {
  if (name == "parity") return suite_parity();
  if (name == "appendix-a") return suite_appendix_a();
  if (name == "feit-palffy") return suite_feit_palffy();
  if (name == "thesis-core") return suite_thesis_core();
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<std::string> verify_suite_names() {
  return {"thesis-core", "parity", "appendix-a", "feit-palffy"};
}

}  // namespace grouplat
