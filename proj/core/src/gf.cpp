#include "grouplat/gf.hpp"

#include <algorithm>
#include <numeric>

namespace grouplat {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(long long n, long long* p, int* f) {
  if (n < 2) return false;
  long long base = n;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) { base = d; break; }
  long long m = n;
  int e = 0;
  while (m % base == 0) {
    m /= base;
    ++e;
  }
  if (m != 1) return false;
  *p = base;
  *f = e;
  return true;
}

namespace {

// polynomials over GF(p) as coefficient vectors, constant term first
using Poly = std::vector<long long>;

Poly poly_of_index(long long idx, long long p, int len) {
  Poly c(len, 0);
  for (int i = 0; i < len && idx > 0; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

long long index_of_poly(const Poly& c, long long p) {
  long long idx = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
  return idx;
}

int poly_deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

long long mod_inverse(long long a, long long p) {
  long long t = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) t = t * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return t;
}

Poly poly_mod(Poly a, const Poly& m, long long p) {
  int dm = poly_deg(m);
  long long lead_inv = mod_inverse(m[dm], p);
  for (int i = poly_deg(a); i >= dm; i = poly_deg(a)) {
    long long c = a[i] * lead_inv % p;
    for (int j = 0; j <= dm; ++j)
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p * p) % p;
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long long p) {
  Poly prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(prod), m, p);
}

bool divides(const Poly& d, const Poly& a, long long p) {
  Poly r = poly_mod(a, d, p);
  return poly_deg(r) < 0;
}

bool is_irreducible(const Poly& m, long long p) {
  int dm = poly_deg(m);
  if (dm < 1) return false;
  if (dm == 1) return true;
  // trial division by every monic polynomial of degree <= dm/2
  for (int d = 1; 2 * d <= dm; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Poly cand = poly_of_index(idx, p, d + 1);
      cand[d] = 1;
      if (divides(cand, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(long long p, int f) : p_(p), f_(f) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (f < 1) throw std::invalid_argument("field extension degree must be positive");
  q_ = 1;
  for (int i = 0; i < f; ++i) {
    q_ *= p;
    if (q_ > (1LL << 22)) throw budget_error("field too large");
  }
  // lexicographically least monic irreducible modulus, scanning indices
  long long count = 1;
  for (int i = 0; i < f; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    Poly cand = poly_of_index(idx, p, f + 1);
    cand[f] = 1;
    if (is_irreducible(cand, p)) {
      modulus_ = cand;
      break;
    }
  }
  if (modulus_.empty()) throw std::runtime_error("no irreducible modulus found");
  for (long long u = 1; u < q_; ++u) {
    if (mult_order(u) == q_ - 1) {
      primitive_ = u;
      break;
    }
  }
}

Field make_field(long long p, int f) { return Field(p, f); }

long long Field::add(long long a, long long b) const {
  long long out = 0, mult = 1;
  for (int i = 0; i < f_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

long long Field::neg(long long a) const {
  long long out = 0, mult = 1;
  for (int i = 0; i < f_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

long long Field::sub(long long a, long long b) const { return add(a, neg(b)); }

long long Field::mul(long long a, long long b) const {
  Poly pa = poly_of_index(a, p_, f_);
  Poly pb = poly_of_index(b, p_, f_);
  return index_of_poly(poly_mulmod(pa, pb, modulus_, p_), p_);
}

long long Field::power(long long a, long long e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (q_ > 2) {
    e %= (q_ - 1);
    if (e < 0) e += q_ - 1;
  }
  long long acc = 1, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long long Field::inv(long long a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return power(a, q_ - 2);
}

long long Field::mult_order(long long a) const {
  if (a == 0) throw std::invalid_argument("multiplicative order of zero");
  long long ord = 1, x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
    if (ord > q_) throw std::runtime_error("order search overran the field");
  }
  return ord;
}

Perm frobenius_perm(const Field& fld) { return field_automorphism_perm(fld, 1); }

Perm field_automorphism_perm(const Field& fld, int k) {
  long long q = fld.size();
  std::vector<uint16_t> im(q);
  for (long long a = 0; a < q; ++a) {
    long long x = a;
    for (int i = 0; i < k; ++i) x = fld.power(x, fld.p());
    im[a] = static_cast<uint16_t>(x);
  }
  return Perm(std::move(im));
}

}  // namespace grouplat
