#include "grouplat/paritylaws.hpp"

#include <stdexcept>

namespace grouplat::paritylaws {

int diagonal_parity_law(long long n, long long l, int par_s) {
  if (l < 2) throw std::invalid_argument("diagonal law needs l >= 2");
  return static_cast<int>((l * n * par_s) & 1);
}

int binom_parity(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  // C(n,k) is odd iff subtracting k from n in base 2 has no borrows
  return ((k & (n - k)) == 0) ? 1 : 0;
}

int powerset_parity_law(long long n, long long l, int par_s) {
  if (l <= 0 || l >= n) throw std::invalid_argument("powerset law needs 0 < l < n");
  return binom_parity(n - 2, l - 1) & par_s;
}

bool frobenius_even(long long p, int f) {
  long long q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  if (q == 4) return false;
  if (f % 2 == 0 && p % 4 == 3) return false;
  return true;
}

bool affine_even(int n, long long q) {
  bool exceptional = (n == 1 && q == 2) || (n == 2 && q == 2);
  return (q % 2 == 0) && !exceptional;
}

int projective_parity_pgl(int d, long long q) {
  long long v = (d + 1) * q;
  bool even = (v % 2 == 0) && v > 6;
  return even ? 0 : 1;
}

int projective_parity_fieldaut(int d, long long q, int par_alpha) {
  long long half = static_cast<long long>(d + 1) * (d - 2) / 2;  // always integral
  long long coeff = 1 + q * half;
  return static_cast<int>((coeff & 1) & par_alpha);
}

namespace {

// m^(l-1) * (m-1) / 2 mod 2, evaluated mod 4 before halving
int half_power_parity(long long m, long long l) {
  long long pw = 1 % 4;
  long long base = m % 4;
  for (long long i = 0; i < l - 1; ++i) pw = pw * base % 4;
  long long prod = pw * ((m - 1) % 4) % 4;
  return static_cast<int>((prod / 2) & 1);
}

}  // namespace

int wreath_parity_law(long long m, long long l, WreathElement kind, WreathMode mode,
                      int par) {
  if (m < 2 || l < 2) throw std::invalid_argument("wreath laws need m, l >= 2");
  if (mode == WreathMode::imprimitive) {
    if (kind == WreathElement::top) return static_cast<int>((m * par) & 1);
    return par;
  }
  if (kind == WreathElement::top) return half_power_parity(m, l) & par;
  int mpow = static_cast<int>((m & 1) ? 1 : 0);  // m^(l-1) mod 2, l >= 2
  return mpow & par;
}

}  // namespace grouplat::paritylaws
