#pragma once

#include <string>

namespace grouplat::paritylaws {

/// A closed-form parity verdict with the law that produced it.
struct ParityPrediction {
  int value = 0;  // 0 = even, 1 = odd
  std::string law;
  std::string parameters;
};

/// Parity of the diagonal image of s on X^l: l*|X|*Par(s) mod 2.
int diagonal_parity_law(long long n, long long l, int par_s);

/// Parity of the induced permutation on l-subsets: C(n-2, l-1)*Par(s) mod 2.
int powerset_parity_law(long long n, long long l, int par_s);

/// Frobenius a -> a^p on GF(p^f) is even unless p^f = 4, or f is even
/// with p = 3 (mod 4).
bool frobenius_even(long long p, int f);

/// AGL_n(q) is even iff q is even, except (n,q) = (1,2), (2,2).
bool affine_even(int n, long long q);

/// Parity of PGL_d(q) as a subgroup of Sym(PG_d(q)):
/// even iff (d+1)q is even and larger than 6.
int projective_parity_pgl(int d, long long q);

/// Parity of the permutation induced on PG_d(q) by a field automorphism
/// alpha: (1 + q(d+1)(d-2)/2) * Par(alpha) mod 2.
int projective_parity_fieldaut(int d, long long q, int par_alpha);

enum class WreathMode { imprimitive, product };
enum class WreathElement { top, base_coordinate };

/// Parity of the image of a top element (with parity par) or a
/// base-coordinate element in the wreath action of A wr B, A of degree m,
/// B of degree l.
int wreath_parity_law(long long m, long long l, WreathElement kind, WreathMode mode,
                      int par);

/// Parity of C(n, k) via carry counting in base 2.
int binom_parity(long long n, long long k);

}  // namespace grouplat::paritylaws
