#pragma once

#include <cstdint>
#include <vector>

#include "grouplat/perm.hpp"

namespace grouplat {

/// GF(p^f) with elements indexed 0..p^f-1: the index's base-p digits are
/// the coefficient vector of the element (constant term least
/// significant).  The modulus is the lexicographically least monic
/// irreducible polynomial of degree f, so indexing is reproducible.
class Field {
public:
  Field(long long p, int f);

  long long p() const { return p_; }
  int f() const { return f_; }
  long long size() const { return q_; }
  /// Coefficients of the modulus, constant term first, degree f monic.
  const std::vector<long long>& modulus() const { return modulus_; }
  /// Index of the fixed multiplicative generator u.
  long long primitive() const { return primitive_; }

  long long add(long long a, long long b) const;
  long long sub(long long a, long long b) const;
  long long neg(long long a) const;
  long long mul(long long a, long long b) const;
  long long inv(long long a) const;
  long long power(long long a, long long e) const;
  /// Multiplicative order of a nonzero element.
  long long mult_order(long long a) const;
  long long frobenius(long long a) const { return power(a, p_); }

private:
  long long p_ = 0;
  int f_ = 0;
  long long q_ = 0;
  std::vector<long long> modulus_;
  long long primitive_ = 0;
};

Field make_field(long long p, int f);

/// The permutation a -> a^p of the p^f element indices.
Perm frobenius_perm(const Field& fld);

/// The permutation a -> a^(p^k) (k-th Frobenius power).
Perm field_automorphism_perm(const Field& fld, int k);

bool is_prime(long long n);
/// Writes p and f with n = p^f; false if n is not a prime power.
bool prime_power(long long n, long long* p, int* f);

}  // namespace grouplat
