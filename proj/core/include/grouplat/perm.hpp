#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace grouplat {

/// Thrown when an operation refuses to run because a search/size budget
/// would be exceeded.  Callers may catch it and fall back on metadata.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// A permutation of {0..n-1}, stored as its image sequence.
/// Immutable after construction; all operations return new values.
/// Composition is left-to-right: (x)(a*b) = ((x)a)b.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<uint16_t> images);

  static Perm identity(int degree);

  /// Parse image-list form "[1,0,3,4,2]" or cycle form "(0 1)(2 3 4)".
  /// For cycle form the degree may exceed the largest moved point;
  /// pass degree = -1 to infer it (largest point + 1, at least 1).
  static Perm parse(const std::string& text, int degree = -1);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int x) const { return images_[x]; }
  const std::vector<uint16_t>& images() const { return images_; }

  Perm operator*(const Perm& other) const;  // this, then other
  Perm inverse() const;
  Perm pow(long long e) const;

  bool is_identity() const;
  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  /// Disjoint cycles in canonical order (each cycle starts at its least
  /// point, cycles sorted by least point).  Fixed points omitted.
  std::vector<std::vector<int>> cycles() const;

  long long order() const;

  /// 0 = even, 1 = odd.
  int parity() const;

  int fixed_points() const;
  int support_size() const { return degree() - fixed_points(); }

  std::string to_cycle_string() const;   // "(0 1)(2 3 4)", identity -> "()"
  std::string to_image_string() const;   // "[1,0,3,4,2]"

private:
  std::vector<uint16_t> images_;
};

/// Point counts by orbit length: entries[e] = number of points lying on
/// cycles of length e.  Absent keys mean zero.
struct CycleCensus {
  std::map<long long, long long> entries;

  long long total_points() const;
};

int parity(const Perm& s);
CycleCensus cycle_census(const Perm& s);

/// Evaluates the fixed-point parity formula
///   Par s = sum over even e | f of (1/e) * sum over odd d | e of
///           mu(d) * (Fix(s^(e/d)) - Fix(s^(e/2d)))   (mod 2).
/// `fix` must supply Fix(s^k) for every divisor k of f.
/// Throws std::invalid_argument on a missing divisor key and
/// std::runtime_error if an intermediate division is not exact
/// (which signals an inconsistent census).
int parity_from_fixpoints(const std::map<long long, long long>& fix, long long f);

int moebius(long long d);

}  // namespace grouplat
