#include "grouplat/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace grouplat {

Perm::Perm(std::vector<uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint16_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image sequence is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<uint16_t> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("cannot compose permutations of different degrees");
  std::vector<uint16_t> im(images_.size());
  for (size_t x = 0; x < images_.size(); ++x) im[x] = other.images_[images_[x]];
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<uint16_t> im(images_.size());
  for (size_t x = 0; x < images_.size(); ++x) im[images_[x]] = static_cast<uint16_t>(x);
  return Perm(std::move(im));
}

Perm Perm::pow(long long e) const {
  long long n = order();
  e %= n;
  if (e < 0) e += n;
  Perm acc = identity(degree());
  Perm base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<int> cyc;
    int x = static_cast<int>(start);
    while (!seen[x]) {
      seen[x] = true;
      cyc.push_back(x);
      x = images_[x];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

long long Perm::order() const {
  long long ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<long long>(c.size()));
  return ord;
}

int Perm::parity() const {
  int p = 0;
  for (const auto& c : cycles()) p ^= static_cast<int>(c.size() - 1) & 1;
  return p;
}

int Perm::fixed_points() const {
  int n = 0;
  for (size_t x = 0; x < images_.size(); ++x)
    if (images_[x] == x) ++n;
  return n;
}

std::string Perm::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

std::string Perm::to_image_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ',';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

namespace {

Perm parse_image_list(const std::string& text) {
  std::vector<uint16_t> im;
  size_t i = 1;
  while (i < text.size() && text[i] != ']') {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
    if (i >= text.size() || text[i] == ']') break;
    size_t j = i;
    while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw std::invalid_argument("bad image list: " + text);
    im.push_back(static_cast<uint16_t>(std::stoi(text.substr(i, j - i))));
    i = j;
  }
  return Perm(std::move(im));
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  int maxpt = -1;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') { ++i; continue; }
    if (text[i] != '(') throw std::invalid_argument("bad cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (i < text.size() && text[i] != ')') {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i >= text.size() || text[i] == ')') break;
      size_t j = i;
      while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad cycle notation: " + text);
      int pt = std::stoi(text.substr(i, j - i));
      maxpt = std::max(maxpt, pt);
      cyc.push_back(pt);
      i = j;
    }
    if (i >= text.size()) throw std::invalid_argument("unclosed cycle: " + text);
    ++i;  // ')'
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
  }
  int n = degree >= 0 ? degree : std::max(maxpt + 1, 1);
  if (maxpt >= n) throw std::invalid_argument("cycle point exceeds degree");
  std::vector<uint16_t> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (const auto& cyc : cycles)
    for (size_t k = 0; k < cyc.size(); ++k)
      im[cyc[k]] = static_cast<uint16_t>(cyc[(k + 1) % cyc.size()]);
  return Perm(std::move(im));
}

}  // namespace

Perm Perm::parse(const std::string& text, int degree) {
  size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty permutation text");
  if (text[first] == '[') {
    Perm p = parse_image_list(text.substr(first));
    if (degree >= 0 && p.degree() != degree)
      throw std::invalid_argument("image list degree mismatch");
    return p;
  }
  return parse_cycles(text.substr(first), degree);
}

long long CycleCensus::total_points() const {
  long long t = 0;
  for (auto& [e, pts] : entries) t += pts;
  return t;
}

int parity(const Perm& s) { return s.parity(); }

CycleCensus cycle_census(const Perm& s) {
  CycleCensus c;
  long long fixed = s.fixed_points();
  if (fixed > 0) c.entries[1] = fixed;
  for (const auto& cyc : s.cycles())
    c.entries[static_cast<long long>(cyc.size())] += static_cast<long long>(cyc.size());
  return c;
}

int moebius(long long d) {
  if (d <= 0) throw std::invalid_argument("moebius of non-positive integer");
  int primes = 0;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      ++primes;
    }
  }
  if (d > 1) ++primes;
  return (primes & 1) ? -1 : 1;
}

int parity_from_fixpoints(const std::map<long long, long long>& fix, long long f) {
  if (f < 1) throw std::invalid_argument("order must be positive");
  auto fix_at = [&](long long k) {
    auto it = fix.find(k);
    if (it == fix.end())
      throw std::invalid_argument("missing Fix value for divisor " + std::to_string(k));
    return it->second;
  };
  long long total = 0;
  for (long long e = 2; e <= f; e += 2) {
    if (f % e != 0) continue;
    long long inner = 0;
    for (long long d = 1; d <= e; d += 2) {
      if (e % d != 0) continue;
      inner += moebius(d) * (fix_at(e / d) - fix_at(e / (2 * d)));
    }
    if (inner % e != 0)
      throw std::runtime_error("inconsistent fixed-point census at e=" + std::to_string(e));
    total += inner / e;
  }
  return static_cast<int>(((total % 2) + 2) % 2);
}

}  // namespace grouplat
