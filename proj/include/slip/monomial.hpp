#ifndef SLIP_MONOMIAL_HPP
#define SLIP_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace slip {

// Monomial = exponent vector, one entry per ring variable.
using Monomial = std::vector<int>;

inline Monomial mono_one(std::size_t nvars) { return Monomial(nvars, 0); }

inline bool mono_is_one(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

inline int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// b / a; caller guarantees divisibility.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], b[i]);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace slip

#endif
