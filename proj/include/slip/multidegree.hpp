#ifndef SLIP_MULTIDEGREE_HPP
#define SLIP_MULTIDEGREE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace slip {

// Element of Pic(X) ~ Z^p in the fixed basis of the ring.  Componentwise
// partial order; comparing vectors of different lengths is an error.
struct MultiDegree {
  std::vector<long> v;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<long> coords) : v(std::move(coords)) {}
  MultiDegree(std::initializer_list<long> coords) : v(coords) {}

  std::size_t size() const { return v.size(); }
  long operator[](std::size_t i) const { return v[i]; }
  long& operator[](std::size_t i) { return v[i]; }

  static MultiDegree zero(std::size_t p) { return MultiDegree(std::vector<long>(p, 0)); }

  void check_same_rank(const MultiDegree& o) const {
    if (v.size() != o.v.size())
      throw std::invalid_argument("multidegree rank mismatch");
  }

  MultiDegree operator+(const MultiDegree& o) const {
    check_same_rank(o);
    MultiDegree r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
  }

  MultiDegree operator-(const MultiDegree& o) const {
    check_same_rank(o);
    MultiDegree r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
    return r;
  }

  bool operator==(const MultiDegree& o) const { return v == o.v; }
  bool operator!=(const MultiDegree& o) const { return v != o.v; }

  // Componentwise partial order.
  bool leq(const MultiDegree& o) const {
    check_same_rank(o);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] > o.v[i]) return false;
    return true;
  }

  bool nonneg() const {
    for (long x : v)
      if (x < 0) return false;
    return true;
  }

  // Lexicographic; used only as a deterministic total order for maps/sorting.
  bool operator<(const MultiDegree& o) const { return v < o.v; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  }
};

inline MultiDegree join(const MultiDegree& a, const MultiDegree& b) {
  a.check_same_rank(b);
  MultiDegree r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i)
    if (b.v[i] > r.v[i]) r.v[i] = b.v[i];
  return r;
}

}  // namespace slip

#endif
