#ifndef SLIP_ORDER_HPP
#define SLIP_ORDER_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "slip/monomial.hpp"

namespace slip {

// Monomial orders are explicit values passed to every order-sensitive
// operation; nothing in the library keeps an ambient global order.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Product, Elimination };

  // priority[0] is the greatest variable.
  static MonomialOrder lex(std::vector<int> priority) {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.priority_ = std::move(priority);
    return o;
  }

  static MonomialOrder grevlex(std::vector<int> priority) {
    MonomialOrder o;
    o.kind_ = Kind::Grevlex;
    o.priority_ = std::move(priority);
    return o;
  }

  static MonomialOrder grevlex(std::size_t nvars) {
    std::vector<int> p(nvars);
    for (std::size_t i = 0; i < nvars; ++i) p[i] = static_cast<int>(i);
    return grevlex(std::move(p));
  }

  // Product order on a ring whose variables split as [X-part | Y-part] at
  // `split`: the Y-part dominates, ties are broken on the X-part.
  static MonomialOrder product(int split, MonomialOrder on_x, MonomialOrder on_y) {
    MonomialOrder o;
    o.kind_ = Kind::Product;
    o.split_ = split;
    o.sub_x_ = std::make_shared<MonomialOrder>(std::move(on_x));
    o.sub_y_ = std::make_shared<MonomialOrder>(std::move(on_y));
    return o;
  }

  // Any monomial involving an eliminated variable beats any monomial free of
  // them, so a GB leading term outside `eliminated` certifies the whole
  // polynomial lies in the subring.
  static MonomialOrder elimination(std::vector<bool> eliminated, std::size_t nvars) {
    MonomialOrder o;
    o.kind_ = Kind::Elimination;
    o.elim_ = std::move(eliminated);
    o.elim_.resize(nvars, false);
    return o;
  }

  Kind kind() const { return kind_; }
  const std::vector<bool>& eliminated() const { return elim_; }

  // -1, 0, +1 for a < b, a == b, a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex: {
        for (int i : priority_) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      }
      case Kind::Grevlex:
        return cmp_grevlex(a, b, priority_);
      case Kind::Product: {
        int c = cmp_slice(a, b, split_, static_cast<int>(a.size()), *sub_y_);
        if (c) return c;
        return cmp_slice(a, b, 0, split_, *sub_x_);
      }
      case Kind::Elimination: {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (elim_[i]) da += a[i], db += b[i];
        if (da != db) return da > db ? 1 : -1;
        int c = cmp_grevlex_masked(a, b, elim_, true);
        if (c) return c;
        return cmp_grevlex_masked(a, b, elim_, false);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  // Stable cache key for per-ideal Groebner bases.
  std::string signature() const {
    std::string s;
    switch (kind_) {
      case Kind::Lex: s = "lex"; break;
      case Kind::Grevlex: s = "grevlex"; break;
      case Kind::Product:
        return "product[" + std::to_string(split_) + ";" + sub_x_->signature() +
               ";" + sub_y_->signature() + "]";
      case Kind::Elimination: {
        s = "elim[";
        for (std::size_t i = 0; i < elim_.size(); ++i) s += elim_[i] ? '1' : '0';
        return s + "]";
      }
    }
    s += "[";
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(priority_[i]);
    }
    return s + "]";
  }

 private:
  static int cmp_grevlex(const Monomial& a, const Monomial& b,
                         const std::vector<int>& priority) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
      int d = a[*it] - b[*it];
      if (d) return d > 0 ? -1 : 1;
    }
    return 0;
  }

  static int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                                const std::vector<bool>& mask, bool want) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask[i] == want) da += a[i], db += b[i];
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (mask[i] != want) continue;
      int d = a[i] - b[i];
      if (d) return d > 0 ? -1 : 1;
    }
    return 0;
  }

  static int cmp_slice(const Monomial& a, const Monomial& b, int lo, int hi,
                       const MonomialOrder& sub) {
    Monomial sa(a.begin() + lo, a.begin() + hi);
    Monomial sb(b.begin() + lo, b.begin() + hi);
    return sub.cmp(sa, sb);
  }

  Kind kind_ = Kind::Grevlex;
  std::vector<int> priority_;
  int split_ = 0;
  std::shared_ptr<const MonomialOrder> sub_x_, sub_y_;
  std::vector<bool> elim_;
};

}  // namespace slip

#endif
