#ifndef SLIP_POLYNOMIAL_HPP
#define SLIP_POLYNOMIAL_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slip/monomial.hpp"
#include "slip/multidegree.hpp"
#include "slip/order.hpp"
#include "slip/rational.hpp"
#include "slip/ring.hpp"

namespace slip {

struct Term {
  Rat coeff;
  Monomial mono;
};

// Sparse polynomial over Q.  Terms are kept in a canonical structural order
// (exponent vectors, lexicographically descending) so equality and printing
// are deterministic independent of any monomial order; order-sensitive code
// sorts its own views.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    for (auto& t : terms) add_term(std::move(t));
    normalize();
  }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial monomial(RingPtr ring, Monomial m, Rat c = Rat(1)) {
    Polynomial p(std::move(ring));
    p.add_term({std::move(c), std::move(m)});
    p.normalize();
    return p;
  }

  static Polynomial variable(const RingPtr& ring, int i) {
    Monomial m(ring->nvars(), 0);
    m[i] = 1;
    return monomial(ring, std::move(m));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_monomial() const { return terms_.size() == 1 && is_one(terms_[0].coeff); }
  bool is_single_term() const { return terms_.size() == 1; }

  void check_ring(const Polynomial& o) const {
    if (ring_ && o.ring_ && ring_ != o.ring_ && ring_->signature() != o.ring_->signature())
      throw std::invalid_argument("polynomial ring mismatch");
  }

  Polynomial operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial r = *this;
    for (const auto& t : o.terms_) r.add_term(t);
    r.normalize();
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(ring_ ? ring_ : o.ring_);
    for (const auto& a : terms_)
      for (const auto& b : o.terms_)
        r.add_term({a.coeff * b.coeff, mono_mul(a.mono, b.mono)});
    r.normalize();
    return r;
  }

  Polynomial scale(const Rat& c) const {
    if (slip::is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial mul_term(const Rat& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (slip::is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
      t.coeff *= c;
      t.mono = mono_mul(t.mono, m);
    }
    return r;  // term-wise shift preserves the structural order
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Degree of a homogeneous polynomial; nullopt for 0 or inhomogeneous input.
  std::optional<MultiDegree> homogeneous_degree() const {
    if (terms_.empty() || !ring_) return std::nullopt;
    MultiDegree d = ring_->degree_of(terms_[0].mono);
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (ring_->degree_of(terms_[i].mono) != d) return std::nullopt;
    return d;
  }

  bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

  std::vector<Polynomial> homogeneous_components() const {
    std::vector<std::pair<MultiDegree, Polynomial>> parts;
    for (const auto& t : terms_) {
      MultiDegree d = ring_->degree_of(t.mono);
      bool found = false;
      for (auto& [pd, pp] : parts)
        if (pd == d) {
          pp.add_term(t);
          found = true;
          break;
        }
      if (!found) {
        Polynomial p(ring_);
        p.add_term(t);
        parts.emplace_back(d, std::move(p));
      }
    }
    std::vector<Polynomial> out;
    for (auto& [d, p] : parts) {
      p.normalize();
      out.push_back(std::move(p));
    }
    return out;
  }

  const Term& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
  }

  std::string str() const;

 private:
  void add_term(Term t) {
    if (slip::is_zero(t.coeff)) return;
    terms_.push_back(std::move(t));
    dirty_ = true;
  }

  void normalize() {
    if (!dirty_) return;
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono)
        merged.back().coeff += t.coeff;
      else
        merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return slip::is_zero(t.coeff); }),
                 merged.end());
    terms_ = std::move(merged);
    dirty_ = false;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
  bool dirty_ = false;
};

inline std::string mono_str(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.aliases[i].empty() ? ring.names[i] : ring.aliases[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rat c = t.coeff;
    if (i == 0) {
      if (sgn(c) < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    std::string ms = mono_str(*ring_, t.mono);
    if (!is_one(c) || ms == "1") {
      s += to_string(c);
      if (ms != "1") s += "*";
    }
    if (ms != "1") s += ms;
  }
  return s;
}

}  // namespace slip

#endif
