#ifndef SLIP_PARSE_HPP
#define SLIP_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "slip/polynomial.hpp"

namespace slip {

// Polynomial text grammar: sums of signed terms, a term being an optional
// rational coefficient and '*'-separated variable powers, e.g.
//   "a0^2*b1 - 3/2*a1*b0 + 1".
// Variables resolve against canonical names (x0_1) and aliases (a1, t3).
class PolyParser {
 public:
  explicit PolyParser(RingPtr ring) : ring_(std::move(ring)) {}

  Polynomial parse(const std::string& text) const {
    std::size_t pos = 0;
    std::vector<Term> terms;
    skip_ws(text, pos);
    if (pos == text.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (pos < text.size()) {
      int sign = 1;
      skip_ws(text, pos);
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw std::invalid_argument("expected '+' or '-' at position " +
                                    std::to_string(pos));
      }
      terms.push_back(parse_term(text, pos, sign));
      skip_ws(text, pos);
      first = false;
    }
    return Polynomial(ring_, std::move(terms));
  }

  // Parses and additionally rejects inhomogeneous input.
  Polynomial parse_homogeneous(const std::string& text) const {
    Polynomial p = parse(text);
    if (!p.is_homogeneous())
      throw std::invalid_argument("polynomial is not homogeneous: " + text);
    return p;
  }

 private:
  static void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  // term := factor ('*' factor)*;  factor := number | variable ('^' int)?
  Term parse_term(const std::string& s, std::size_t& pos, int sign) const {
    Rat coeff(sign);
    Monomial mono(ring_->nvars(), 0);
    parse_factor(s, pos, coeff, mono);
    while (true) {
      std::size_t save = pos;
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        parse_factor(s, pos, coeff, mono);
      } else {
        pos = save;
        break;
      }
    }
    return {coeff, mono};
  }

  void parse_factor(const std::string& s, std::size_t& pos, Rat& coeff,
                    Monomial& mono) const {
    skip_ws(s, pos);
    if (pos >= s.size())
      throw std::invalid_argument("unexpected end of polynomial");
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff *= parse_number(s, pos);
      return;
    }
    if (!is_name_start(s[pos]))
      throw std::invalid_argument("unexpected character at position " +
                                  std::to_string(pos));
    std::size_t start = pos;
    while (pos < s.size() && is_name_char(s[pos])) ++pos;
    std::string name = s.substr(start, pos - start);
    int vi = ring_->var_index(name);
    if (vi < 0) throw std::invalid_argument("unknown variable: " + name);
    long exp = 1;
    std::size_t save = pos;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip_ws(s, pos);
      exp = parse_integer(s, pos);
      if (exp < 0) throw std::invalid_argument("negative exponent");
    } else {
      pos = save;
    }
    mono[vi] += static_cast<int>(exp);
  }
  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  static long parse_integer(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  static Rat parse_number(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string num = s.substr(start, pos - start);
    std::size_t save = pos;
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws(s, pos);
      std::size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (dstart == pos) throw std::invalid_argument("expected denominator");
      return parse_rational(num + "/" + s.substr(dstart, pos - dstart));
    }
    pos = save;
    return parse_rational(num);
  }

  RingPtr ring_;
};

inline Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
  return PolyParser(ring).parse(text);
}

inline std::vector<Polynomial> parse_polys(const RingPtr& ring,
                                           const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

}  // namespace slip

#endif
