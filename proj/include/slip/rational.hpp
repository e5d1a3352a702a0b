#ifndef SLIP_RATIONAL_HPP
#define SLIP_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace slip {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_one(const Rat& q) { return q == 1; }

// Parses "p", "-p", "p/q" with optional sign.  Throws on malformed input.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace slip

#endif
