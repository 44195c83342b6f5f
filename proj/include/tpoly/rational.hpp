#ifndef TPOLY_RATIONAL_HPP
#define TPOLY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpoly {

// All geometry in this library is exact. Rational is a GMP-backed
// arbitrary-precision rational, always canonical: lowest terms,
// positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class TpolyError : public std::runtime_error {
 public:
  explicit TpolyError(const std::string& what) : std::runtime_error(what) {}
};

/// Input defines an empty or inconsistent polyhedron.
class InfeasibleError : public TpolyError {
 public:
  explicit InfeasibleError(const std::string& what) : TpolyError(what) {}
};

/// Operation requires a non-degenerate (simple, full-dimensional)
/// polytope and the input is not.
class DegenerateError : public TpolyError {
 public:
  explicit DegenerateError(const std::string& what) : TpolyError(what) {}
};

/// Desk-scale size guard exceeded.
class GuardError : public TpolyError {
 public:
  explicit GuardError(const std::string& what) : TpolyError(what) {}
};

inline Integer numer(const Rational& q) { return numerator(q); }
inline Integer denom(const Rational& q) { return denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

/// Parses "7", "-3/2", "0" as an exact rational.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw TpolyError("empty rational literal");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw TpolyError("cannot parse rational literal: '" + s + "'");
  }
}

/// Canonical string form: "n" when integral, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
  if (denom(q) == 1) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

inline Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, denom(q));
  return l;
}

}  // namespace tpoly

#endif
