#pragma once

#include <vector>

#include "ncc/poly.hpp"

namespace ncc {

struct FactorExp {
  Poly f;  // monic irreducible
  int e;   // multiplicity
};

// Deterministic factorization into monic irreducibles over Q or F_p.
// Over Q this is Kronecker's interpolation method on the primitive integer
// model (with a divisor-enumeration budget; exceeding it raises
// UnsupportedField rather than guessing). Over F_p: squarefree split,
// distinct-degree split, then a deterministic equal-degree sweep with a
// brute-force enumeration fallback. Factors are returned sorted.
std::vector<FactorExp> factor_poly(const Poly& f);

bool is_irreducible(const Poly& f);

// Monic linear factors' roots, each once (multiplicities dropped).
std::vector<Scalar> poly_roots(const Poly& f);

// A point of A^1 or P^1: a monic irreducible polynomial, or infinity.
class ClosedPoint {
 public:
  static ClosedPoint at_infinity(const Field& f) {
    ClosedPoint p;
    p.inf_ = true;
    p.p_ = Poly::variable(f);
    return p;
  }
  static ClosedPoint of_poly(const Poly& p);  // verifies monic irreducible
  static ClosedPoint rational(const Scalar& a);

  bool is_infinity() const { return inf_; }
  const Poly& poly() const {
    require(!inf_, Err::BadParameters, "polynomial of the point at infinity");
    return p_;
  }
  const Field& field() const { return p_.field(); }
  int degree() const { return inf_ ? 1 : p_.degree(); }
  bool is_rational() const { return inf_ || p_.degree() == 1; }
  // Coordinate of a rational affine point (monic x - a has value a).
  Scalar value() const;

  bool operator==(const ClosedPoint& o) const { return inf_ == o.inf_ && p_ == o.p_; }
  bool operator!=(const ClosedPoint& o) const { return !(*this == o); }
  int cmp(const ClosedPoint& o) const;

  std::string to_string() const;

 private:
  bool inf_{false};
  Poly p_;
};

}  // namespace ncc
