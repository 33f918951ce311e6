#pragma once

#include "ncc/poly.hpp"

namespace ncc {

// Truncated Laurent expansion at a closed point of the affine line: the
// uniformizer is a monic irreducible g(x), digits are polynomials of degree
// below deg(g) (scalars for rational points and for the abstract uniformizer
// t), and the value is g^floor * rep interpreted g-adically. Exponents in
// [floor, prec) are stored; equality is only defined at equal precision.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Poly& g, int floor, int prec, const Poly& rep);

  static Laurent zero(const Poly& g, int prec) { return Laurent(g, prec - 1, prec, Poly::zero(g.field())); }
  static Laurent one(const Poly& g, int prec) { return Laurent(g, 0, prec, Poly::of_int(g.field(), 1)); }
  // Image of a polynomial under k[x] -> k[[g]], truncated at prec.
  static Laurent from_poly(const Poly& g, const Poly& p, int prec) { return Laurent(g, 0, prec, p); }
  // Image of a rational function regular-or-not at g; exact inputs, so the
  // full requested precision is delivered.
  static Laurent from_rat(const Poly& g, const RatFunc& v, int prec);
  // g^e as a Laurent value.
  static Laurent uniformizer_pow(const Poly& g, int e, int prec) {
    return Laurent(g, e, prec, Poly::of_int(g.field(), 1));
  }

  const Field& field() const { return g_.field(); }
  const Poly& modulus() const { return g_; }
  int residue_degree() const { return g_.degree(); }
  int floor() const { return floor_; }
  int prec() const { return prec_; }
  const Poly& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }  // zero at this precision
  // Exact valuation of the stored representative; prec() when zero.
  int valuation() const;
  // g-adic digit at exponent e (zero below floor; error at/above prec).
  Poly digit(int e) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Scalar& c) const;
  Laurent inv() const;
  Laurent operator/(const Laurent& o) const { return *this * o.inv(); }

  Laurent shifted(int e) const;  // multiply by g^e (exact)
  Laurent truncated(int new_prec) const;
  // Digits at exponents >= e, keeping the stated precision (exact split).
  Laurent high_part(int e) const;

  // Value equality on the overlap window; both operands must carry the same
  // stated precision (mixed precisions are a usage error, never truncated).
  bool operator==(const Laurent& o) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool same_value(const Laurent& o) const;  // compares on min precision

  std::string to_string() const;

 private:
  void reduce();
  Poly g_;
  int floor_{0}, prec_{1};
  Poly rep_;
};

}  // namespace ncc
