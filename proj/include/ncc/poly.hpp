#pragma once

#include <utility>
#include <vector>

#include "ncc/field.hpp"

namespace ncc {

// Dense univariate polynomial, coefficients stored low degree first.
// Trailing zero coefficients are trimmed; the zero polynomial has an empty
// coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : f_(f) {}
  Poly(const Field& f, std::vector<Scalar> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly constant(const Scalar& s) { return Poly(s.field(), {s}); }
  static Poly of_int(const Field& f, long v) { return constant(Scalar::of_int(f, v)); }
  // x^k
  static Poly monomial(const Field& f, int k, const Scalar& c);
  static Poly variable(const Field& f) { return monomial(f, 1, Scalar::one(f)); }

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const Scalar& lc() const;
  Scalar coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Scalar::zero(f_);
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Scalar& s) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Quotient and remainder; the divisor must be nonzero.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly operator/(const Poly& d) const;  // exact division, remainder must vanish
  Poly operator%(const Poly& d) const { return divrem(d).second; }

  Poly monic() const;
  Poly derivative() const;
  Poly shift(int k) const;  // multiply by x^k, k >= 0
  Poly pow(int e) const;
  Scalar eval(const Scalar& x) const;
  Poly compose(const Poly& g) const;  // this(g(x))

  // Deterministic total order: by degree, then coefficients from the top.
  int cmp(const Poly& o) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Field f_{};
  std::vector<Scalar> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);  // monic normalized
// g = gcd(a, b) monic, with g = u*a + v*b.
struct XgcdResult {
  Poly g, u, v;
};
XgcdResult poly_xgcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

// Reduced fraction of polynomials; denominator monic and coprime to the
// numerator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Poly& num) : n_(num), d_(Poly::of_int(num.field(), 1)) {}
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc zero(const Field& f) { return RatFunc(Poly::zero(f)); }
  static RatFunc one(const Field& f) { return RatFunc(Poly::of_int(f, 1)); }

  const Poly& num() const { return n_; }
  const Poly& den() const { return d_; }
  const Field& field() const { return n_.field(); }
  bool is_zero() const { return n_.is_zero(); }
  bool is_poly() const { return d_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inv() const;
  bool operator==(const RatFunc& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Poly n_{}, d_{};
};

}  // namespace ncc
