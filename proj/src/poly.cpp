#include "ncc/poly.hpp"

#include <sstream>

namespace ncc {

Poly Poly::monomial(const Field& f, int k, const Scalar& c) {
  require(k >= 0, Err::BadParameters, "negative monomial exponent");
  if (c.is_zero()) return Poly(f);
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
  v.back() = c;
  return Poly(f, std::move(v));
}

const Scalar& Poly::lc() const {
  require(!c_.empty(), Err::BadParameters, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  require(f_ == o.f_, Err::BadParameters, "polynomials over different fields");
  std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < c_.size()) v[i] += c_[i];
    if (i < o.c_.size()) v[i] += o.c_[i];
  }
  return Poly(f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Scalar> v = c_;
  for (auto& x : v) x = -x;
  return Poly(f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  require(f_ == o.f_, Err::BadParameters, "polynomials over different fields");
  if (is_zero() || o.is_zero()) return Poly(f_);
  std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(f_, std::move(v));
}

Poly Poly::operator*(const Scalar& s) const {
  std::vector<Scalar> v = c_;
  for (auto& x : v) x *= s;
  return Poly(f_, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
  if (f_ != o.f_ || c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  require(!d.is_zero(), Err::BadParameters, "polynomial division by zero");
  Poly r = *this;
  if (r.degree() < d.degree()) return {Poly(f_), r};
  std::vector<Scalar> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Scalar::zero(f_));
  const Scalar dinv = d.lc().inv();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int k = r.degree() - d.degree();
    const Scalar c = r.lc() * dinv;
    q[static_cast<std::size_t>(k)] = c;
    r -= d.shift(k) * c;
  }
  return {Poly(f_, std::move(q)), r};
}

Poly Poly::operator/(const Poly& d) const {
  auto [q, r] = divrem(d);
  require(r.is_zero(), Err::Internal, "inexact polynomial division");
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(f_);
  std::vector<Scalar> v;
  v.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Scalar::of_int(f_, static_cast<long>(i)));
  return Poly(f_, std::move(v));
}

Poly Poly::shift(int k) const {
  require(k >= 0, Err::BadParameters, "negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Scalar> v(static_cast<std::size_t>(k), Scalar::zero(f_));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(f_, std::move(v));
}

Poly Poly::pow(int e) const {
  require(e >= 0, Err::BadParameters, "negative power");
  Poly r = Poly::of_int(f_, 1);
  Poly b = *this;
  while (e) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r = Scalar::zero(f_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r = Poly::zero(f_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + Poly::constant(*it);
  return r;
}

int Poly::cmp(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
  for (int i = degree(); i >= 0; --i) {
    int c = coeff(i).cmp(o.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !coeff(i).is_one()) os << coeff(i).to_string();
    if (i > 0) {
      if (!coeff(i).is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::of_int(f, 1), s1 = Poly::zero(f);
  Poly t0 = Poly::zero(f), t1 = Poly::of_int(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = r1;
    r1 = r;
    Poly s = s0 - q * s1;
    s0 = s1;
    s1 = s;
    Poly t = t0 - q * t1;
    t0 = t1;
    t1 = t;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar c = r0.lc().inv();
  return {r0 * c, s0 * c, t0 * c};
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  return ((a * b) / poly_gcd(a, b)).monic();
}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  require(!den.is_zero(), Err::BadParameters, "rational function with zero denominator");
  Poly g = poly_gcd(num, den);
  if (g.is_zero()) g = Poly::of_int(num.field(), 1);
  Poly n = num / g, d = den / g;
  const Scalar c = d.lc().inv();
  n_ = n * c;
  d_ = d * c;
  if (n_.is_zero()) d_ = Poly::of_int(num.field(), 1);
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(n_ * o.d_ + o.n_ * d_, d_ * o.d_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(n_ * o.d_ - o.n_ * d_, d_ * o.d_); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(n_ * o.n_, d_ * o.d_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  require(!o.is_zero(), Err::BadParameters, "division by zero rational function");
  return RatFunc(n_ * o.d_, d_ * o.n_);
}
RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.n_ = -r.n_;
  return r;
}
RatFunc RatFunc::inv() const {
  require(!is_zero(), Err::BadParameters, "inverse of zero rational function");
  return RatFunc(d_, n_);
}

std::string RatFunc::to_string() const {
  if (is_poly()) return n_.to_string();
  return "(" + n_.to_string() + ")/(" + d_.to_string() + ")";
}

}  // namespace ncc
