#include "ncc/laurent.hpp"

#include <sstream>

namespace ncc {

namespace {
int g_adic_valuation(const Poly& g, Poly& p) {
  // Divides out the largest g-power in place, returning its exponent.
  int v = 0;
  while (!p.is_zero()) {
    auto [q, r] = p.divrem(g);
    if (!r.is_zero()) break;
    p = q;
    ++v;
  }
  return v;
}

Poly inverse_mod_gpow(const Poly& g, const Poly& u, int m) {
  // Newton lifting of the inverse of a unit u (u not divisible by g) mod g^m.
  require(m >= 1, Err::PrecisionExhausted, "inverse requested below one digit");
  auto x = poly_xgcd(u % g, g);
  require(x.g.is_one(), Err::Internal, "non-unit passed to series inversion");
  Poly y = x.u % g;
  int have = 1;
  while (have < m) {
    have = std::min(2 * have, m);
    const Poly mod = g.pow(have);
    y = (y * (Poly::of_int(g.field(), 2) - (u % mod) * y)) % mod;
  }
  return y;
}
}  // namespace

Laurent::Laurent(const Poly& g, int floor, int prec, const Poly& rep)
    : g_(g), floor_(floor), prec_(prec), rep_(rep) {
  require(g.degree() >= 1 && g.is_monic(), Err::BadParameters, "uniformizer must be monic of positive degree");
  require(prec_ > floor_, Err::BadParameters, "precision must exceed the valuation floor");
  reduce();
}

void Laurent::reduce() {
  const int window = prec_ - floor_;
  if (rep_.degree() >= g_.degree() * window) rep_ = rep_ % g_.pow(window);
}

int Laurent::valuation() const {
  if (rep_.is_zero()) return prec_;
  Poly p = rep_;
  return floor_ + g_adic_valuation(g_, p);
}

Poly Laurent::digit(int e) const {
  if (e < floor_) return Poly::zero(field());
  require(e < prec_, Err::PrecisionExhausted,
          "digit at exponent " + std::to_string(e) + " beyond precision " + std::to_string(prec_));
  Poly p = rep_;
  Poly d = Poly::zero(field());
  for (int i = floor_; i <= e; ++i) {
    auto [q, r] = p.divrem(g_);
    d = r;
    p = q;
  }
  return d;
}

Laurent Laurent::operator+(const Laurent& o) const {
  require(g_ == o.g_, Err::BadParameters, "laurent values at different points");
  const int fl = std::min(floor_, o.floor_);
  const int pr = std::min(prec_, o.prec_);
  Poly rep = rep_ * g_.pow(floor_ - fl) + o.rep_ * g_.pow(o.floor_ - fl);
  return Laurent(g_, fl, pr, rep);
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  r.rep_ = -r.rep_;
  return r;
}

Laurent Laurent::operator*(const Scalar& c) const {
  Laurent r = *this;
  r.rep_ = r.rep_ * c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  require(g_ == o.g_, Err::BadParameters, "laurent values at different points");
  // Error term O(g^{min(va + No, vo + Na)}) with exact representative
  // valuations, so multiplying by an exact zero keeps full information.
  const int va = valuation(), vo = o.valuation();
  const int pr = std::min(va + o.prec_, vo + prec_);
  const int fl = floor_ + o.floor_;
  return Laurent(g_, fl, std::max(pr, fl + 1), rep_ * o.rep_);
}

Laurent Laurent::inv() const {
  const int v = valuation();
  require(v < prec_, Err::PrecisionExhausted, "inverse of a value indistinguishable from zero");
  Poly u = rep_;
  const int uval = g_adic_valuation(g_, u);
  (void)uval;
  // value = g^v * u with u a unit known mod g^{prec - v}.
  const int m = prec_ - v;
  Poly y = inverse_mod_gpow(g_, u, m);
  return Laurent(g_, -v, m - v, y);
}

Laurent Laurent::shifted(int e) const { return Laurent(g_, floor_ + e, prec_ + e, rep_); }

Laurent Laurent::truncated(int new_prec) const {
  require(new_prec <= prec_, Err::PrecisionExhausted, "cannot extend precision by truncation");
  if (new_prec <= floor_) return Laurent::zero(g_, new_prec);
  return Laurent(g_, floor_, new_prec, rep_);
}

Laurent Laurent::high_part(int e) const {
  if (e <= floor_) return *this;
  if (e >= prec_) return Laurent::zero(g_, prec_);
  const Poly low = rep_ % g_.pow(e - floor_);
  return Laurent(g_, floor_, prec_, rep_ - low);
}

Laurent Laurent::from_rat(const Poly& g, const RatFunc& v, int prec) {
  if (v.is_zero()) return Laurent::zero(g, prec);
  Poly nu = v.num(), du = v.den();
  const int vn = g_adic_valuation(g, nu);
  const int vd = g_adic_valuation(g, du);
  const int val = vn - vd;
  if (val >= prec) return Laurent::zero(g, prec);
  const int m = prec - val;
  const Poly dinv = inverse_mod_gpow(g, du, m);
  return Laurent(g, val, prec, (nu % g.pow(m)) * dinv);
}

bool Laurent::operator==(const Laurent& o) const {
  require(g_ == o.g_, Err::BadParameters, "laurent values at different points");
  require(prec_ == o.prec_, Err::BadParameters,
          "equality of laurent values at different precisions is undefined");
  return same_value(o);
}

bool Laurent::same_value(const Laurent& o) const {
  require(g_ == o.g_, Err::BadParameters, "laurent values at different points");
  const int pr = std::min(prec_, o.prec_);
  const int fl = std::min(floor_, o.floor_);
  if (pr <= fl) return true;
  Poly d = rep_ * g_.pow(floor_ - fl) - o.rep_ * g_.pow(o.floor_ - fl);
  if (d.is_zero()) return true;
  d = d % g_.pow(pr - fl);
  return d.is_zero();
}

std::string Laurent::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int e = floor_; e < prec_; ++e) {
    const Poly d = digit(e);
    if (d.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << d.to_string() << ")*t^" << e;
  }
  if (first) os << "0";
  os << " + O(t^" << prec_ << ")]";
  return os.str();
}

}  // namespace ncc
