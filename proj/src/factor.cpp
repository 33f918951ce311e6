#include "ncc/factor.hpp"

#include <algorithm>
#include <map>

namespace ncc {

namespace {

// ---------- F_p path ----------

Poly powmod_poly(const Poly& base, const mpz_class& e, const Poly& mod) {
  const Field& f = base.field();
  Poly r = Poly::of_int(f, 1);
  Poly b = base % mod;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) r = (r * b) % mod;
    k >>= 1;
    if (k > 0) b = (b * b) % mod;
  }
  return r;
}

// Squarefree decomposition in characteristic p (handles f = g(x^p)).
void squarefree_fp(const Poly& f, int mult, std::vector<FactorExp>& out) {
  const Field& k = f.field();
  const auto p = static_cast<int>(k.characteristic());
  Poly d = f.derivative();
  if (d.is_zero()) {
    // f = g(x^p); coefficients are their own p-th roots over the prime field.
    std::vector<Scalar> g;
    for (int i = 0; i * p <= f.degree(); ++i) g.push_back(f.coeff(i * p));
    squarefree_fp(Poly(k, g), mult * p, out);
    return;
  }
  Poly c = poly_gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.push_back({z.monic(), mult * i});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one()) {
    std::vector<Scalar> g;
    for (int j = 0; j * p <= c.degree(); ++j) g.push_back(c.coeff(j * p));
    squarefree_fp(Poly(k, g), mult * p, out);
  }
}

// Split a squarefree product of irreducibles of equal degree d.
void edf_fp(const Poly& g, int d, std::vector<Poly>& out) {
  const Field& k = g.field();
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const std::uint64_t p = k.characteristic();
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));

  auto try_split = [&](const Poly& w) -> bool {
    Poly h = poly_gcd(w, g);
    if (h.degree() <= 0 || h.degree() >= g.degree()) return false;
    edf_fp(h, d, out);
    edf_fp(g / h * g.lc().inv(), d, out);
    return true;
  };

  if (p % 2 == 1) {
    const mpz_class e = (pd - 1) / 2;
    // Deterministic sweep over low-degree shifts.
    for (int dh = 1; dh <= d; ++dh) {
      const std::uint64_t shifts = dh == 1 ? p : std::min<std::uint64_t>(p, 64);
      for (std::uint64_t c = 0; c < shifts; ++c) {
        Poly h = Poly::monomial(k, dh, Scalar::one(k)) + Poly::constant(Scalar::of_int(k, static_cast<long>(c)));
        Poly w = powmod_poly(h, e, g) - Poly::of_int(k, 1);
        if (try_split(w % g)) return;
      }
    }
  } else {
    // Trace map splitting for p = 2.
    for (int j = 1; j <= g.degree(); ++j) {
      Poly h = Poly::monomial(k, j, Scalar::one(k)) % g;
      Poly tr = h;
      Poly cur = h;
      for (int i = 1; i < d; ++i) {
        cur = (cur * cur) % g;
        tr = (tr + cur) % g;
      }
      if (try_split(tr)) return;
    }
  }
  // Guaranteed fallback: enumerate monic irreducibles of degree d.
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, static_cast<unsigned long>(d));
  require(count <= (1 << 22), Err::UnsupportedField,
          "equal-degree splitting beyond enumeration budget");
  const std::uint64_t total = count.get_ui();
  Poly rem = g;
  for (std::uint64_t idx = 0; idx < total && rem.degree() > d; ++idx) {
    std::vector<Scalar> cs;
    std::uint64_t t = idx;
    for (int i = 0; i < d; ++i) {
      cs.push_back(Scalar::of_int(k, static_cast<long>(t % p)));
      t /= p;
    }
    cs.push_back(Scalar::one(k));
    Poly cand(k, cs);
    auto [q, r] = rem.divrem(cand);
    if (r.is_zero() && is_irreducible(cand)) {
      out.push_back(cand);
      rem = q.monic();
    }
  }
  if (rem.degree() > 0) out.push_back(rem.monic());
}

std::vector<FactorExp> factor_fp(const Poly& f) {
  std::vector<FactorExp> sqf;
  squarefree_fp(f.monic(), 1, sqf);
  std::vector<FactorExp> out;
  const Field& k = f.field();
  const std::uint64_t p = k.characteristic();
  for (const auto& [part, mult] : sqf) {
    // Distinct-degree split of the squarefree part.
    Poly rem = part;
    Poly h = Poly::variable(k) % rem;
    const Poly x = Poly::variable(k);
    int d = 0;
    while (rem.degree() > 0) {
      ++d;
      if (rem.degree() < 2 * d) {
        out.push_back({rem.monic(), mult});
        break;
      }
      h = powmod_poly(h, mpz_class(static_cast<unsigned long>(p)), rem);
      Poly g = poly_gcd(h - x, rem);
      if (g.degree() > 0) {
        std::vector<Poly> irr;
        edf_fp(g, d, irr);
        for (auto& q : irr) out.push_back({q, mult});
        rem = rem / g;
        h = h % rem;
      }
    }
  }
  return out;
}

// ---------- Q path (primitive integer model, Kronecker) ----------

using ZPoly = std::vector<mpz_class>;  // low degree first, trimmed

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

mpz_class zeval(const ZPoly& f, long x) {
  mpz_class r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
  return r;
}

// Exact division test g = q * h over Z; h must have nonzero leading coeff.
bool zdivides(const ZPoly& g, const ZPoly& h, ZPoly& q) {
  ZPoly r = g;
  q.assign(static_cast<std::size_t>(std::max(0, zdeg(g) - zdeg(h) + 1)), mpz_class(0));
  while (zdeg(r) >= zdeg(h)) {
    mpz_class qc, rem;
    mpz_fdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), h.back().get_mpz_t());
    if (rem != 0) return false;
    const int k = zdeg(r) - zdeg(h);
    q[static_cast<std::size_t>(k)] = qc;
    for (int i = 0; i <= zdeg(h); ++i) r[static_cast<std::size_t>(i + k)] -= qc * h[static_cast<std::size_t>(i)];
    ztrim(r);
  }
  return r.empty();
}

constexpr unsigned long kTrialBound = 1 << 20;
constexpr std::size_t kTupleBudget = 1u << 21;

std::vector<mpz_class> positive_divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  require(n != 0, Err::Internal, "divisors of zero");
  std::vector<std::pair<mpz_class, int>> pf;
  for (unsigned long d = 2; d <= kTrialBound && n > 1; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      pf.emplace_back(mpz_class(d), e);
    }
    mpz_class dd(d);
    if (dd * dd > n) break;
  }
  if (n > 1) {
    // Remaining cofactor: prime iff no divisor <= trial bound and below its square.
    mpz_class b(kTrialBound);
    require(n <= b * b, Err::UnsupportedField,
            "integer beyond deterministic factorization budget: " + n0.get_str());
    pf.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : pf) {
    const std::size_t sz = divs.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Find one nontrivial factor of the squarefree primitive g, or return false.
bool kronecker_split(const ZPoly& g, ZPoly& factor) {
  const int n = zdeg(g);
  for (int d = 1; d <= n / 2; ++d) {
    // Evaluation points 0, 1, -1, 2, -2, ...
    std::vector<long> pts;
    for (long a = 0; static_cast<int>(pts.size()) < d + 1; a = a > 0 ? -a : -a + 1) pts.push_back(a);
    std::vector<std::vector<mpz_class>> candidates;
    std::size_t total = 1;
    for (long a : pts) {
      const mpz_class v = zeval(g, a);
      if (v == 0) {
        // The evaluation point is a root: x - a is a factor.
        factor = {mpz_class(-a), mpz_class(1)};
        return true;
      }
      std::vector<mpz_class> divs = positive_divisors(v);
      std::vector<mpz_class> with_sign;
      with_sign.reserve(divs.size() * 2);
      for (const auto& e : divs) {
        with_sign.push_back(e);
        with_sign.push_back(-e);
      }
      total *= with_sign.size();
      require(total <= kTupleBudget, Err::UnsupportedField,
              "Kronecker divisor enumeration beyond budget");
      candidates.push_back(std::move(with_sign));
    }
    // Lagrange interpolation through (pts[i], w[i]) for every tuple w.
    std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1, 0);
    const Field q = Field::rationals();
    while (true) {
      Poly cand = Poly::zero(q);
      for (int i = 0; i <= d; ++i) {
        Poly li = Poly::of_int(q, 1);
        mpq_class denom = 1;
        for (int j = 0; j <= d; ++j) {
          if (j == i) continue;
          li *= Poly(q, {Scalar::of_int(q, -pts[static_cast<std::size_t>(j)]), Scalar::one(q)});
          denom *= (pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)]);
        }
        const mpq_class wi(candidates[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
        cand += li * Scalar::of_mpq(q, wi / denom);
      }
      if (cand.degree() == d) {
        ZPoly h(static_cast<std::size_t>(d) + 1);
        bool integral = true;
        for (int i = 0; i <= d && integral; ++i) {
          const mpq_class& c = cand.coeff(i).rat();
          if (c.get_den() != 1) integral = false;
          else h[static_cast<std::size_t>(i)] = c.get_num();
        }
        ZPoly quot;
        if (integral && zdivides(g, h, quot)) {
          factor = h;
          return true;
        }
      }
      int pos = d;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == candidates[static_cast<std::size_t>(pos)].size()) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return false;
}

void factor_z_squarefree(const ZPoly& g, std::vector<ZPoly>& out) {
  if (zdeg(g) <= 0) return;
  ZPoly h;
  if (zdeg(g) == 1 || !kronecker_split(g, h)) {
    out.push_back(g);
    return;
  }
  ZPoly q;
  zdivides(g, h, q);
  factor_z_squarefree(h, out);
  factor_z_squarefree(q, out);
}

std::vector<FactorExp> factor_q(const Poly& f) {
  const Field q = Field::rationals();
  // Primitive integer model.
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) lcm_den = lcm(lcm_den, c.rat().get_den());
  ZPoly zf;
  for (const auto& c : f.coeffs()) zf.push_back(mpz_class(c.rat() * lcm_den));
  mpz_class content = 0;
  for (const auto& c : zf) content = gcd(content, c);
  for (auto& c : zf) c /= content;

  // Multiplicity split via gcd with the derivative (characteristic zero).
  std::vector<FactorExp> out;
  Poly cur(q, [&] {
    std::vector<Scalar> cs;
    for (const auto& c : zf) cs.push_back(Scalar::of_mpq(q, mpq_class(c)));
    return cs;
  }());
  cur = cur.monic();
  int mult = 0;
  std::map<int, Poly> squarefree_levels;
  while (cur.degree() > 0) {
    ++mult;
    Poly g = poly_gcd(cur, cur.derivative());
    squarefree_levels[mult] = cur / g;  // product of factors with multiplicity >= mult
    cur = g;
  }
  // Convert cumulative products into exact-multiplicity parts.
  std::map<int, Poly> exact;
  for (auto it = squarefree_levels.begin(); it != squarefree_levels.end(); ++it) {
    auto next = std::next(it);
    exact[it->first] = next == squarefree_levels.end() ? it->second : it->second / next->second;
  }
  for (const auto& [e, part] : exact) {
    if (part.degree() <= 0) continue;
    mpz_class den = 1;
    for (const auto& c : part.coeffs()) den = lcm(den, c.rat().get_den());
    ZPoly zp;
    for (const auto& c : part.coeffs()) zp.push_back(mpz_class(c.rat() * den));
    mpz_class cont = 0;
    for (const auto& c : zp) cont = gcd(cont, c);
    for (auto& c : zp) c /= cont;
    std::vector<ZPoly> irr;
    factor_z_squarefree(zp, irr);
    for (const auto& h : irr) {
      std::vector<Scalar> cs;
      for (const auto& c : h) cs.push_back(Scalar::of_mpq(q, mpq_class(c)));
      out.push_back({Poly(q, cs).monic(), e});
    }
  }
  return out;
}

}  // namespace

std::vector<FactorExp> factor_poly(const Poly& f) {
  require(f.degree() >= 1, Err::BadParameters, "factorization of a constant");
  std::vector<FactorExp> out = f.field().is_q() ? factor_q(f) : factor_fp(f);
  std::sort(out.begin(), out.end(), [](const FactorExp& a, const FactorExp& b) {
    return a.f.cmp(b.f) < 0;
  });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  if (f.field().is_q()) {
    auto fs = factor_q(f);
    return fs.size() == 1 && fs[0].e == 1;
  }
  // Direct distinct-degree criterion over F_p.
  const Field& k = f.field();
  const std::uint64_t p = k.characteristic();
  const int n = f.degree();
  if (!poly_gcd(f, f.derivative()).is_one()) return false;
  const Poly x = Poly::variable(k);
  mpz_class pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, static_cast<unsigned long>(n));
  if (!(powmod_poly(x, pn, f) - x % f).is_zero()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool prime_q = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) prime_q = false;
    if (!prime_q) continue;
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(n / q));
    Poly h = powmod_poly(x, e, f) - x;
    if (!poly_gcd(h, f).is_one()) return false;
  }
  return true;
}

std::vector<Scalar> poly_roots(const Poly& f) {
  std::vector<Scalar> roots;
  for (const auto& [g, e] : factor_poly(f))
    if (g.degree() == 1) roots.push_back(-g.coeff(0));
  return roots;
}

ClosedPoint ClosedPoint::of_poly(const Poly& p) {
  require(p.degree() >= 1, Err::BadParameters, "closed point needs positive degree");
  require(p.is_monic(), Err::BadParameters, "closed point polynomial must be monic");
  require(is_irreducible(p), Err::BadParameters,
          "closed point polynomial must be irreducible: " + p.to_string());
  ClosedPoint c;
  c.p_ = p;
  return c;
}

ClosedPoint ClosedPoint::rational(const Scalar& a) {
  ClosedPoint c;
  c.p_ = Poly(a.field(), {-a, Scalar::one(a.field())});
  return c;
}

Scalar ClosedPoint::value() const {
  require(!inf_ && p_.degree() == 1, Err::NonRationalPoint, "value of a non-rational point");
  return -p_.coeff(0);
}

int ClosedPoint::cmp(const ClosedPoint& o) const {
  if (inf_ != o.inf_) return inf_ ? 1 : -1;
  if (inf_) return 0;
  return p_.cmp(o.p_);
}

std::string ClosedPoint::to_string() const { return inf_ ? "infinity" : "(" + p_.to_string() + ")"; }

}  // namespace ncc
