#include "ncc/field.hpp"

namespace ncc {

namespace {
const char* kErrNames[] = {
    "RankDeficient",    "PrecisionExhausted", "NotContained",  "UnsupportedField",
    "SplitFailure",     "NotSemisimple",      "NotSplit",      "LengthMismatch",
    "NotCentral",       "NotInvertible",      "NotHereditary", "NotStable",
    "ClosureCheckFailed", "InconsistentRank", "BadParameters", "NonRationalPoint",
    "ParseError",       "Internal",
};
}

const char* err_name(Err e) { return kErrNames[static_cast<int>(e)]; }

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  require(a % p != 0, Err::BadParameters, "division by zero in F_p");
  return powmod_u64(a % p, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Scalar Scalar::of_int(const Field& f, long v) {
  Scalar s;
  s.f_ = f;
  if (f.is_q()) {
    s.q_ = v;
  } else {
    const std::uint64_t p = f.characteristic();
    long m = v % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::of_mpq(const Field& f, const mpq_class& v) {
  Scalar s;
  s.f_ = f;
  if (f.is_q()) {
    s.q_ = v;
    s.q_.canonicalize();
    return s;
  }
  const std::uint64_t p = f.characteristic();
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  require(den != 0, Err::BadParameters, "denominator divisible by p");
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  s.r_ = mulmod_u64(n, invmod_u64(d, p), p);
  return s;
}

bool Scalar::is_zero() const { return f_.is_q() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return f_.is_q() ? q_ == 1 : r_ == 1 % f_.characteristic(); }

namespace {
void check_same(const Field& a, const Field& b) {
  require(a == b, Err::BadParameters, "scalars from different fields");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(f_, o.f_);
  Scalar s;
  s.f_ = f_;
  if (f_.is_q()) {
    s.q_ = q_ + o.q_;
  } else {
    const std::uint64_t p = f_.characteristic();
    s.r_ = r_ + o.r_;
    if (s.r_ >= p) s.r_ -= p;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(f_, o.f_);
  Scalar s;
  s.f_ = f_;
  if (f_.is_q()) {
    s.q_ = q_ - o.q_;
  } else {
    const std::uint64_t p = f_.characteristic();
    s.r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p - o.r_;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(f_, o.f_);
  Scalar s;
  s.f_ = f_;
  if (f_.is_q()) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = mulmod_u64(r_, o.r_, f_.characteristic());
  }
  return s;
}

Scalar Scalar::inv() const {
  require(!is_zero(), Err::BadParameters, "inverse of zero");
  Scalar s;
  s.f_ = f_;
  if (f_.is_q()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = invmod_u64(r_, f_.characteristic());
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.f_ = f_;
  if (f_.is_q()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = f_.characteristic() - r_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(f_, o.f_);
  return f_.is_q() ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& o) const {
  check_same(f_, o.f_);
  if (f_.is_q()) return ::cmp(q_, o.q_);
  return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

std::string Scalar::to_string() const {
  return f_.is_q() ? q_.get_str() : std::to_string(r_);
}

}  // namespace ncc
