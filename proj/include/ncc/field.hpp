#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ncc/errors.hpp"

namespace ncc {

bool is_prime_u64(std::uint64_t n);

// Base field of a computation: the rationals or a prime field F_p.
// All scalars of one computation share one Field value.
class Field {
 public:
  Field() = default;  // rationals
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p) {
    require(p >= 2 && is_prime_u64(p), Err::BadParameters,
            "field characteristic must be prime, got " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
  }

  bool is_q() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field&) const = default;

  std::string to_string() const { return is_q() ? "Q" : "F" + std::to_string(p_); }

 private:
  std::uint64_t p_{0};  // 0 encodes the rationals
};

// Exact element of a Field. Arithmetic between scalars of different fields
// is a usage error and throws.
class Scalar {
 public:
  Scalar() = default;  // zero of Q; avoid except as a placeholder
  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  static Scalar of_int(const Field& f, long v);
  static Scalar of_mpq(const Field& f, const mpq_class& v);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Total order used only for deterministic tie-breaking and output.
  int cmp(const Scalar& o) const;

  // Value access for I/O.
  const mpq_class& rat() const { return q_; }
  std::uint64_t residue() const { return r_; }

  std::string to_string() const;

 private:
  Scalar(const Field& f, long v) { *this = of_int(f, v); }
  friend class FieldOpsAccess;

  Field f_{};
  mpq_class q_{0};       // used when f_.is_q()
  std::uint64_t r_{0};   // used otherwise, in [0, p)
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

}  // namespace ncc
