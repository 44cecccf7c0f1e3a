#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

#include "quadorb/mp.hpp"

namespace quadorb {

/// Element a + b*sqrt(D) of Q(sqrt(D)) with exact rational coordinates.
/// D is carried per value; mixing two distinct D in one operation is an
/// error, not a coercion.  For D > 0 the real embedding takes sqrt(D) > 0.
class SurdD {
 public:
  SurdD() : D_(5), a_(0), b_(0) {}
  SurdD(long long D, mpq_class a, mpq_class b);

  static SurdD integer(long long D, long long n) { return SurdD(D, mpq_class(n), 0); }

  long long D() const { return D_; }
  const mpq_class& p() const { return a_; }
  const mpq_class& q() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  SurdD conj() const { return SurdD(D_, a_, -b_); }
  mpq_class norm() const { return a_ * a_ - b_ * b_ * D_; }
  mpq_class trace() const { return 2 * a_; }

  SurdD operator-() const { return SurdD(D_, -a_, -b_); }
  friend SurdD operator+(const SurdD& x, const SurdD& y);
  friend SurdD operator-(const SurdD& x, const SurdD& y);
  friend SurdD operator*(const SurdD& x, const SurdD& y);
  friend SurdD operator/(const SurdD& x, const SurdD& y);

  bool operator==(const SurdD& o) const { return D_ == o.D_ && a_ == o.a_ && b_ == o.b_; }

  /// Exact sign of the real embedding.  Requires D > 0.
  int sign() const;
  /// Exact three-way comparison of real embeddings (same D, D > 0).
  std::strong_ordering compare(const SurdD& o) const;
  bool operator<(const SurdD& o) const { return compare(o) == std::strong_ordering::less; }

  /// Real embedding with |result - x| < 2^-bits * max(1,|x|); bits >= 16.
  MpReal to_real(mpfr_prec_t bits) const;

  std::string str() const;

 private:
  long long D_;
  mpq_class a_, b_;
};

/// Floor of sqrt(n) for n >= 0.
mpz_class isqrt(const mpz_class& n);
bool is_perfect_square(const mpz_class& n);

}  // namespace quadorb
