#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quadorb/mat2.hpp"
#include "quadorb/surd.hpp"

namespace quadorb {

/// Real quadratic irrational (P + sqrt(D))/Qd in canonical presentation:
/// D is the discriminant of the primitive integral form with this root,
/// P = -B and Qd = 2A for that form (A,B,C).  Then Qd | D - P^2 and two
/// values are equal iff their triples (D,P,Qd) are equal.
class QuadIrr {
 public:
  QuadIrr() : D_(5), P_(1), Qd_(2) {}  // golden ratio

  /// Canonicalize the value (P0 + mult*sqrt(D0))/Q0.  Requires D0 > 0
  /// non-square, mult != 0, Q0 != 0.
  static QuadIrr from_parts(const mpz_class& P0, const mpz_class& mult, const mpz_class& Q0,
                            const mpz_class& D0);
  /// Shorthand for (P0 + sqrt(D0))/Q0.
  static QuadIrr make(long long P0, long long Q0, long long D0);

  long long D() const { return D_; }
  const mpz_class& P() const { return P_; }
  const mpz_class& Qd() const { return Qd_; }

  SurdD value() const;
  QuadIrr conj() const;

  /// h(alpha) = 2/|alpha - alpha^sigma| = |Qd|/sqrt(D), held exactly.
  /// Compares h(alpha) <=> s for rational s.
  std::strong_ordering h_compare(const mpq_class& s) const;
  bool h_le(const mpq_class& s) const { return h_compare(s) != std::strong_ordering::greater; }
  double h_approx() const;

  /// (a*alpha + b)/(c*alpha + d) for det(g) = +1.
  QuadIrr mobius(const Mat2& g) const;

  mpz_class floor() const;
  /// Representative of alpha mod q*Z in [0, q); q >= 1.
  QuadIrr canonical_mod(unsigned long q = 1) const;

  struct CF {
    std::vector<mpz_class> preperiod;
    std::vector<mpz_class> period;
  };
  /// Eventually periodic continued fraction; period is the minimal cycle.
  CF cf_expand() const;

  /// True iff some cyclic rotation of the CF period equals its reversal,
  /// i.e. alpha and alpha^sigma lie in the same PSL2(Z)-orbit.
  bool is_reciprocal() const;

  bool operator==(const QuadIrr& o) const { return D_ == o.D_ && P_ == o.P_ && Qd_ == o.Qd_; }
  bool operator<(const QuadIrr& o) const {
    if (D_ != o.D_) return D_ < o.D_;
    if (P_ != o.P_) return P_ < o.P_;
    return Qd_ < o.Qd_;
  }

  std::string str() const;
  /// Parses "(P+sqrt(D))/Q" (also "sqrt(D)", "(P-sqrt(D))/Q", whitespace ignored).
  static QuadIrr parse(const std::string& text);

  struct Hash {
    size_t operator()(const QuadIrr& x) const {
      std::hash<std::string> h;
      return h(x.P_.get_str() + "|" + x.Qd_.get_str()) ^ std::hash<long long>()(x.D_);
    }
  };

 private:
  QuadIrr(long long D, mpz_class P, mpz_class Qd) : D_(D), P_(std::move(P)), Qd_(std::move(Qd)) {}

  long long D_;
  mpz_class P_, Qd_;
};

/// True iff some cyclic rotation of w equals its own reversal.
bool palindromic_up_to_rotation(const std::vector<mpz_class>& w);

}  // namespace quadorb
