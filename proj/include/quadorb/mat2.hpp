#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace quadorb {

/// Integer 2x2 matrix (rows (a b; c d)) with determinant +1 or -1.
struct Mat2 {
  mpz_class a, b, c, d;

  Mat2() : a(1), b(0), c(0), d(1) {}
  Mat2(mpz_class a_, mpz_class b_, mpz_class c_, mpz_class d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity() { return Mat2(); }

  mpz_class det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return Mat2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
  }

  /// Inverse for det = +-1 (adjugate divided by det).
  Mat2 inv() const {
    mpz_class dt = det();
    if (dt == 1) return Mat2(d, -b, -c, a);
    if (dt == -1) return Mat2(-d, b, c, -a);
    throw std::domain_error("Mat2::inv: determinant not +-1");
  }

  Mat2 operator-() const { return Mat2(-a, -b, -c, -d); }

  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

  /// Same element of PSL2: equal up to overall sign.
  bool psl_equal(const Mat2& o) const { return *this == o || *this == -o; }

  Mat2 pow(unsigned long k) const {
    Mat2 r, base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  std::string str() const {
    return "[" + a.get_str() + "," + b.get_str() + ";" + c.get_str() + "," + d.get_str() + "]";
  }
};

}  // namespace quadorb
