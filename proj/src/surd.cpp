#include "quadorb/surd.hpp"

#include <sstream>

namespace quadorb {

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const mpz_class& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

SurdD::SurdD(long long D, mpq_class a, mpq_class b) : D_(D), a_(std::move(a)), b_(std::move(b)) {
  if (D_ >= 0 && is_perfect_square(mpz_class(D_)))
    throw std::invalid_argument("SurdD: D must not be a perfect square");
  a_.canonicalize();
  b_.canonicalize();
}

static void check_same_D(const SurdD& x, const SurdD& y) {
  if (x.D() != y.D()) throw std::invalid_argument("SurdD: mismatched D");
}

SurdD operator+(const SurdD& x, const SurdD& y) {
  check_same_D(x, y);
  return SurdD(x.D_, x.a_ + y.a_, x.b_ + y.b_);
}

SurdD operator-(const SurdD& x, const SurdD& y) {
  check_same_D(x, y);
  return SurdD(x.D_, x.a_ - y.a_, x.b_ - y.b_);
}

SurdD operator*(const SurdD& x, const SurdD& y) {
  check_same_D(x, y);
  return SurdD(x.D_, x.a_ * y.a_ + x.b_ * y.b_ * x.D_, x.a_ * y.b_ + x.b_ * y.a_);
}

SurdD operator/(const SurdD& x, const SurdD& y) {
  check_same_D(x, y);
  mpq_class n = y.norm();
  if (n == 0) throw std::domain_error("SurdD: division by zero");
  SurdD num = x * y.conj();
  return SurdD(x.D_, num.a_ / n, num.b_ / n);
}

int SurdD::sign() const {
  if (D_ < 0) throw std::domain_error("SurdD::sign: no real order for D < 0");
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: sign decided by |a|^2 vs |b|^2 D
  mpq_class lhs = a_ * a_, rhs = b_ * b_ * D_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // impossible for D non-square with b != 0, kept for safety
  return c > 0 ? sa : sb;
}

std::strong_ordering SurdD::compare(const SurdD& o) const {
  check_same_D(*this, o);
  int s = (*this - o).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

MpReal SurdD::to_real(mpfr_prec_t bits) const {
  if (bits < 16) throw std::invalid_argument("to_real: need bits >= 16");
  mpfr_prec_t work = bits + 32;
  MpReal r(work);
  mpfr_t s, t;
  mpfr_init2(s, work);
  mpfr_init2(t, work);
  if (D_ >= 0) {
    mpfr_sqrt_ui(s, static_cast<unsigned long>(D_), MPFR_RNDN);
  } else {
    throw std::domain_error("to_real: D < 0 has no real embedding");
  }
  mpfr_set_q(t, b_.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(s, s, t, MPFR_RNDN);
  mpfr_set_q(t, a_.get_mpq_t(), MPFR_RNDN);
  mpfr_add(r.raw(), s, t, MPFR_RNDN);
  mpfr_clear(s);
  mpfr_clear(t);
  return r;
}

std::string SurdD::str() const {
  std::ostringstream os;
  os << a_;
  if (b_ != 0) os << (b_ > 0 ? "+" : "") << b_ << "*sqrt(" << D_ << ")";
  return os.str();
}

}  // namespace quadorb
