#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace quadorb {

/// Thin RAII wrapper over an mpfr_t at a fixed precision.  Only the
/// operations the library needs; rounding mode is explicit where it matters.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec = 128) : prec_(prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  MpReal(const MpReal& o) : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_set(v_, o.v_, MPFR_RNDN); }
  MpReal(MpReal&& o) noexcept : prec_(o.prec_) { mpfr_init2(v_, prec_); mpfr_swap(v_, o.v_); }
  MpReal& operator=(MpReal o) noexcept { std::swap(prec_, o.prec_); mpfr_swap(v_, o.v_); return *this; }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return prec_; }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static MpReal from_double(double x, mpfr_prec_t prec = 128) {
    MpReal r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r;
  }
  static MpReal from_mpz(const mpz_class& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    MpReal r(prec); mpfr_set_z(r.v_, z.get_mpz_t(), rnd); return r;
  }
  static MpReal from_mpq(const mpq_class& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    MpReal r(prec); mpfr_set_q(r.v_, q.get_mpq_t(), rnd); return r;
  }
  static MpReal pi(mpfr_prec_t prec) { MpReal r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  std::string str(size_t digits = 0) const {
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string out(s);
    mpfr_free_str(s);
    bool neg = !out.empty() && out[0] == '-';
    std::string mant = neg ? out.substr(1) : out;
    std::string res = (neg ? "-" : "");
    res += "0." + mant + "e" + std::to_string(e);
    return res;
  }

  friend MpReal operator+(const MpReal& a, const MpReal& b) {
    MpReal r(std::max(a.prec_, b.prec_)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend MpReal operator-(const MpReal& a, const MpReal& b) {
    MpReal r(std::max(a.prec_, b.prec_)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend MpReal operator*(const MpReal& a, const MpReal& b) {
    MpReal r(std::max(a.prec_, b.prec_)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend MpReal operator/(const MpReal& a, const MpReal& b) {
    MpReal r(std::max(a.prec_, b.prec_)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }

 private:
  mpfr_prec_t prec_;
  mpfr_t v_;
};

}  // namespace quadorb
