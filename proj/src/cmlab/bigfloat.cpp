#include "x0lab/cmlab/bigfloat.hpp"

#include <algorithm>
#include <memory>

namespace x0lab::cmlab {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_si(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(const Integer& v, mpfr_prec_t bits) : BigFloat(bits) {
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, mpfr_prec_t bits) : BigFloat(bits) {
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(other.precision()) { mpfr_swap(v_, other.v_); }

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat out(bits);
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

namespace {

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
  BigFloat out(std::max(a.precision(), b.precision()));
  op(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

template <typename Op>
BigFloat unary(const BigFloat& a, Op op) {
  BigFloat out(a.precision());
  op(out.get(), a.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

BigFloat BigFloat::mul_ui(unsigned long k) const {
  BigFloat out(precision());
  mpfr_mul_ui(out.v_, v_, k, MPFR_RNDN);
  return out;
}

Integer BigFloat::round() const {
  if (!mpfr_number_p(v_)) throw MathError("rounding a non-finite value");
  Integer out;
  BigFloat r(precision());
  mpfr_round(r.v_, v_);
  mpfr_get_z(out.get_mpz_t(), r.v_, MPFR_RNDN);
  return out;
}

long BigFloat::exponent2() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_)) - 1;
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(buf, &mpfr_free_str);
  return std::string(buf);
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigFloat n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw MathError("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

BigFloat abs(const BigComplex& z) { return binary(z.re, z.im, mpfr_hypot); }

BigComplex exp(const BigComplex& z) {
  const BigFloat m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

}  // namespace x0lab::cmlab
