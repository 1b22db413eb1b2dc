#include "eqc/highfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace eqc {

namespace {

mpfr_prec_t bits_for(unsigned digits10) {
  // log2(10) ~ 3.3219; a few guard bits.
  return static_cast<mpfr_prec_t>(std::ceil(digits10 * 3.3219280948873623)) + 8;
}

}  // namespace

HighFloat::HighFloat(unsigned digits10) : digits10_(std::max(1u, digits10)) {
  mpfr_init2(value_, bits_for(digits10_));
  mpfr_set_zero(value_, 1);
}

HighFloat::HighFloat(double value, unsigned digits10) : HighFloat(digits10) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

HighFloat::HighFloat(const Rational& value, unsigned digits10) : HighFloat(digits10) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

HighFloat::HighFloat(const HighFloat& other) : digits10_(other.digits10_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HighFloat::HighFloat(HighFloat&& other) noexcept : HighFloat(other.digits10_) {
  mpfr_swap(value_, other.value_);
}

HighFloat& HighFloat::operator=(const HighFloat& other) {
  if (this != &other) {
    digits10_ = other.digits10_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

HighFloat& HighFloat::operator=(HighFloat&& other) noexcept {
  std::swap(digits10_, other.digits10_);
  mpfr_swap(value_, other.value_);
  return *this;
}

HighFloat::~HighFloat() { mpfr_clear(value_); }

double HighFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string HighFloat::to_string(unsigned digits) const {
  const unsigned d = digits == 0 ? digits10_ : digits;
  const int n = mpfr_snprintf(nullptr, 0, "%.*Re", static_cast<int>(d - 1), value_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(d - 1), value_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

void HighFloat::widen_to(const HighFloat& o) {
  if (mpfr_get_prec(o.value_) > mpfr_get_prec(value_)) {
    mpfr_prec_round(value_, mpfr_get_prec(o.value_), MPFR_RNDN);
    digits10_ = o.digits10_;
  }
}

HighFloat HighFloat::exp() const {
  HighFloat out(digits10_);
  mpfr_exp(out.value_, value_, MPFR_RNDN);
  return out;
}

HighFloat HighFloat::log() const {
  HighFloat out(digits10_);
  mpfr_log(out.value_, value_, MPFR_RNDN);
  return out;
}

HighFloat HighFloat::abs() const {
  HighFloat out(digits10_);
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

HighFloat HighFloat::pow(const Rational& e) const { return (HighFloat(e, digits10_) * log()).exp(); }

HighFloat& HighFloat::operator+=(const HighFloat& o) {
  widen_to(o);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
HighFloat& HighFloat::operator-=(const HighFloat& o) {
  widen_to(o);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
HighFloat& HighFloat::operator*=(const HighFloat& o) {
  widen_to(o);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
HighFloat& HighFloat::operator/=(const HighFloat& o) {
  widen_to(o);
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

HighFloat HighFloat::operator-() const {
  HighFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

bool operator<(const HighFloat& a, const HighFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
bool operator==(const HighFloat& a, const HighFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

}  // namespace eqc
