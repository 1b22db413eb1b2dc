#pragma once

#include <string>

#include <mpfr.h>

#include "eqc/rational.hpp"

namespace eqc {

/// Multiple-precision binary float with an explicit per-value precision.
/// Results of binary operations carry the larger operand precision.
class HighFloat {
 public:
  /// Precision given in significant decimal digits.
  explicit HighFloat(unsigned digits10 = 50);
  HighFloat(double value, unsigned digits10);
  HighFloat(const Rational& value, unsigned digits10);
  HighFloat(const HighFloat& other);
  HighFloat(HighFloat&& other) noexcept;
  HighFloat& operator=(const HighFloat& other);
  HighFloat& operator=(HighFloat&& other) noexcept;
  ~HighFloat();

  [[nodiscard]] unsigned digits10() const { return digits10_; }
  [[nodiscard]] double to_double() const;
  /// Scientific notation with `digits` significant digits (default: own precision).
  [[nodiscard]] std::string to_string(unsigned digits = 0) const;

  [[nodiscard]] HighFloat exp() const;
  [[nodiscard]] HighFloat log() const;
  [[nodiscard]] HighFloat abs() const;
  /// this^e for exact rational e, via exp(e * log(this)).
  [[nodiscard]] HighFloat pow(const Rational& e) const;

  HighFloat& operator+=(const HighFloat& o);
  HighFloat& operator-=(const HighFloat& o);
  HighFloat& operator*=(const HighFloat& o);
  HighFloat& operator/=(const HighFloat& o);
  friend HighFloat operator+(HighFloat a, const HighFloat& b) { return a += b; }
  friend HighFloat operator-(HighFloat a, const HighFloat& b) { return a -= b; }
  friend HighFloat operator*(HighFloat a, const HighFloat& b) { return a *= b; }
  friend HighFloat operator/(HighFloat a, const HighFloat& b) { return a /= b; }
  HighFloat operator-() const;

  friend bool operator<(const HighFloat& a, const HighFloat& b);
  friend bool operator>(const HighFloat& a, const HighFloat& b) { return b < a; }
  friend bool operator<=(const HighFloat& a, const HighFloat& b) { return !(b < a); }
  friend bool operator>=(const HighFloat& a, const HighFloat& b) { return !(a < b); }
  friend bool operator==(const HighFloat& a, const HighFloat& b);

 private:
  void widen_to(const HighFloat& o);
  unsigned digits10_;
  mpfr_t value_;
};

}  // namespace eqc
