#pragma once

#include <gmpxx.h>

#include <string>

namespace autoseq {

using Rational = mpq_class;

// Exact sequence value: zero, or magnitude * e^(2*pi*i*phase) with a positive
// rational magnitude and a rational phase in [0, 1), both in lowest terms.
// Products are exact (magnitudes multiply, phases add mod 1, zero absorbs)
// and equality is structural on the canonical form.
class Value {
 public:
  Value() = default;  // zero

  static Value zero() { return Value(); }
  static Value one();
  // Negative magnitudes are folded into the phase (half turn).
  static Value make(const Rational& magnitude, const Rational& phase);
  static Value integer(long k);
  static Value root_of_unity(unsigned long num, unsigned long den);

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && mag_ == 1 && phase_ == 0; }
  bool unit_magnitude() const { return !zero_ && mag_ == 1; }

  const Rational& magnitude() const { return mag_; }  // 0 when zero
  const Rational& phase() const { return phase_; }    // 0 when zero

  Value operator*(const Value& rhs) const;
  Value abs() const;  // magnitude with phase 0; zero stays zero
  Value squared() const { return *this * *this; }

  bool operator==(const Value&) const = default;
  // Total order (zero first, then magnitude, then phase) for partition maps.
  bool operator<(const Value& rhs) const;

  // "0", "1", "2/3", "1@1/2" (magnitude@phase). Accepts the same forms plus
  // the shorthands "-1", "i", "-i" and signed magnitudes on input.
  std::string str() const;
  static Value parse(const std::string& text);

  // File-format spellings: always "num/den" in lowest terms.
  std::string magnitude_fraction() const;
  std::string phase_fraction() const;

 private:
  bool zero_ = true;
  Rational mag_{0};
  Rational phase_{0};
};

}  // namespace autoseq
