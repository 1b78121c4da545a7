#include "autoseq/value.hpp"

#include <stdexcept>

namespace autoseq {

namespace {

// Reduce into [0, 1).
Rational wrap_phase(Rational phase) {
  phase.canonicalize();
  mpz_class whole = phase.get_num() / phase.get_den();
  if (phase < 0) {
    // mpz division truncates toward zero; step down to the floor.
    if (whole * phase.get_den() != phase.get_num()) whole -= 1;
  }
  phase -= Rational(whole);
  phase.canonicalize();
  return phase;
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty fraction");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed fraction: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

std::string fraction_str(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

}  // namespace

Value Value::one() { return make(1, 0); }

Value Value::make(const Rational& magnitude, const Rational& phase) {
  Value v;
  Rational mag = magnitude;
  mag.canonicalize();
  Rational ph = phase;
  if (mag == 0) return v;
  if (mag < 0) {
    mag = -mag;
    ph += Rational(1, 2);
  }
  v.zero_ = false;
  v.mag_ = mag;
  v.phase_ = wrap_phase(ph);
  return v;
}

Value Value::integer(long k) { return make(Rational(k), 0); }

Value Value::root_of_unity(unsigned long num, unsigned long den) {
  if (den == 0) throw std::invalid_argument("root_of_unity: zero denominator");
  return make(1, Rational(static_cast<long>(num), static_cast<long>(den)));
}

Value Value::operator*(const Value& rhs) const {
  if (zero_ || rhs.zero_) return Value();
  return make(mag_ * rhs.mag_, phase_ + rhs.phase_);
}

Value Value::abs() const {
  if (zero_) return Value();
  return make(mag_, 0);
}

bool Value::operator<(const Value& rhs) const {
  if (zero_ != rhs.zero_) return zero_;
  if (zero_) return false;
  int c = cmp(mag_, rhs.mag_);
  if (c != 0) return c < 0;
  return cmp(phase_, rhs.phase_) < 0;
}

std::string Value::str() const {
  if (zero_) return "0";
  std::string s = fraction_str(mag_);
  if (phase_ != 0)
    s += "@" + phase_.get_num().get_str() + "/" + phase_.get_den().get_str();
  return s;
}

Value Value::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty value literal");
  if (text == "0") return zero();
  if (text == "i") return root_of_unity(1, 4);
  if (text == "-i") return root_of_unity(3, 4);
  if (text == "+1") return one();
  auto at = text.find('@');
  if (at == std::string::npos) return make(parse_fraction(text), 0);
  return make(parse_fraction(text.substr(0, at)),
              parse_fraction(text.substr(at + 1)));
}

std::string Value::magnitude_fraction() const {
  return mag_.get_num().get_str() + "/" + mag_.get_den().get_str();
}

std::string Value::phase_fraction() const {
  return phase_.get_num().get_str() + "/" + phase_.get_den().get_str();
}

}  // namespace autoseq
