#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ballean {

/// Positive integers extended by infinity.
///
/// Carries the exact argument of a logarithmic distance (a covering number or
/// a subgroup index). Logarithms are only taken when a value is displayed.
class ExtNat {
public:
  ExtNat() : value_(1) {}
  ExtNat(const mpz_class& v) : value_(v) { check(); }
  ExtNat(long v) : value_(v) { check(); }

  static ExtNat infinity() {
    ExtNat e;
    e.infinite_ = true;
    return e;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  const mpz_class& value() const {
    if (infinite_) throw std::logic_error("ExtNat: value of infinity");
    return value_;
  }

  /// log_base of the value; +inf for infinity.
  double log(double base = std::exp(1.0)) const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, value_.get_mpz_t());
    return (std::log(mant) + static_cast<double>(exp2) * std::log(2.0)) /
           std::log(base);
  }

  std::string to_string() const { return infinite_ ? "inf" : value_.get_str(); }

  friend ExtNat operator*(const ExtNat& a, const ExtNat& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtNat(mpz_class(a.value_ * b.value_));
  }

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtNat& e) {
    return os << e.to_string();
  }

private:
  void check() const {
    if (value_ < 1) throw std::invalid_argument("ExtNat: finite value must be >= 1");
  }

  mpz_class value_;
  bool infinite_ = false;
};

inline ExtNat max(const ExtNat& a, const ExtNat& b) { return a < b ? b : a; }

} // namespace ballean
